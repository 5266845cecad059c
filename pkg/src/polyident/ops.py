"""Multilinear operations, operation terms, and the expansion map.

An operation term is a tree whose leaves are variable indices and whose
interior nodes are tuples ``(name, child_1, ..., child_k)``.  Each named
operation is backed by a multilinear polynomial in the free nonassociative
algebra; :func:`expand` substitutes those polynomials recursively.

Terms are stored in a canonical form: arguments in skew-symmetric slots are
sorted (flipping the sign), repeated arguments in a skew slot annihilate the
term, and arguments in symmetric slots are sorted.  With ``power_rules=True``
the associator and first quaternator also vanish on equal arguments; that is
only valid in power associative algebras and is used for nonlinear work.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import freealg
from .freealg import Polynomial, associator, commutator, linear_combination, mul, product, var

LETTERS = freealg.LETTERS


class OperationError(ValueError):
    pass


@dataclass(frozen=True)
class OperationSymbol:
    name: str
    arity: int
    polynomial: Polynomial = field(compare=False, repr=False)
    skew: tuple = ()  # pairs of argument slots
    symmetric: tuple = ()  # groups of argument slots
    vanishes_on_diagonal: bool = False  # X(x,...,x) = 0 in power associative algebras

    def render(self, args: Sequence[str]) -> str:
        if self.name == "comm":
            return f"[{args[0]},{args[1]}]"
        if self.name == "assoc":
            return f"({args[0]},{args[1]},{args[2]})"
        return f"{self.name}({','.join(args)})"


class Registry:
    """Named operations; each symbol's declared symmetries are checked on entry."""

    def __init__(self):
        self.symbols: dict = {}
        self.order: dict = {}

    def register(self, symbol: OperationSymbol) -> OperationSymbol:
        p = symbol.polynomial
        if p.degrees() != {symbol.arity} or any(sorted(freealg.word(m)) != list(range(symbol.arity)) for m in p):
            raise OperationError(f"{symbol.name}: defining polynomial must be multilinear of degree {symbol.arity}")
        for i, j in symbol.skew:
            if p.relabel(_swap(symbol.arity, i, j)) != -p:
                raise OperationError(f"{symbol.name}: not skew-symmetric in slots {i},{j}")
        for group in symbol.symmetric:
            for i, j in itertools.combinations(group, 2):
                if p.relabel(_swap(symbol.arity, i, j)) != p:
                    raise OperationError(f"{symbol.name}: not symmetric in slots {i},{j}")
        self.symbols[symbol.name] = symbol
        self.order.setdefault(symbol.name, len(self.order))
        _clear_caches()
        return symbol

    def __getitem__(self, name: str) -> OperationSymbol:
        try:
            return self.symbols[name]
        except KeyError:
            raise OperationError(f"unregistered operation {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.symbols


def _swap(n, i, j):
    m = list(range(n))
    m[i], m[j] = j, i
    return m


# ---------------------------------------------------------------------------
# polynomials p_{m,n} and the Sabinin operations


def two_decompositions(word: Sequence) -> list:
    """All ordered pairs of complementary increasing subwords of ``word``."""
    m = len(word)
    out = []
    for k in range(m, -1, -1):
        for chosen in itertools.combinations(range(m), k):
            rest = [i for i in range(m) if i not in chosen]
            out.append((tuple(word[i] for i in chosen), tuple(word[i] for i in rest)))
    return out


MAX_PMN_DEGREE = 7


def _p(xs: tuple, ys: tuple, z: Polynomial) -> Polynomial:
    if len(xs) == 1 and len(ys) == 1:
        return associator(xs[0], ys[0], z)
    total = associator(product(*xs), product(*ys), z)
    for u1, u2 in two_decompositions(xs):
        if not u2:
            continue
        for v1, v2 in two_decompositions(ys):
            if not v2 or not (u1 or v1):
                continue
            # u1 and v1 are separate left-normed words: (u1 v1) p, not one long word
            if u1 and v1:
                prefix = mul(product(*u1), product(*v1))
            else:
                prefix = product(*(u1 or v1))
            total = total - mul(prefix, _p(u2, v2, z))
    return total


@lru_cache(maxsize=None)
def p_mn(m: int, n: int) -> Polynomial:
    """p_{m,n}(x_1...x_m, y_1...y_n, z) on variables 0..m+n in that order."""
    if m < 1 or n < 1 or m + n + 1 > MAX_PMN_DEGREE:
        raise OperationError(f"p_mn needs m, n >= 1 and m+n+1 <= {MAX_PMN_DEGREE}; got m={m}, n={n}")
    xs = tuple(var(i) for i in range(m))
    ys = tuple(var(m + j) for j in range(n))
    return _p(xs, ys, var(m + n))


MAX_SABININ_DEGREE = 5


@lru_cache(maxsize=None)
def sabinin_bracket(m: int) -> Polynomial:
    """<x_1,...,x_m; y, z> on variables 0..m+1."""
    if m < 0 or m + 2 > MAX_SABININ_DEGREE:
        raise OperationError(f"Sabinin brackets are available up to degree {MAX_SABININ_DEGREE}")
    if m == 0:
        return -commutator(var(0), var(1))
    p = p_mn(m, 1)
    return -p + p.relabel(list(range(m)) + [m + 1, m])


@lru_cache(maxsize=None)
def sabinin_phi(m: int, n: int) -> Polynomial:
    """Phi_{m,n}(x_1..x_m; y_1..y_n) on variables 0..m+n-1."""
    if m < 1 or n < 2 or m + n > MAX_SABININ_DEGREE:
        raise OperationError(f"Phi_(m,n) needs m >= 1, n >= 2 and m+n <= {MAX_SABININ_DEGREE}")
    p = p_mn(m, n - 1)
    terms = []
    for sigma in itertools.permutations(range(m)):
        for tau in itertools.permutations(range(m, m + n)):
            terms.append((1, p.relabel(list(sigma) + list(tau))))
    return linear_combination(terms).scale(Fraction(1, math.factorial(m) * math.factorial(n)))


def _quaternators():
    a, b, c, d = (var(i) for i in range(4))
    q1 = associator(mul(a, b), c, d) - mul(a, associator(b, c, d)) - mul(associator(a, c, d), b)
    q2 = associator(a, mul(b, c), d) - mul(b, associator(a, c, d)) - mul(associator(a, b, d), c)
    return q1, q2


def _quinquenators():
    a, b, c, d, e = (var(i) for i in range(5))
    A = associator
    v1 = (A(mul(mul(a, b), c), d, e) - mul(A(mul(a, b), d, e), c) - mul(A(mul(a, c), d, e), b)
          - mul(A(mul(b, c), d, e), a) + mul(mul(A(a, d, e), c), b) + mul(mul(A(b, d, e), c), a)
          + mul(mul(A(c, d, e), b), a))
    v2 = (A(a, mul(mul(b, c), d), e) - mul(A(a, mul(b, c), e), d) - mul(A(a, mul(b, d), e), c)
          - mul(A(a, mul(c, d), e), b) + mul(mul(A(a, b, e), d), c) + mul(mul(A(a, c, e), d), b)
          + mul(mul(A(a, d, e), c), b))
    v3 = (A(a, b, mul(mul(c, d), e)) - mul(A(a, b, mul(c, d)), e) - mul(A(a, b, mul(c, e)), d)
          - mul(A(a, b, mul(d, e)), c) + mul(mul(A(a, b, c), e), d) + mul(mul(A(a, b, d), e), c)
          + mul(mul(A(a, b, e), d), c))
    return v1, v2, v3


def default_registry() -> Registry:
    reg = Registry()
    a, b, c = var(0), var(1), var(2)
    q1, q2 = _quaternators()
    v1, v2, v3 = _quinquenators()
    reg.register(OperationSymbol("comm", 2, commutator(a, b), skew=((0, 1),)))
    reg.register(OperationSymbol("assoc", 3, associator(a, b, c), vanishes_on_diagonal=True))
    reg.register(OperationSymbol("Q1", 4, q1, vanishes_on_diagonal=True))
    reg.register(OperationSymbol("Q2", 4, q2))
    reg.register(OperationSymbol("S2", 2, sabinin_bracket(0), skew=((0, 1),)))
    reg.register(OperationSymbol("S3", 3, sabinin_bracket(1), skew=((1, 2),)))
    reg.register(OperationSymbol("S4", 4, sabinin_bracket(2), skew=((2, 3),)))
    reg.register(OperationSymbol("Phi12", 3, sabinin_phi(1, 2), symmetric=((1, 2),)))
    reg.register(OperationSymbol("Phi13", 4, sabinin_phi(1, 3), symmetric=((1, 2, 3),)))
    reg.register(OperationSymbol("Phi22", 4, sabinin_phi(2, 2), symmetric=((0, 1), (2, 3))))
    reg.register(OperationSymbol("V1", 5, v1))
    reg.register(OperationSymbol("V2", 5, v2))
    reg.register(OperationSymbol("V3", 5, v3))
    return reg


REGISTRY = Registry()

SIGNATURES = {
    "akivis": ("comm", "assoc"),
    "btq": ("comm", "assoc", "Q1"),
    "btqq": ("comm", "assoc", "Q1", "Q2"),
    "sabinin4": ("S2", "S3", "S4", "Phi12", "Phi13", "Phi22"),
}


# ---------------------------------------------------------------------------
# term structure


def is_leaf(t) -> bool:
    return isinstance(t, int)


@lru_cache(maxsize=None)
def degree(t) -> int:
    if isinstance(t, int):
        return 1
    return sum(degree(c) for c in t[1:])


@lru_cache(maxsize=None)
def word(t) -> tuple:
    if isinstance(t, int):
        return (t,)
    return tuple(itertools.chain.from_iterable(word(c) for c in t[1:]))


def shape(t):
    it = itertools.count()

    def walk(s):
        if isinstance(s, int):
            return next(it)
        return (s[0],) + tuple(walk(c) for c in s[1:])

    return walk(t)


def fill(shape_, letters: Sequence[int]):
    it = iter(letters)

    def walk(s):
        if isinstance(s, int):
            return next(it)
        return (s[0],) + tuple(walk(c) for c in s[1:])

    return walk(shape_)


def relabel(t, mapping):
    if isinstance(t, int):
        return mapping[t]
    return (t[0],) + tuple(relabel(c, mapping) for c in t[1:])


@lru_cache(maxsize=None)
def shape_key(t) -> tuple:
    # arity of the outer operation, registry order, then heavier arguments first
    if isinstance(t, int):
        return (0,)
    kids = t[1:]
    return (len(kids), REGISTRY.order[t[0]], tuple(-degree(c) for c in kids), tuple(shape_key(c) for c in kids))


@lru_cache(maxsize=None)
def arg_key(t) -> tuple:
    return (-degree(t), shape_key(t), word(t))


@lru_cache(maxsize=None)
def _canon(t, power_rules: bool):
    """Return ``(sign, canonical term)``; sign 0 means the term vanishes."""
    if isinstance(t, int):
        return 1, t
    sym = REGISTRY[t[0]]
    if len(t) - 1 != sym.arity:
        raise OperationError(f"{sym.name} takes {sym.arity} arguments, got {len(t) - 1}")
    sign = 1
    kids = []
    for c in t[1:]:
        s, k = _canon(c, power_rules)
        if s == 0:
            return 0, None
        sign *= s
        kids.append(k)
    for i, j in sym.skew:
        ki, kj = arg_key(kids[i]), arg_key(kids[j])
        if ki == kj:
            return 0, None
        if ki > kj:
            kids[i], kids[j] = kids[j], kids[i]
            sign = -sign
    for group in sym.symmetric:
        ordered = sorted((kids[i] for i in group), key=arg_key)
        for i, k in zip(group, ordered):
            kids[i] = k
    if power_rules and sym.vanishes_on_diagonal and all(k == kids[0] for k in kids):
        return 0, None
    return sign, (t[0],) + tuple(kids)


def canonicalize(t, power_rules: bool = False) -> tuple:
    return _canon(t, power_rules)


def term_key(t) -> tuple:
    return (degree(t), shape_key(shape(t)), word(t))


def render_term(t) -> str:
    if isinstance(t, int):
        return LETTERS[t]
    return REGISTRY[t[0]].render([render_term(c) for c in t[1:]])


# ---------------------------------------------------------------------------
# operation polynomials


class OpPolynomial:
    """Rational combination of canonical operation terms."""

    __slots__ = ("_terms", "power_rules")

    def __init__(self, terms: Mapping | Iterable | None = None, power_rules: bool = False):
        self.power_rules = power_rules
        out: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for t, c in items:
            s, k = _canon(t, power_rules)
            if s == 0 or c == 0:
                continue
            v = out.get(k, 0) + s * Fraction(c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        self._terms = out

    @classmethod
    def term(cls, t, coeff=1, power_rules: bool = False) -> "OpPolynomial":
        return cls({t: coeff}, power_rules=power_rules)

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, OpPolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _combine(self, pairs) -> "OpPolynomial":
        out = OpPolynomial(power_rules=self.power_rules)
        acc: dict = {}
        for c, p in pairs:
            for k, v in p._terms.items():
                w = acc.get(k, 0) + c * v
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
        out._terms = acc
        return out

    def __add__(self, other: "OpPolynomial") -> "OpPolynomial":
        return self._combine([(1, self), (1, other)])

    def __sub__(self, other: "OpPolynomial") -> "OpPolynomial":
        return self._combine([(1, self), (-1, other)])

    def __neg__(self) -> "OpPolynomial":
        return self._combine([(-1, self)])

    def scale(self, c) -> "OpPolynomial":
        return self._combine([(Fraction(c), self)])

    def __rmul__(self, c) -> "OpPolynomial":
        return self.scale(c)

    def relabel(self, mapping) -> "OpPolynomial":
        return OpPolynomial({relabel(t, mapping): c for t, c in self._terms.items()}, power_rules=self.power_rules)

    def degrees(self) -> set:
        return {degree(t) for t in self._terms}

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda tc: term_key(tc[0]))

    def __str__(self) -> str:
        return render_op_polynomial(self)

    def __repr__(self) -> str:
        return f"OpPolynomial({render_op_polynomial(self)!r})"


def op_sum(pairs: Iterable, power_rules: bool = False) -> OpPolynomial:
    """``sum(coeff * p)`` over ``(coeff, OpPolynomial)`` pairs."""
    return OpPolynomial(power_rules=power_rules)._combine([(Fraction(c), p) for c, p in pairs])


def render_op_polynomial(p: OpPolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for i, (t, c) in enumerate(p.sorted_terms()):
        mag = abs(c)
        body = render_term(t) if mag == 1 else f"{freealg.render_rational(mag)}*{render_term(t)}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# expansion


def _substitute(template: Polynomial, args: Sequence[dict]) -> dict:
    """Replace leaf ``j`` of every template monomial by the polynomial ``args[j]``."""

    def walk(m):
        if isinstance(m, int):
            return args[m]
        left, right = walk(m[0]), walk(m[1])
        out: dict = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                k = (m1, m2)
                out[k] = out.get(k, 0) + c1 * c2
        return out

    total: dict = {}
    for m, c in template.items():
        for k, v in walk(m).items():
            total[k] = total.get(k, 0) + c * v
    return {k: v for k, v in total.items() if v}


@lru_cache(maxsize=200_000)
def _expand_term(t) -> dict:
    if isinstance(t, int):
        return {t: Fraction(1)}
    sym = REGISTRY[t[0]]
    return _substitute(sym.polynomial, [_expand_term(c) for c in t[1:]])


def expand(x) -> Polynomial:
    """The expansion map into the free nonassociative algebra (linear)."""
    if isinstance(x, OpPolynomial):
        acc: dict = {}
        for t, c in x.items():
            for m, v in _expand_term(t).items():
                w = acc.get(m, 0) + c * v
                if w:
                    acc[m] = w
                else:
                    acc.pop(m, None)
        return Polynomial._raw(acc)
    return Polynomial(_expand_term(x))


def _clear_caches():
    for f in (_canon, _expand_term, shape_key, arg_key):
        f.cache_clear()


def compose(p: OpPolynomial, definitions: Mapping) -> OpPolynomial:
    """Rewrite every operation named in ``definitions`` by its defining OpPolynomial.

    ``definitions[name]`` is an OpPolynomial in variables ``0..arity-1``; the
    rewrite is applied bottom-up, so definitions may themselves be nested.
    ``p`` may also be a plain mapping of raw (uncanonicalized) terms, which
    keeps relations such as skew-symmetry visible to the rewrite.
    """

    def walk(t) -> dict:
        if isinstance(t, int):
            return {t: Fraction(1)}
        kids = [walk(c) for c in t[1:]]
        if t[0] not in definitions:
            out: dict = {}
            for combo in itertools.product(*(k.items() for k in kids)):
                node = (t[0],) + tuple(k for k, _ in combo)
                coeff = math.prod((v for _, v in combo), start=Fraction(1))
                out[node] = out.get(node, 0) + coeff
            return out
        out = {}
        for tt, c in definitions[t[0]].items():
            for k, v in _plug(tt, kids).items():
                out[k] = out.get(k, 0) + c * v
        return out

    acc: dict = {}
    for t, c in p.items():
        for k, v in walk(t).items():
            acc[k] = acc.get(k, 0) + c * v
    return OpPolynomial(acc, power_rules=getattr(p, "power_rules", False))


def _plug(template, args: Sequence[dict]) -> dict:
    if isinstance(template, int):
        return args[template]
    kids = [_plug(c, args) for c in template[1:]]
    out: dict = {}
    for combo in itertools.product(*(k.items() for k in kids)):
        node = (template[0],) + tuple(k for k, _ in combo)
        out[node] = out.get(node, 0) + math.prod((v for _, v in combo), start=Fraction(1))
    return out


def substitute(p: OpPolynomial, args: Sequence[OpPolynomial], power_rules: bool | None = None) -> OpPolynomial:
    """Replace variable ``j`` of ``p`` by the operation polynomial ``args[j]``."""
    rules = p.power_rules if power_rules is None else power_rules
    acc: dict = {}
    plug_args = [dict(a.items()) for a in args]
    for t, c in p.items():
        for k, v in _plug(t, plug_args).items():
            acc[k] = acc.get(k, 0) + c * v
    return OpPolynomial(acc, power_rules=rules)


# ---------------------------------------------------------------------------
# named elements


def comm(x, y):
    return ("comm", x, y)


def assoc(x, y, z):
    return ("assoc", x, y, z)


def op(name: str, *args):
    return (name,) + args


_AKIVIS = {
    1: lambda a, b, c, d: comm(comm(comm(a, b), c), d),
    2: lambda a, b, c, d: comm(assoc(a, b, c), d),
    3: lambda a, b, c, d: comm(comm(a, b), comm(c, d)),
    4: lambda a, b, c, d: assoc(comm(a, b), c, d),
    5: lambda a, b, c, d: assoc(a, comm(b, c), d),
    6: lambda a, b, c, d: assoc(a, b, comm(c, d)),
}


def akivis_element(i: int, args: Sequence[int] = (0, 1, 2, 3)):
    """The degree-4 Akivis element A_i as an operation term."""
    if i not in _AKIVIS:
        raise OperationError(f"Akivis elements are numbered 1..6, got {i}")
    return _AKIVIS[i](*args)


def quaternator(i: int, args: Sequence[int] = (0, 1, 2, 3)):
    if i not in (1, 2):
        raise OperationError(f"quaternators are numbered 1..2, got {i}")
    return (f"Q{i}",) + tuple(args)


def quinquenator(i: int, args: Sequence[int] = (0, 1, 2, 3, 4)):
    if i not in (1, 2, 3):
        raise OperationError(f"quinquenators are numbered 1..3, got {i}")
    return (f"V{i}",) + tuple(args)


# ---------------------------------------------------------------------------
# monomial enumeration


@lru_cache(maxsize=None)
def _shapes(signature: tuple, n: int) -> tuple:
    if n == 1:
        return (0,)
    out = []
    for name in signature:
        k = REGISTRY[name].arity
        if k > n:
            continue
        for comp in _compositions(n, k):
            for kids in itertools.product(*(_shapes(signature, part) for part in comp)):
                out.append(shape((name,) + kids))
    return tuple(out)


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(n - k + 1, 0, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _signature(signature) -> tuple:
    if isinstance(signature, str):
        try:
            return SIGNATURES[signature]
        except KeyError:
            raise OperationError(f"unknown signature {signature!r}") from None
    return tuple(signature)


@lru_cache(maxsize=None)
def operation_types(signature, n: int) -> tuple:
    """Canonical operation shapes of degree n, each filled with the identity word."""
    sig = _signature(signature)
    found = set()
    for s in _shapes(sig, n):
        sign, t = _canon(fill(s, range(n)), False)
        if sign:
            found.add(shape(t))
    return tuple(sorted(found, key=shape_key))


@lru_cache(maxsize=None)
def canonical_monomials(signature, n: int) -> tuple:
    """All canonical multilinear operation monomials of degree n, type-major."""
    if n > 6:
        raise OperationError("canonical monomials are enumerated up to degree 6")
    sig = _signature(signature)
    found = set()
    for s in _shapes(sig, n):
        for perm in itertools.permutations(range(n)):
            sign, t = _canon(fill(s, perm), False)
            if sign:
                found.add(t)
    return tuple(sorted(found, key=term_key))


class OperationBasis:
    """Canonical multilinear operation monomials of one degree, indexed for matrices."""

    def __init__(self, signature, n: int):
        self.signature = _signature(signature)
        self.n = n
        self.types = operation_types(signature, n)
        self.type_index = {t: i for i, t in enumerate(self.types)}
        self.monomials = canonical_monomials(signature, n)
        self.index = {t: i for i, t in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, i: int):
        return self.monomials[i]

    def classify(self, t) -> tuple:
        return self.type_index[shape(t)], word(t)

    def sparse(self, p: OpPolynomial) -> dict:
        try:
            return {self.index[t]: c for t, c in p.items()}
        except KeyError as exc:
            raise OperationError(f"term {render_term(exc.args[0])} is outside the degree-{self.n} basis") from None

    def vector(self, p: OpPolynomial) -> list:
        vec = [Fraction(0)] * len(self)
        for k, c in self.sparse(p).items():
            vec[k] = c
        return vec

    def polynomial(self, vec) -> OpPolynomial:
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return OpPolynomial({self.monomials[i]: c for i, c in items if c})


@lru_cache(maxsize=None)
def operation_basis(signature, n: int) -> OperationBasis:
    return OperationBasis(signature, n)


def type_counts(signature, n: int) -> list:
    counts: dict = {}
    for t in canonical_monomials(signature, n):
        counts[shape(t)] = counts.get(shape(t), 0) + 1
    return [counts[s] for s in operation_types(signature, n)]


def specialize(p, pattern, power_rules: bool = True) -> OpPolynomial:
    """Substitute variable j by ``pattern[j]`` and canonicalize the nonlinear result."""
    pat = parse_pattern(pattern)
    if isinstance(p, OpPolynomial):
        items = p.items()
        n = max((degree(t) for t in p), default=len(pat))
    else:
        items = [(p, 1)]
        n = degree(p)
    if n != len(pat):
        raise OperationError(f"pattern {pattern!r} has length {len(pat)} but the input has degree {n}")
    return OpPolynomial({relabel(t, pat): c for t, c in items}, power_rules=power_rules)


def parse_pattern(pattern) -> tuple:
    if isinstance(pattern, str):
        if not pattern.isalpha() or not pattern.islower():
            raise OperationError(f"patterns are words in a..z, got {pattern!r}")
        return tuple(LETTERS.index(ch) for ch in pattern)
    return tuple(pattern)


# ---------------------------------------------------------------------------
# text form:  1/4*[[a,b],[c,d]] - 2*(a,b,(c,d,e))


class _TermParser:
    _name = re.compile(r"[A-Z][A-Za-z0-9]*")
    _coeff = re.compile(r"\d+(?:/\d+)?")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise OperationError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def args(self, close: str) -> list:
        out = [self.term()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.term())
        self.take(close)
        return out

    def term(self):
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            kids = self.args("]")
            if len(kids) != 2:
                self.error("a commutator takes two arguments")
            return ("comm",) + tuple(kids)
        if ch == "(":
            self.pos += 1
            kids = self.args(")")
            if len(kids) != 3:
                self.error("an associator takes three arguments")
            return ("assoc",) + tuple(kids)
        m = self._name.match(self.text, self.pos)
        if m:
            name = m.group(0)
            if name not in REGISTRY:
                self.error(f"unknown operation {name!r}")
            self.pos = m.end()
            self.take("(")
            kids = self.args(")")
            if len(kids) != REGISTRY[name].arity:
                self.error(f"{name} takes {REGISTRY[name].arity} arguments")
            return (name,) + tuple(kids)
        if ch and ch in LETTERS:
            self.pos += 1
            return LETTERS.index(ch)
        self.error("expected a term")

    def polynomial(self, power_rules: bool) -> OpPolynomial:
        return OpPolynomial(self.pairs(), power_rules=power_rules)

    def pairs(self) -> list:
        if self.text.strip() == "0":
            return []
        pairs = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            self.peek()
            c = Fraction(1)
            m = self._coeff.match(self.text, self.pos)
            if m:
                c = Fraction(m.group(0))
                self.pos = m.end()
                self.take("*")
            pairs.append((self.term(), sign * c))
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error("expected '+' or '-'")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return pairs


def parse_term(text: str):
    """Parse a single operation term (no coefficient)."""
    p = _TermParser(text)
    t = p.term()
    if p.peek():
        p.error("trailing input")
    return t


def parse_op_polynomial(text: str, power_rules: bool = False) -> OpPolynomial:
    return _TermParser(text).polynomial(power_rules)


def parse_raw(text: str) -> dict:
    """Parse without canonicalizing: ``{term: coefficient}`` exactly as written."""
    out: dict = {}
    for t, c in _TermParser(text).pairs():
        out[t] = out.get(t, 0) + c
    return {t: c for t, c in out.items() if c}


for _sym in default_registry().symbols.values():
    REGISTRY.register(_sym)
del _sym
