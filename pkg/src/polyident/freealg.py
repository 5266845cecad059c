"""The free nonassociative algebra over the rationals.

Monomials are binary trees stored as nested tuples: a leaf is a variable
index (``0`` renders as ``a``, ``1`` as ``b``, ...) and an interior node is a
pair ``(left, right)``.  Tuples are hashable and cheap to compare, which keeps
polynomial arithmetic on plain dictionaries fast.

Polynomials map monomials to nonzero :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = Union[int, tuple]

LETTERS = "abcdefghijklmnopqrstuvwxyz"
MAX_BASIS_DEGREE = 7


class FreeAlgebraError(ValueError):
    pass


def letter(index: int) -> str:
    return LETTERS[index]


def is_leaf(m: Monomial) -> bool:
    return isinstance(m, int)


@lru_cache(maxsize=None)
def degree(m: Monomial) -> int:
    if isinstance(m, int):
        return 1
    return degree(m[0]) + degree(m[1])


def word(m: Monomial) -> tuple:
    """Leaf variables of ``m`` read left to right."""
    if isinstance(m, int):
        return (m,)
    return word(m[0]) + word(m[1])


def shape(m: Monomial) -> Monomial:
    """The association type of ``m``: same tree, leaves renumbered 0, 1, 2, ..."""
    it = itertools.count()

    def walk(t):
        if isinstance(t, int):
            return next(it)
        return (walk(t[0]), walk(t[1]))

    return walk(m)


def fill(shape_: Monomial, letters: Sequence[int]) -> Monomial:
    """Place ``letters`` into the leaves of ``shape_`` in left-to-right order."""
    it = iter(letters)

    def walk(t):
        if isinstance(t, int):
            return next(it)
        return (walk(t[0]), walk(t[1]))

    return walk(shape_)


@lru_cache(maxsize=None)
def shape_key(m: Monomial) -> tuple:
    # heavier left factor first, then recurse; reproduces the published
    # listings for degrees 3, 4 and 5
    if isinstance(m, int):
        return ()
    return (-degree(m[0]), shape_key(m[0]), shape_key(m[1]))


def monomial_key(m: Monomial) -> tuple:
    """Total order: degree, then association type, then variable word."""
    return (degree(m), shape_key(shape(m)), word(m))


@lru_cache(maxsize=None)
def association_types(n: int) -> tuple:
    """All binary-tree shapes with ``n`` leaves, in canonical order."""
    if n < 1:
        raise FreeAlgebraError(f"degree must be positive, got {n}")
    if n == 1:
        return (0,)
    shapes = []
    for left in range(n - 1, 0, -1):
        for ls in association_types(left):
            for rs in association_types(n - left):
                shapes.append(fill((ls, rs), range(n)))
    return tuple(shapes)


def catalan(n: int) -> int:
    """K_n, the number of association types in degree n."""
    return math.comb(2 * n - 2, n - 1) // n


def relabel(m: Monomial, mapping) -> Monomial:
    """Apply a variable substitution ``i -> mapping[i]`` to the leaves."""
    if isinstance(m, int):
        return mapping[m]
    return (relabel(m[0], mapping), relabel(m[1], mapping))


def render_monomial(m: Monomial) -> str:
    if isinstance(m, int):
        return letter(m)
    return f"({render_monomial(m[0])} {render_monomial(m[1])})"


def render_rational(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _clean(terms: Mapping) -> dict:
    return {m: Fraction(c) for m, c in terms.items() if c != 0}


class Polynomial:
    """An element of F{X}: an exact rational combination of monomials.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "Polynomial":
        return cls({m: coeff})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        return cls({index: 1})

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._raw({m: c * v for m, v in self._terms.items()})

    def __rmul__(self, c) -> "Polynomial":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return self.scale(other)

    def degrees(self) -> set:
        return {degree(m) for m in self._terms}

    def relabel(self, mapping) -> "Polynomial":
        out: dict = {}
        for m, c in self._terms.items():
            k = relabel(m, mapping)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial._raw(out)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r})"


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Bilinear extension of tree-joining."""
    out: dict = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            k = (m1, m2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return Polynomial._raw(out)


def product(*factors: Polynomial) -> Polynomial:
    """Left-normed product ((f1 f2) f3) ... of the factors."""
    it = iter(factors)
    acc = next(it)
    for f in it:
        acc = mul(acc, f)
    return acc


def commutator(p: Polynomial, q: Polynomial) -> Polynomial:
    return mul(p, q) - mul(q, p)


def associator(p: Polynomial, q: Polynomial, r: Polynomial) -> Polynomial:
    return mul(mul(p, q), r) - mul(p, mul(q, r))


def var(i: int) -> Polynomial:
    return Polynomial.variable(i)


def substitute(p: Polynomial, args: Sequence[Polynomial]) -> Polynomial:
    """Replace variable ``j`` of ``p`` by the polynomial ``args[j]``."""
    cache: dict = {}

    def walk(m) -> dict:
        if isinstance(m, int):
            return args[m]._terms
        if m in cache:
            return cache[m]
        left, right = walk(m[0]), walk(m[1])
        out: dict = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                k = (m1, m2)
                out[k] = out.get(k, 0) + c1 * c2
        cache[m] = out
        return out

    total: dict = {}
    for m, c in p.items():
        for k, v in walk(m).items():
            total[k] = total.get(k, 0) + c * v
    return Polynomial(total)


def linear_combination(pairs: Iterable) -> Polynomial:
    """Sum of ``coeff * poly`` over ``(coeff, poly)`` pairs."""
    out: dict = {}
    for c, p in pairs:
        c = Fraction(c)
        if not c:
            continue
        for m, v in p.items():
            w = out.get(m, 0) + c * v
            if w:
                out[m] = w
            else:
                out.pop(m, None)
    return Polynomial._raw(out)


# ---------------------------------------------------------------------------
# multilinear bases


class MultilinearBasis:
    """Multilinear monomials of degree n in variables 0..n-1.

    Ordered by association type, then by the permutation of the leaves in
    lexicographic order, so index ``t * n! + k`` is type ``t`` filled with
    the ``k``-th permutation.
    """

    def __init__(self, n: int):
        if not 1 <= n <= MAX_BASIS_DEGREE:
            raise FreeAlgebraError(f"multilinear basis supports degrees 1..{MAX_BASIS_DEGREE}, got {n}")
        self.n = n
        self.types = association_types(n)
        self.permutations = list(itertools.permutations(range(n)))
        self.perm_index = {p: i for i, p in enumerate(self.permutations)}
        self.type_index = {t: i for i, t in enumerate(self.types)}
        self.monomials = [fill(t, p) for t in self.types for p in self.permutations]
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    def classify(self, m: Monomial) -> tuple:
        """Return ``(type index, leaf word)`` of a multilinear monomial."""
        return self.type_index[shape(m)], word(m)

    def vector(self, p: Polynomial) -> list:
        return coefficient_vector(p, self)

    def sparse(self, p: Polynomial) -> dict:
        return sparse_vector(p, self)

    def polynomial(self, vec) -> Polynomial:
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return Polynomial({self.monomials[i]: c for i, c in items if c})


@lru_cache(maxsize=None)
def multilinear_basis(n: int) -> MultilinearBasis:
    return MultilinearBasis(n)


def coefficient_vector(p: Polynomial, basis: MultilinearBasis) -> list:
    vec = [Fraction(0)] * len(basis)
    for m, c in p.items():
        try:
            vec[basis.index[m]] = c
        except KeyError:
            raise FreeAlgebraError(
                f"monomial {render_monomial(m)} is not in the degree-{basis.n} multilinear basis"
            ) from None
    return vec


def sparse_vector(p: Polynomial, basis: MultilinearBasis) -> dict:
    """Like :func:`coefficient_vector` but as ``{column: coefficient}``."""
    try:
        return {basis.index[m]: c for m, c in p.items()}
    except KeyError as exc:
        raise FreeAlgebraError(
            f"monomial {render_monomial(exc.args[0])} is not in the degree-{basis.n} multilinear basis"
        ) from None


# ---------------------------------------------------------------------------
# coproduct


class TensorPolynomial:
    """Element of F{X} (x) F{X} with the formal unit, written ``None``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = _clean(terms or {})

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorPolynomial) and self.terms == other.terms

    def __mul__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        out: dict = {}
        for (a, b), c1 in self.terms.items():
            for (x, y), c2 in other.terms.items():
                k = (_unit_mul(a, x), _unit_mul(b, y))
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        t = TensorPolynomial()
        t.terms = out
        return t

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorPolynomial(out)

    def __str__(self) -> str:
        def side(m):
            return "1" if m is None else render_monomial(m)

        parts = [f"{render_rational(c)}*{side(a)}#{side(b)}" for (a, b), c in self.terms.items()]
        return " + ".join(parts) or "0"


def _unit_mul(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return (a, b)


@lru_cache(maxsize=4096)
def _monomial_coproduct(m: Monomial) -> TensorPolynomial:
    if isinstance(m, int):
        return TensorPolynomial({(m, None): 1, (None, m): 1})
    return _monomial_coproduct(m[0]) * _monomial_coproduct(m[1])


def coproduct(p: Polynomial) -> TensorPolynomial:
    """The algebra morphism with x -> x(x)1 + 1(x)x on generators."""
    out: dict = {}
    for m, c in p.items():
        for k, v in _monomial_coproduct(m).terms.items():
            out[k] = out.get(k, 0) + c * v
    return TensorPolynomial(out)


def is_primitive(p: Polynomial) -> bool:
    expected = {}
    for m, c in p.items():
        expected[(m, None)] = c
        expected[(None, m)] = c
    return coproduct(p).terms == _clean(expected)


# ---------------------------------------------------------------------------
# text form:  1*((a b) c) - 1/2*(a (b c))

class _MonomialParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise FreeAlgebraError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def term(self) -> Monomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            left = self.term()
            right = self.term()
            self.take(")")
            return (left, right)
        if ch and ch in LETTERS:
            self.pos += 1
            return LETTERS.index(ch)
        self.error("expected a letter or '('")

    def coefficient(self) -> Fraction:
        self.skip()
        m = re.compile(r"\d+(?:/\d+)?").match(self.text, self.pos)
        if not m:
            return Fraction(1)
        self.pos = m.end()
        self.take("*")
        return Fraction(m.group(0))

    def polynomial(self) -> Polynomial:
        terms: dict = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        elif self.peek() == "+":
            self.pos += 1
        if self.peek() == "0" and self.text[self.pos:].strip() == "0":
            self.pos = len(self.text)
            return Polynomial()
        while True:
            c = self.coefficient()
            m = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            ch = self.peek()
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            elif ch == "":
                break
            else:
                self.error("expected '+' or '-'")
            self.pos += 1
        return Polynomial(terms)


def parse_monomial(text: str) -> Monomial:
    p = _MonomialParser(text)
    m = p.term()
    if p.peek():
        p.error("trailing input")
    return m


def parse_polynomial(text: str) -> Polynomial:
    return _MonomialParser(text).polynomial()


def render_polynomial(p: Polynomial) -> str:
    if not p:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        body = f"{render_rational(abs(c))}*{render_monomial(m)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
