"""Varieties given by identities, and the spaces of their consequences.

An identity is stored as a single polynomial asserted to vanish.  Identities
of one variable are turned into multilinear ones by :func:`linearize`; a
multilinear identity of degree n produces identities of higher degree by
:func:`lift`; and :class:`ConsequenceSpace` closes a set of multilinear
identities under all permutations of the variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import freealg, ops
from .exactla import RowSpace
from .freealg import Polynomial, associator, mul, var
from .ops import OpPolynomial

VARIETIES = ("free", "tpa", "power-assoc")


class VarietyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# helpers shared by both polynomial kinds


def _kind(p):
    if isinstance(p, OpPolynomial):
        return ops, lambda terms: OpPolynomial(terms)
    if isinstance(p, Polynomial):
        return freealg, Polynomial
    raise TypeError(f"expected Polynomial or OpPolynomial, got {type(p).__name__}")


def multidegree(term, module=ops) -> tuple:
    w = module.word(term)
    return tuple(sorted((v, w.count(v)) for v in set(w)))


def is_multilinear(p) -> bool:
    mod, _ = _kind(p)
    n = None
    for t in p:
        w = mod.word(t)
        if sorted(w) != list(range(len(w))):
            return False
        if n is None:
            n = len(w)
        elif n != len(w):
            return False
    return True


def arity(p) -> int:
    """Degree of a multilinear (or at least homogeneous) identity."""
    mod, _ = _kind(p)
    degs = {len(mod.word(t)) for t in p}
    if len(degs) > 1:
        raise VarietyError("identity is not homogeneous")
    return degs.pop() if degs else 0


def permute(p, sigma: Sequence[int]):
    """Apply the variable permutation ``j -> sigma[j]``."""
    return p.relabel(sigma)


def orbit(p, n: int | None = None) -> list:
    n = arity(p) if n is None else n
    return [p.relabel(s) for s in itertools.permutations(range(n))]


# ---------------------------------------------------------------------------
# linearization


def linearize(p):
    """Full polarization of a homogeneous identity.

    Variable ``v`` occurring ``k`` times is replaced, in every possible order,
    by ``k`` fresh variables; fresh variables are numbered block by block in
    increasing order of ``v``.  Works for Polynomial and OpPolynomial input.
    """
    mod, build = _kind(p)
    if not p:
        return p
    degrees = {multidegree(t, mod) for t in p}
    if len(degrees) != 1:
        raise VarietyError("cannot linearize a non-homogeneous identity")
    (md,) = degrees
    blocks, start = {}, 0
    for v, k in md:
        blocks[v] = list(range(start, start + k))
        start += k
    total: dict = {}
    for t, c in p.items():
        w = mod.word(t)
        s = mod.shape(t)
        slots = {v: [i for i, x in enumerate(w) if x == v] for v in blocks}
        for choice in itertools.product(*(itertools.permutations(blocks[v]) for v in blocks)):
            new = list(w)
            for v, fresh in zip(blocks, choice):
                for pos, x in zip(slots[v], fresh):
                    new[pos] = x
            m = mod.fill(s, new)
            total[m] = total.get(m, 0) + c
    return build(total)


# ---------------------------------------------------------------------------
# liftings


LIFT_MODES = ("product", "commutator", "associator", "quaternator")


def _op_lifts(p: OpPolynomial, name: str, n: int, drop_last: bool) -> list:
    k = ops.REGISTRY[name].arity
    fresh = tuple(range(n, n + k - 1))
    out = []
    for i in range(n):
        args = [OpPolynomial.term(j) for j in range(n)]
        args[i] = OpPolynomial.term((name, i) + fresh)
        out.append(ops.substitute(p, args))
    for slot in range(k - 1 if drop_last else k):
        terms: dict = {}
        for t, c in p.items():
            kids = list(fresh)
            kids.insert(slot, t)
            terms[(name,) + tuple(kids)] = c
        out.append(OpPolynomial(terms))
    return out


def lift_with(p: OpPolynomial, operation: str, drop_last: bool = False) -> list:
    """Liftings of an operation identity through any registered operation."""
    if not is_multilinear(p):
        raise VarietyError("liftings are defined for multilinear identities")
    return _op_lifts(p, operation, arity(p), drop_last)


def _free_lifts(p: Polynomial, combine, n: int, extra: int, drop_last: bool) -> list:
    fresh = [var(j) for j in range(n, n + extra)]
    out = []
    for i in range(n):
        args = [var(j) for j in range(n)]
        args[i] = combine(var(i), *fresh)
        out.append(freealg.substitute(p, args))
    slots = extra + 1
    for slot in range(slots - 1 if drop_last else slots):
        kids = list(fresh)
        kids.insert(slot, p)
        out.append(combine(*kids))
    return out


def lift(p, mode: str = "product") -> list:
    """Liftings of a multilinear identity of degree n.

    ``product``: a_i -> a_i a_{n+1} for each i, then f a_{n+1} and a_{n+1} f.
    ``commutator``: a_i -> [a_i, a_{n+1}] and [f, a_{n+1}]; the second
    placement of f only changes the sign, so it is left out.
    ``associator`` and ``quaternator`` use the ternary and quaternary
    operation, with f in every argument slot.
    """
    if mode not in LIFT_MODES:
        raise VarietyError(f"unknown lifting mode {mode!r}; expected one of {', '.join(LIFT_MODES)}")
    if not is_multilinear(p):
        raise VarietyError("liftings are defined for multilinear identities")
    n = arity(p)
    if isinstance(p, OpPolynomial):
        if mode == "product":
            raise VarietyError("product liftings apply to free-algebra polynomials")
        name = {"commutator": "comm", "associator": "assoc", "quaternator": "Q1"}[mode]
        return _op_lifts(p, name, n, drop_last=(mode == "commutator"))
    if mode == "product":
        return _free_lifts(p, mul, n, 1, drop_last=False)
    if mode == "commutator":
        return _free_lifts(p, freealg.commutator, n, 1, drop_last=True)
    if mode == "associator":
        return _free_lifts(p, associator, n, 2, drop_last=False)
    q1 = ops.REGISTRY["Q1"].polynomial
    return _free_lifts(p, lambda *xs: freealg.substitute(q1, xs), n, 3, drop_last=False)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class VarietyPresentation:
    name: str
    defining_identities: tuple = field(default=())

    def __post_init__(self):
        for f in self.defining_identities:
            if len({multidegree(t, freealg) for t in f}) > 1:
                raise VarietyError(f"{self.name}: defining identity {f} is not homogeneous")

    def multilinear_identities(self) -> list:
        return [linearize(f) for f in self.defining_identities]


def _a():
    return var(0)


def third_power() -> Polynomial:
    a = _a()
    return associator(a, a, a)


def fourth_power() -> Polynomial:
    a = _a()
    return associator(mul(a, a), a, a)


def presentation(name: str) -> VarietyPresentation:
    if name == "free":
        return VarietyPresentation("free")
    if name == "tpa":
        return VarietyPresentation("tpa", (third_power(),))
    if name == "power-assoc":
        return VarietyPresentation("power-assoc", (third_power(), fourth_power()))
    raise VarietyError(f"unknown variety {name!r}; expected one of {', '.join(VARIETIES)}")


@lru_cache(maxsize=None)
def T() -> Polynomial:
    """Multilinear third-power associativity (degree 3, symmetric in a, b, c)."""
    return linearize(third_power())


@lru_cache(maxsize=None)
def F() -> Polynomial:
    """Multilinear fourth-power associativity (degree 4)."""
    return linearize(fourth_power())


def T_liftings() -> tuple:
    """T_1 = T(ad,b,c), T_2 = T(a,b,c)d, T_3 = dT(a,b,c)."""
    t = T()
    a, b, c, d = (var(i) for i in range(4))
    return (
        freealg.substitute(t, [mul(a, d), b, c]),
        mul(t, d),
        mul(d, t),
    )


def _cyclic(p: Polynomial, n: int) -> list:
    return [p.relabel([(j + s) % n for j in range(n)]) for s in range(n)]


@lru_cache(maxsize=None)
def _pa(n: int) -> tuple:
    if n == 3:
        return (T(),)
    if n == 4:
        t1, t2, t3 = T_liftings()
        return tuple(orbit(t1, 4) + _cyclic(t2, 4) + _cyclic(t3, 4) + [F()])
    if n == 5:
        out = []
        for g in lift(T(), "product"):
            out.extend(lift(g, "product"))
        out.extend(lift(F(), "product"))
        return tuple(out)
    return tuple(h for g in _pa(n - 1) for h in lift(g, "product"))


def power_associative_consequences(n: int) -> list:
    """Multilinear generators of the degree-n consequences of power associativity.

    Degree 4 lists an S_4-stable spanning set; degrees 5 and 6 list generators
    whose permutations span the consequences.
    """
    if not 3 <= n <= 6:
        raise VarietyError(f"power-associative consequences are provided for degrees 3..6, got {n}")
    return list(_pa(n))


def tpa_consequences(n: int) -> list:
    if not 3 <= n <= 6:
        raise VarietyError(f"third-power consequences are provided for degrees 3..6, got {n}")
    gens = [T()]
    for _ in range(n - 3):
        gens = [h for g in gens for h in lift(g, "product")]
    return gens


def variety_generators(variety: str, n: int) -> list:
    """Multilinear generators (up to permutation) of a variety's degree-n consequences."""
    if variety == "free" or n < 3:
        return []
    if variety == "tpa":
        return tpa_consequences(n)
    if variety == "power-assoc":
        if n == 3:
            return [T()]
        return power_associative_consequences(n)
    raise VarietyError(f"unknown variety {variety!r}; expected one of {', '.join(VARIETIES)}")


# ---------------------------------------------------------------------------
# consequence spaces


class ConsequenceSpace:
    """The S_n-module spanned by a set of multilinear identities.

    ``ambient`` is any basis object with a ``sparse(p)`` method, normally a
    :class:`freealg.MultilinearBasis` or :class:`ops.OperationBasis`.
    Generators are added together with all their permutations.
    """

    def __init__(self, n: int, ambient=None, generators: Iterable = ()):
        self.degree = n
        self.ambient = freealg.multilinear_basis(n) if ambient is None else ambient
        self.space = RowSpace()
        self._perms = list(itertools.permutations(range(n)))
        self.history: list = []
        self.add(generators)

    @property
    def rank(self) -> int:
        return self.space.rank

    def _check(self, p):
        if p and (not is_multilinear(p) or arity(p) != self.degree):
            raise VarietyError(f"generator is not multilinear of degree {self.degree}")

    def add(self, generators: Iterable, permute: bool = True) -> int:
        """Adjoin generators (and their permutations); return the new rank."""
        for g in generators:
            self._check(g)
            images = [g.relabel(s) for s in self._perms] if permute else [g]
            for h in images:
                self.space.add(self.ambient.sparse(h))
            self.history.append(self.space.rank)
        return self.space.rank

    def increase(self, g) -> int:
        """Rank gain from adjoining the orbit of ``g``, without changing the space."""
        trial = self.copy()
        return trial.add([g]) - self.rank

    def contains(self, p) -> bool:
        return self.space.contains(self.ambient.sparse(p))

    def contains_module(self, p) -> bool:
        return all(self.contains(p.relabel(s)) for s in self._perms)

    def copy(self) -> "ConsequenceSpace":
        out = ConsequenceSpace.__new__(ConsequenceSpace)
        out.degree, out.ambient, out._perms = self.degree, self.ambient, self._perms
        out.space = self.space.copy()
        out.history = list(self.history)
        return out

    def rcf(self) -> list:
        return self.space.rref()

    def is_permutation_stable(self) -> bool:
        n = self.degree
        swaps = [list(range(n)) for _ in range(n - 1)]
        for i, s in enumerate(swaps):
            s[i], s[i + 1] = s[i + 1], s[i]
        for row in self.space.rows.values():
            p = self.ambient.polynomial(row)
            for s in swaps:
                if not self.contains(p.relabel(s)):
                    return False
        return True


def consequence_space(generators: Iterable, n: int, ambient=None) -> ConsequenceSpace:
    return ConsequenceSpace(n, ambient, generators)


def variety_space(variety: str, n: int) -> ConsequenceSpace:
    """Degree-n consequences of a variety inside the free nonassociative algebra."""
    gens = variety_generators(variety, n)
    permute = not (variety == "power-assoc" and n == 4)
    space = ConsequenceSpace(n)
    space.add(gens, permute=permute)
    return space
