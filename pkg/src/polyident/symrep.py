"""Representations of the symmetric group and per-partition rank analysis.

The S_n-module of multilinear polynomials of degree n splits into isotypic
pieces, one for each partition of n.  For a partition of dimension d, a
polynomial with t association types becomes a d x (t*d) matrix, and ranks of
stacked matrices count the irreducible multiplicities.  Representation
matrices are Young's natural representation, computed by Clifton's tableau
comparison and normalized to a homomorphism.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import freealg, ops
from .exactla import RowSpace


class RepresentationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions and tableaux


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Partitions of n in reverse lexicographic order: (n), (n-1,1), ..."""
    if n < 0 or n > 7:
        raise RepresentationError(f"partitions are supported for 0 <= n <= 7, got {n}")

    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def _check(lam) -> tuple:
    lam = tuple(lam)
    if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise RepresentationError(f"{lam} is not a partition")
    return lam


def conjugate(lam: Sequence[int]) -> tuple:
    lam = _check(lam)
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0] if lam else 0))


def dim(lam: Sequence[int]) -> int:
    """Hook-length formula."""
    lam = _check(lam)
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


@lru_cache(maxsize=None)
def standard_tableaux(lam: Sequence[int]) -> tuple:
    """Standard tableaux with entries 0..n-1, as tuples of rows.

    Sorted by the row-reading word (first row, then second row, ...).
    """
    lam = _check(lam)
    n = sum(lam)
    found = []

    def place(k, rows):
        if k == n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < lam[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                place(k + 1, rows)
                row.pop()

    place(0, [[] for _ in lam])
    return tuple(sorted(found, key=lambda t: tuple(x for r in t for x in r)))


def format_partition(lam: Sequence[int]) -> str:
    lam = tuple(lam)
    if any(x >= 10 for x in lam):
        return ",".join(map(str, lam))
    return "".join(map(str, lam))


def parse_partition(text: str) -> tuple:
    parts = text.split(",") if "," in text else list(text)
    try:
        return _check(int(x) for x in parts)
    except ValueError:
        raise RepresentationError(f"cannot read partition {text!r}") from None


# ---------------------------------------------------------------------------
# Clifton's method


def _act(perm: Sequence[int], tableau) -> tuple:
    return tuple(tuple(perm[x] for x in row) for row in tableau)


def _columns(tableau) -> list:
    return [[row[j] for row in tableau if len(row) > j] for j in range(len(tableau[0]))]


def _tabloid_coefficient(target, source) -> int:
    """Coefficient of the row tabloid of ``target`` in the polytabloid of ``source``.

    Nonzero exactly when a column permutation q of ``source`` puts every entry
    into the row it occupies in ``target``; the coefficient is then sign(q).
    """
    row_of = {x: i for i, row in enumerate(target) for x in row}
    sign = 1
    for col in _columns(source):
        rows = [row_of[x] for x in col]
        if sorted(rows) != list(range(len(col))):
            return 0
        # sign of the permutation sending position i to row rows[i]
        seen = [False] * len(rows)
        for i in range(len(rows)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = rows[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def clifton_matrix(lam, perm: Sequence[int]) -> list:
    """Raw matrix E(perm): entry (i, j) compares tableau i with perm applied to tableau j."""
    tabs = standard_tableaux(_check(lam))
    moved = [_act(perm, t) for t in tabs]
    return [[_tabloid_coefficient(ti, mj) for mj in moved] for ti in tabs]


def _int_inverse(m: list) -> list:
    d = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(m)]
    for c in range(d):
        p = next(r for r in range(c, d) if a[r][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(d):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    inv = [row[d:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise RepresentationError("E(id) is not unimodular")
    return [[int(x) for x in row] for row in inv]


def _matmul(a: list, b: list) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


class Representation:
    """Young's natural representation for one partition, R(p) = E(id)^-1 E(p)."""

    def __init__(self, lam: Sequence[int]):
        self.partition = _check(lam)
        self.n = sum(self.partition)
        self.tableaux = standard_tableaux(self.partition)
        self.dim = len(self.tableaux)
        self._inv = _int_inverse(clifton_matrix(self.partition, range(self.n)))
        self._cache: dict = {}

    def __call__(self, perm: Sequence[int]) -> tuple:
        perm = tuple(perm)
        got = self._cache.get(perm)
        if got is None:
            if sorted(perm) != list(range(self.n)):
                raise RepresentationError(f"{perm} is not a permutation of 0..{self.n - 1}")
            got = tuple(map(tuple, _matmul(self._inv, clifton_matrix(self.partition, perm))))
            self._cache[perm] = got
        return got


@lru_cache(maxsize=None)
def representation(lam: Sequence[int]) -> Representation:
    return Representation(tuple(lam))


def repr_matrix(lam: Sequence[int], perm: Sequence[int]) -> tuple:
    lam = _check(lam)
    if len(perm) != sum(lam):
        raise RepresentationError(f"permutation of {len(perm)} points for a partition of {sum(lam)}")
    return representation(lam)(perm)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """(p q)(j) = p(q(j))."""
    return tuple(p[j] for j in q)


# ---------------------------------------------------------------------------
# component matrices


class TypeIndex:
    """Maps multilinear monomials of one kind to (type index, word)."""

    def __init__(self, types: Sequence, module):
        self.types = tuple(types)
        self.module = module
        self.index = {t: i for i, t in enumerate(self.types)}

    def classify(self, term) -> tuple:
        s = self.module.shape(term)
        try:
            return self.index[s], self.module.word(term)
        except KeyError:
            raise RepresentationError(f"monomial type {s!r} is not among the {len(self.types)} types") from None

    def __len__(self) -> int:
        return len(self.types)


def free_types(n: int) -> TypeIndex:
    return TypeIndex(freealg.association_types(n), freealg)


def operation_types(signature, n: int) -> TypeIndex:
    return TypeIndex(ops.operation_types(signature, n), ops)


def component_matrix(p, lam: Sequence[int], types: TypeIndex) -> list:
    """The d x (t*d) matrix of ``p`` in the isotypic piece of ``lam``.

    A monomial with word w is the permutation j -> w[j] applied to its type
    filled with 0..n-1, so it contributes R(w) in its type's block.
    """
    if types.module is freealg and isinstance(p, ops.OpPolynomial):
        p = ops.expand(p)
    rep = representation(lam)
    d = rep.dim
    out = [[Fraction(0)] * (len(types) * d) for _ in range(d)]
    for term, c in p.items():
        k, w = types.classify(term)
        r = rep(w)
        base = k * d
        for i in range(d):
            row, ri = out[i], r[i]
            for j in range(d):
                if ri[j]:
                    row[base + j] += c * ri[j]
    return out


def _sparse_rows(matrix: list, offset: int = 0) -> list:
    return [{offset + j: x for j, x in enumerate(row) if x} for row in matrix]


# ---------------------------------------------------------------------------
# symmetries of operation types


def _children_spans(t, start=0):
    """Yield (node, [(start, length) of each child]) for all internal nodes."""
    if isinstance(t, int):
        return
    pos = start
    spans = []
    for c in t[1:]:
        spans.append((pos, ops.degree(c)))
        yield from _children_spans(c, pos)
        pos += ops.degree(c)
    yield t, spans


def _block_swap(n: int, spans, i: int, j: int) -> tuple:
    """Position permutation pi with word' = word o pi after swapping children i and j."""
    order = list(range(len(spans)))
    order[i], order[j] = order[j], order[i]
    pi = list(range(n))
    lo = spans[0][0]
    pos = lo
    for k in order:
        s, length = spans[k]
        for x in range(length):
            pi[pos + x] = s + x
        pos += length
    return tuple(pi)


def type_symmetries(type_term) -> list:
    """Group-algebra relations (sign, pi) meaning type + sign * (pi . type) = 0."""
    n = ops.degree(type_term)
    out = []
    for node, spans in _children_spans(type_term):
        sym = ops.REGISTRY[node[0]]
        kids = node[1:]
        pairs = [(i, j, 1) for i, j in sym.skew]
        for group in sym.symmetric:
            pairs += [(i, j, -1) for i, j in itertools.combinations(group, 2)]
        for i, j, sign in pairs:
            if ops.shape(kids[i]) == ops.shape(kids[j]):
                out.append((sign, _block_swap(n, spans, i, j)))
    return out


def symmetry_rows(types: TypeIndex, lam) -> list:
    rep = representation(lam)
    d = rep.dim
    rows = []
    for k, t in enumerate(types.types):
        for sign, pi in type_symmetries(t):
            r = rep(pi)
            for i in range(d):
                row = {k * d + j: sign * r[i][j] for j in range(d) if r[i][j]}
                row[k * d + i] = row.get(k * d + i, 0) + 1
                rows.append({c: x for c, x in row.items() if x})
    return rows


# ---------------------------------------------------------------------------
# rank analysis


@dataclass
class PartitionReport:
    partition: tuple
    dim: int
    rank_symm_lift: int
    rank_all: int
    identical: bool | None = None

    @property
    def new(self) -> int:
        return self.rank_all - self.rank_symm_lift

    def as_dict(self) -> dict:
        return {
            "partition": format_partition(self.partition),
            "dim": self.dim,
            "symm_lift": self.rank_symm_lift,
            "all": self.rank_all,
            "new": self.new,
            "identical": self.identical,
        }


def module_rank(polys: Iterable, lam, types: TypeIndex) -> int:
    space = RowSpace()
    for p in polys:
        space.extend(_sparse_rows(component_matrix(p, lam, types)))
    return space.rank


def identity_space(lam, consequences: Sequence, expansions: Sequence, free: TypeIndex) -> tuple:
    """Rows [P 0; X I] reduced; returns (identity RowSpace over the operation columns, left rank).

    Rows whose pivot lies right of the divide are the identities.
    """
    rep = representation(lam)
    d = rep.dim
    left = len(free) * d
    space = RowSpace()
    for p in consequences:
        space.extend(_sparse_rows(component_matrix(p, lam, free)))
    for k, x in enumerate(expansions):
        block = component_matrix(x, lam, free)
        for i, row in enumerate(block):
            vec = {j: v for j, v in enumerate(row) if v}
            vec[left + k * d + i] = 1
            space.add(vec)
    ident = RowSpace()
    for c, row in space.rows.items():
        if c >= left:
            ident.add({j - left: v for j, v in row.items()})
    return ident, sum(1 for c in space.rows if c < left)


def lifted_identity_rows(lam, identities: Sequence, types: TypeIndex) -> list:
    rows = []
    for f in identities:
        rows.extend(_sparse_rows(component_matrix(f, lam, types)))
    return rows


def btq_lifted_identities(n: int, extra: Sequence = ()) -> list:
    """Multilinear BTQ identities of degree n lifted from degrees 3 and 4.

    ``extra`` supplies additional identities of lower degree (e.g. the degree-5
    special identity), given as OpPolynomials; they are lifted as well.
    """
    from . import pipeline, varieties

    known = {3: list(pipeline.btq_degree3_identities()), 4: list(pipeline.btq_degree4_identities())}
    extras: dict = {}
    for f in extra:
        extras.setdefault(varieties.arity(f), []).append(f)
    levels: dict = {3: known[3] + extras.get(3, [])}
    for m in range(4, n + 1):
        cur = [g for f in levels[m - 1] for g in varieties.lift(f, "commutator")]
        if m - 2 >= 3:
            cur += [g for f in levels[m - 2] for g in varieties.lift(f, "associator")]
        if m - 3 >= 3:
            cur += [g for f in levels[m - 3] for g in varieties.lift(f, "quaternator")]
        if m < n:
            cur += known.get(m, [])
        levels[m] = cur + extras.get(m, [])
    return levels[n]


class LiftedModule:
    """Symmetries plus lifted identities in degree n, one row space per partition."""

    def __init__(self, n: int, signature="btq", extra: Sequence = (), partitions_: Sequence | None = None):
        self.n = n
        self.types = operation_types(signature, n)
        self.partitions = tuple(partitions_ or partitions(n))
        lifted = btq_lifted_identities(n, extra)
        self.spaces = {}
        for lam in self.partitions:
            sl = RowSpace(symmetry_rows(self.types, lam))
            sl.extend(lifted_identity_rows(lam, lifted, self.types))
            self.spaces[lam] = sl

    def ranks(self) -> dict:
        return {lam: sp.rank for lam, sp in self.spaces.items()}

    def total_rank(self) -> int:
        return sum(dim(lam) * sp.rank for lam, sp in self.spaces.items())

    def contains(self, p) -> bool:
        return all(
            all(sp.contains(row) for row in _sparse_rows(component_matrix(p, lam, self.types)))
            for lam, sp in self.spaces.items()
        )

    def add(self, p) -> int:
        """Adjoin the module generated by ``p``; return the increase in total dimension."""
        gain = 0
        for lam, sp in self.spaces.items():
            gain += dim(lam) * sp.extend(_sparse_rows(component_matrix(p, lam, self.types)))
        return gain


def partition_rank_analysis(
    degree: int,
    signature="btq",
    variety: str = "power-assoc",
    extra: Sequence = (),
    partitions_: Sequence | None = None,
    compare: bool = True,
) -> list:
    """Per-partition ranks of all identities versus symmetries plus liftings."""
    from . import varieties

    if degree not in (5, 6):
        raise RepresentationError(f"rank analysis is implemented for degrees 5 and 6, got {degree}")
    free = free_types(degree)
    optypes = operation_types(signature, degree)
    consequences = varieties.variety_generators(variety, degree)
    expansions = [ops.expand(ops.fill(t, range(degree))) for t in optypes.types]
    lifted = btq_lifted_identities(degree, extra)
    reports = []
    for lam in partitions_ or partitions(degree):
        ident, _ = identity_space(lam, consequences, expansions, free)
        sl = RowSpace(symmetry_rows(optypes, lam))
        sl.extend(lifted_identity_rows(lam, lifted, optypes))
        report = PartitionReport(tuple(lam), dim(lam), sl.rank, ident.rank)
        if compare and report.new == 0:
            report.identical = sl.rref() == ident.rref()
        reports.append(report)
    return reports


def render_table(reports: Sequence[PartitionReport]) -> str:
    head = f"{'partition':>9} {'dim':>4} {'symm+lift':>10} {'all':>6} {'new':>4}"
    lines = [head]
    for r in reports:
        lines.append(
            f"{format_partition(r.partition):>9} {r.dim:>4} {r.rank_symm_lift:>10} {r.rank_all:>6} {r.new:>4}"
        )
    return "\n".join(lines)
