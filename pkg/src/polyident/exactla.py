"""Exact linear algebra: row canonical form, Hermite normal form, LLL.

Matrices are plain lists of rows.  Rational entries are
:class:`fractions.Fraction`; elimination runs fraction-free on integer rows
(each row scaled by the lcm of its denominators and kept primitive), and
only the final normalization divides by the pivots.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, TextIO


class LinearAlgebraError(ValueError):
    pass


class NotInColumnSpace(LinearAlgebraError):
    pass


class RCF(NamedTuple):
    matrix: list
    rank: int
    pivots: list


class HNF(NamedTuple):
    matrix: list
    rank: int
    pivots: list


def _integer_row(row: Sequence) -> list:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = den * x.denominator // math.gcd(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rcf(matrix: Sequence[Sequence]) -> RCF:
    """Reduced row echelon form over Q, with rank and pivot columns."""
    rows = [_primitive(_integer_row(r)) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            x = rows[i][c]
            if x and (best is None or abs(x) < abs(rows[best][c])):
                best = i
                if abs(x) == 1:
                    break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            a = rows[i][c]
            if not a:
                continue
            g = math.gcd(a, p)
            s, t = p // g, a // g
            rows[i] = _primitive([s * x - t * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        p = rows[i][c]
        out.append([Fraction(x, p) for x in rows[i]])
    for _ in range(len(pivots), nrows):
        out.append([Fraction(0)] * ncols)
    return RCF(out, len(pivots), pivots)


def rank(matrix: Sequence[Sequence]) -> int:
    return rcf(matrix).rank


def transpose(matrix: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*matrix)]


def identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# incremental row spaces


class RowSpace:
    """Row space of a growing set of sparse vectors.

    Rows are dictionaries ``{column: int}`` kept primitive with a positive
    leading entry.  Adding a vector reduces it against the stored rows in
    increasing pivot order; a nonzero remainder becomes a new row.
    """

    def __init__(self, vectors: Iterable | None = None):
        self.rows: dict = {}
        if vectors is not None:
            for v in vectors:
                self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @staticmethod
    def _as_int(v) -> dict:
        if isinstance(v, dict):
            items = [(k, x) for k, x in v.items() if x]
        else:
            items = [(k, x) for k, x in enumerate(v) if x]
        den = 1
        for _, x in items:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
        return {k: int(x * den) for k, x in items}

    def reduce(self, v) -> dict:
        vec = self._as_int(v)
        rows = self.rows
        heap = [c for c in vec if c in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = vec.get(c)
            if not a:
                continue
            row = rows[c]
            p = row[c]
            g = math.gcd(a, p)
            s, t = p // g, a // g
            if s != 1:
                for k in vec:
                    vec[k] *= s
            for k, x in row.items():
                y = vec.get(k, 0) - t * x
                if y:
                    vec[k] = y
                    if k in rows and k not in seen:
                        heapq.heappush(heap, k)
                else:
                    vec.pop(k, None)
            if vec:
                g = 0
                for x in vec.values():
                    g = math.gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for k in vec:
                        vec[k] //= g
        return vec

    def add(self, v) -> bool:
        vec = self.reduce(v)
        if not vec:
            return False
        lead = min(vec)
        if vec[lead] < 0:
            vec = {k: -x for k, x in vec.items()}
        self.rows[lead] = vec
        return True

    def extend(self, vectors: Iterable) -> int:
        """Add many vectors; return how much the rank grew."""
        before = len(self.rows)
        for v in vectors:
            self.add(v)
        return len(self.rows) - before

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def copy(self) -> "RowSpace":
        out = RowSpace()
        out.rows = {k: dict(r) for k, r in self.rows.items()}
        return out

    def pivots(self) -> list:
        return sorted(self.rows)

    def rref(self, ncols: int | None = None) -> list:
        """The unique reduced echelon basis, as sparse Fraction rows sorted by pivot."""
        order = sorted(self.rows)
        reduced: dict = {}
        for c in reversed(order):
            vec = dict(self.rows[c])
            for k in [k for k in vec if k != c and k in reduced]:
                a = vec.get(k)
                if not a:
                    continue
                for j, x in reduced[k].items():
                    y = vec.get(j, 0) - a * x
                    if y:
                        vec[j] = y
                    else:
                        vec.pop(j, None)
            p = vec[c]
            reduced[c] = {k: Fraction(x, p) for k, x in vec.items()}
        return [reduced[c] for c in order]

    def rref_dense(self, ncols: int) -> list:
        out = []
        for row in self.rref():
            dense = [Fraction(0)] * ncols
            for k, x in row.items():
                dense[k] = x
            out.append(dense)
        return out


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(matrix: Sequence[Sequence[int]]) -> HNF:
    """Row-style Hermite normal form over Z.

    Nonzero rows come first with strictly increasing pivot columns, pivots
    positive, and entries above each pivot reduced into ``[0, pivot)``.
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[i0] = A[i0], A[r]
            prow = A[r]
            p = prow[c]
            clean = True
            for i in range(r + 1, m):
                a = A[i][c]
                if not a:
                    continue
                q = a // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], prow)]
                if A[i][c]:
                    clean = False
            if clean:
                break
        if not any(A[i][c] for i in range(r, m)):
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        prow = A[r]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], prow)]
        pivots.append(c)
        r += 1
    return HNF(A, r, pivots)


# ---------------------------------------------------------------------------
# LLL


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def _round(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


def gram_schmidt(basis: Sequence[Sequence[int]]) -> tuple:
    """Return ``(mu, B)``: Gram-Schmidt coefficients and squared norms, exactly."""
    n = len(basis)
    bstar: list = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = []
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            mu[i][j] = Fraction(_dot(basis[i], bstar[j])) / B[j] if B[j] else Fraction(0)
            if mu[i][j]:
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        B.append(_dot(v, v))
    return mu, B


def lll(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4), sort: bool = True) -> list:
    """LLL-reduce a basis of linearly independent integer vectors.

    Exact rational Gram-Schmidt throughout.  With ``sort`` the reduced
    vectors are returned ordered by increasing Euclidean length.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise LinearAlgebraError(f"delta must lie in (1/4, 1], got {delta}")
    b = [[int(x) for x in v] for v in basis]
    n = len(b)
    if n == 0:
        return []
    if rank(b) != n:
        raise LinearAlgebraError("LLL needs linearly independent input vectors")
    mu, B = gram_schmidt(b)

    def size_reduce(k: int, l: int):
        q = _round(mu[k][l])
        if q:
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            for j in range(l):
                mu[k][j] -= q * mu[l][j]
            mu[k][l] -= q

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        m = mu[k][k - 1]
        if B[k] < (delta - m * m) * B[k - 1]:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            Bnew = B[k] + m * m * B[k - 1]
            mu[k][k - 1] = m * B[k - 1] / Bnew
            B[k] = B[k - 1] * B[k] / Bnew
            B[k - 1] = Bnew
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    if sort:
        b = sorted(b, key=lambda v: _dot(v, v))
    return b


def is_lll_reduced(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> bool:
    """Check size reduction and the Lovasz condition (in the given order)."""
    mu, B = gram_schmidt(basis)
    n = len(basis)
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    return all(B[k] >= (Fraction(delta) - mu[k][k - 1] ** 2) * B[k - 1] for k in range(1, n))


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    ha, hb = hnf(a), hnf(b)
    return ha.matrix[: ha.rank] == hb.matrix[: hb.rank]


# ---------------------------------------------------------------------------
# column spaces


def column_space_basis(matrix: Sequence[Sequence]) -> list:
    """Indices of the pivot columns of the RCF: the leftmost independent columns."""
    return rcf(matrix).pivots


def solve_in_column_space(matrix: Sequence[Sequence], target: Sequence) -> tuple:
    """Express ``target`` over the column-space basis of ``matrix``.

    Returns ``(columns, coefficients)``.  Raises :class:`NotInColumnSpace`
    when the target is not a combination of the columns.
    """
    cols = column_space_basis(matrix)
    aug = [[row[j] for j in cols] + [t] for row, t in zip(matrix, target)]
    red = rcf(aug)
    if len(cols) in red.pivots:
        raise NotInColumnSpace("target vector is not in the column space")
    coeffs = [red.matrix[i][-1] for i in range(len(cols))]
    return cols, coeffs


# ---------------------------------------------------------------------------
# text format: "rows cols" then row-major entries


def write_matrix(matrix: Sequence[Sequence], fh: TextIO) -> None:
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    fh.write(f"{nrows} {ncols}\n")
    for row in matrix:
        fh.write(" ".join(_fmt(x) for x in row) + "\n")


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def read_matrix(fh: TextIO) -> list:
    tokens = fh.read().split()
    if len(tokens) < 2:
        raise LinearAlgebraError("matrix file needs a 'rows cols' header")
    nrows, ncols = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != nrows * ncols:
        raise LinearAlgebraError(f"expected {nrows * ncols} entries, found {len(body)}")
    vals = [Fraction(t) for t in body]
    return [vals[i * ncols:(i + 1) * ncols] for i in range(nrows)]
