"""End-to-end identity computations.

Every workflow here reduces to the same picture: a block matrix whose left
columns index nonassociative monomials and whose right columns index operation
monomials.  Rows ``[V | 0]`` hold consequences of the variety, rows ``[X | I]``
say that an operation monomial equals its expansion, and after row reduction
the rows that start in the right block are the identities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import exactla, freealg, ops, symrep, varieties
from .exactla import NotInColumnSpace, RowSpace
from .freealg import Polynomial
from .ops import OpPolynomial, parse_op_polynomial

MAX_DEGREE = 6


class PipelineError(ValueError):
    pass


# ---------------------------------------------------------------------------
# known identities, written in the operation-term grammar

BTQ_DEGREE3 = (
    "(a,b,c) + (a,c,b) + (b,a,c) + (b,c,a) + (c,a,b) + (c,b,a)",
    "[[a,b],c] + [[b,c],a] + [[c,a],b] - 2*(a,b,c) - 2*(b,c,a) - 2*(c,a,b)",
)

BTQ_DEGREE4 = (
    "[(a,b,c),d] - [(d,b,c),a] - ([a,d],b,c) + Q1(a,d,b,c) - Q1(d,a,b,c)",
    "(a,[b,c],d) - (a,[b,d],c) + (a,[c,d],b) - (a,b,[c,d]) + (a,c,[b,d]) - (a,d,[b,c])"
    " - Q1(a,b,c,d) + Q1(a,b,d,c) + Q1(a,c,b,d) - Q1(a,c,d,b) - Q1(a,d,b,c) + Q1(a,d,c,b)",
    "[(a,b,c),d] - [(a,d,c),b] - [(c,b,a),d] + [(c,d,a),b] + [(b,a,d),c] - [(b,c,d),a]"
    " - [(d,a,b),c] + [(d,c,b),a] - ([a,b],c,d) - ([a,d],b,c) - ([c,b],d,a) - ([c,d],a,b)"
    " - (a,[c,b],d) - (c,[a,d],b) - (b,[c,d],a) - (d,[a,b],c) - (a,b,[c,d]) - (c,d,[a,b])"
    " - (b,c,[a,d]) - (d,a,[c,b])",
    "+".join(
        "Q1({})".format(",".join("abcd"[i] for i in p)) for p in itertools.permutations(range(4))
    ),
)

BTQQ_IDENTITIES = (
    "[a,b] + [b,a]",
    "[[a,b],c] + [[b,c],a] + [[c,a],b] - (a,b,c) + (a,c,b) + (b,a,c) - (b,c,a) - (c,a,b) + (c,b,a)",
    "([a,b],c,d) - [a,(b,c,d)] + [b,(a,c,d)] - Q1(a,b,c,d) + Q1(b,a,c,d)",
    "(a,[b,c],d) - [b,(a,c,d)] + [c,(a,b,d)] - Q2(a,b,c,d) + Q2(a,c,b,d)",
    "[b,(a,c,d)] - [b,(a,d,c)] - (a,b,[c,d]) - Q1(a,b,c,d) + Q1(a,b,d,c) + Q2(a,b,c,d) - Q2(a,b,d,c)",
)

AKIVIS_IDENTITY = BTQQ_IDENTITIES[1]

SPECIAL_DEGREE5 = "[(a,[a,b],a),a] - [Q1(a,a,a,b),a] + [Q1(a,b,a,a),a]"


def _parse_all(texts) -> tuple:
    return tuple(parse_op_polynomial(t) for t in texts)


@lru_cache(maxsize=None)
def btq_degree3_identities() -> tuple:
    return _parse_all(BTQ_DEGREE3)


@lru_cache(maxsize=None)
def btq_degree4_identities() -> tuple:
    return _parse_all(BTQ_DEGREE4)


@lru_cache(maxsize=None)
def btqq_identities() -> tuple:
    return _parse_all(BTQQ_IDENTITIES)


def special_identity() -> OpPolynomial:
    return parse_op_polynomial(SPECIAL_DEGREE5, power_rules=True)


def lower_degree_extras(n: int) -> list:
    """Known identities below degree n that are not among the degree-3/4 BTQ identities."""
    return [varieties.linearize(special_identity())] if n >= 6 else []


def expand_raw(terms) -> Polynomial:
    """Expand a mapping of raw terms without canonicalizing them first."""
    acc = Polynomial()
    for t, c in terms.items():
        acc = acc + ops.expand(t).scale(c)
    return acc


# ---------------------------------------------------------------------------
# identity bases


@dataclass
class IdentityBasis:
    degree: int
    signature: str
    variety: str
    method: str
    basis: ops.OperationBasis
    rows: list  # sparse rows over the operation columns
    left_rank: int
    shape: tuple

    def __len__(self) -> int:
        return len(self.rows)

    def polynomials(self) -> list:
        return [self.basis.polynomial(r) for r in self.rows]


def _integer_rows(polys, index) -> list:
    rows = []
    seen = set()
    for p in polys:
        vec = index.sparse(p)
        if not vec:
            continue
        den = math.lcm(*(Fraction(x).denominator for x in vec.values()))
        key = tuple(sorted((k, int(x * den)) for k, x in vec.items()))
        if key in seen:
            continue
        seen.add(key)
        rows.append(dict(key))
    return rows


def variety_rows(variety: str, n: int) -> list:
    """Integer rows spanning the variety's degree-n consequences (as a lattice)."""
    gens = varieties.variety_generators(variety, n)
    if variety == "power-assoc" and n == 4:
        images = gens
    else:
        images = [g.relabel(s) for g in gens for s in itertools.permutations(range(n))]
    return _integer_rows(images, freealg.multilinear_basis(n))


def identity_matrix(signature, n: int, variety: str = "free") -> list:
    """Sparse integer rows of the block matrix [V 0; X I] before reduction."""
    free = freealg.multilinear_basis(n)
    ob = ops.operation_basis(signature, n)
    left = len(free)
    rows = variety_rows(variety, n) if variety != "free" else []
    for k, t in enumerate(ob.monomials):
        vec = {j: int(x) for j, x in free.sparse(ops.expand(t)).items()}
        vec[left + k] = 1
        rows.append(vec)
    return rows


def find_identities(signature="btqq", n: int = 4, variety: str = "free", method: str = "rcf") -> IdentityBasis:
    """All degree-n identities of the operations in ``signature`` modulo ``variety``."""
    if not 1 <= n <= MAX_DEGREE:
        raise PipelineError(f"degree must be between 1 and {MAX_DEGREE}, got {n}")
    if method not in ("rcf", "hnf"):
        raise PipelineError(f"unknown method {method!r}")
    ob = ops.operation_basis(signature, n)
    left = len(freealg.multilinear_basis(n))
    rows = identity_matrix(signature, n, variety)
    shape = (len(rows), left + len(ob))
    if method == "rcf":
        space = RowSpace(rows)
        ident = [{j - left: x for j, x in r.items()} for r in space.rref() if min(r) >= left]
        left_rank = sum(1 for c in space.rows if c < left)
    else:
        dense = [[r.get(j, 0) for j in range(shape[1])] for r in rows]
        h = exactla.hnf(dense)
        ident, left_rank = [], 0
        for row, piv in zip(h.matrix, h.pivots):
            if piv < left:
                left_rank += 1
            else:
                ident.append({j - left: x for j, x in enumerate(row) if x and j >= left})
    name = signature if isinstance(signature, str) else "+".join(signature)
    return IdentityBasis(n, name, variety, method, ob, ident, left_rank, shape)


# ---------------------------------------------------------------------------
# generators of a quotient module


@dataclass
class GeneratorSet:
    generators: list
    quotient_dimension: int
    rank_increasing: list = field(default_factory=list)


def sort_by_terms(polys: Sequence) -> list:
    return sorted(polys, key=len)


def new_generators(candidates: Sequence, known: varieties.ConsequenceSpace, prune: bool = True, presorted=False) -> GeneratorSet:
    """Candidates whose orbits enlarge ``known``, pruned to a minimal generating set."""
    order = list(candidates) if presorted else sort_by_terms(candidates)
    space = known.copy()
    kept = []
    for g in order:
        before = space.rank
        if space.add([g]) > before:
            kept.append(g)
    increasing = list(kept)
    if prune:
        for g in reversed(increasing):
            others = known.copy()
            others.add([h for h in kept if h is not g])
            if others.contains_module(g):
                kept = [h for h in kept if h is not g]
    return GeneratorSet(kept, space.rank - known.rank, increasing)


def akivis_consequences(n: int = 4, signature="btqq") -> varieties.ConsequenceSpace:
    """Degree-n consequences of skew-symmetry and the Akivis identity (n = 3 or 4)."""
    ob = ops.operation_basis(signature, n)
    ak = parse_op_polynomial(AKIVIS_IDENTITY)
    gens = [ak] if n == 3 else varieties.lift(ak, "commutator")
    return varieties.consequence_space(gens, n, ob)


def btq_degree3_consequences(n: int = 4) -> varieties.ConsequenceSpace:
    ob = ops.operation_basis("btq", n)
    gens = list(btq_degree3_identities())
    if n == 4:
        gens = [g for f in gens for g in varieties.lift(f, "commutator")]
    return varieties.consequence_space(gens, n, ob)


# ---------------------------------------------------------------------------
# expressing an element over a module


@dataclass
class Expression:
    terms: list  # (coefficient, generator index, argument word)

    def __len__(self) -> int:
        return len(self.terms)

    def scaled(self, c) -> list:
        return [(x * c, i, w) for x, i, w in self.terms]


def _as_free(p) -> Polynomial:
    return ops.expand(p) if isinstance(p, OpPolynomial) else p


def express_over_module(target, generators: Sequence, n: int) -> Expression | None:
    """Write ``target`` as a combination of permuted generators, or return None.

    Columns are all permutations of each generator in order; the column-space
    basis is the set of pivot columns, so the answer is unique.
    """
    free = freealg.multilinear_basis(n)
    perms = list(itertools.permutations(range(n)))
    cols, labels = [], []
    for gi, g in enumerate(generators):
        for w in perms:
            cols.append(free.vector(_as_free(g.relabel(w))))
            labels.append((gi, w))
    matrix = exactla.transpose(cols)
    try:
        used, coeffs = exactla.solve_in_column_space(matrix, free.vector(_as_free(target)))
    except NotInColumnSpace:
        return None
    return Expression([(c, labels[j][0], labels[j][1]) for j, c in zip(used, coeffs) if c])


def evaluate_expression(expr: Expression, generators: Sequence) -> Polynomial:
    acc = Polynomial()
    for c, gi, w in expr.terms:
        acc = acc + _as_free(generators[gi].relabel(w)).scale(c)
    return acc


# ---------------------------------------------------------------------------
# verification


@dataclass
class Verification:
    holds: bool
    expansion: Polynomial
    certificate: list  # (coefficient, label)


def pattern_arrangements(pattern) -> list:
    return sorted(set(itertools.permutations(ops.parse_pattern(pattern))))


def nonlinear_consequences(variety: str, pattern) -> list:
    """Labelled specializations of the variety's multilinear generators to ``pattern``."""
    pat = ops.parse_pattern(pattern)
    n = len(pat)
    out = []
    for gi, g in enumerate(varieties.variety_generators(variety, n)):
        for arr in pattern_arrangements(pat):
            h = g.relabel(arr)
            if h:
                out.append(((gi, arr), h))
    return out


def _pattern_of(p: Polynomial) -> tuple:
    words = {tuple(sorted(freealg.word(m))) for m in p}
    if len(words) != 1:
        raise PipelineError("the expansion is not homogeneous")
    return words.pop()


def solve_over_family(target: Polynomial, family: Sequence) -> list | None:
    """Coefficients c with sum c_i family[i] = target, over the pivot columns; None if impossible."""
    monos = sorted(set(target).union(*(set(f) for f in family)), key=freealg.monomial_key)
    index = {m: i for i, m in enumerate(monos)}
    matrix = [[Fraction(0)] * len(family) for _ in monos]
    for j, f in enumerate(family):
        for m, c in f.items():
            matrix[index[m]][j] = c
    vec = [Fraction(0)] * len(monos)
    for m, c in target.items():
        vec[index[m]] = c
    try:
        used, coeffs = exactla.solve_in_column_space(matrix, vec)
    except NotInColumnSpace:
        return None
    out = [Fraction(0)] * len(family)
    for j, c in zip(used, coeffs):
        out[j] = c
    return out


def verify_identity(identity, variety: str = "power-assoc", family: Sequence | None = None) -> Verification:
    """Check that ``identity`` holds for the operations in every algebra of ``variety``.

    ``family`` is an optional list of ``(label, Polynomial)`` consequences to
    use for the certificate; by default the variety's own generators are used.
    """
    if isinstance(identity, dict):
        f = expand_raw(identity)
    else:
        f = _as_free(identity)
    if not f:
        return Verification(True, f, [])
    if variety == "free":
        return Verification(False, f, [])
    if family is None:
        pat = _pattern_of(f)
        family = nonlinear_consequences(variety, pat)
    labels = [lab for lab, _ in family]
    coeffs = solve_over_family(f, [p for _, p in family])
    if coeffs is None:
        return Verification(False, f, [])
    cert = [(c, lab) for c, lab in zip(coeffs, labels) if c]
    check = Polynomial()
    for c, (_, p) in zip(coeffs, family):
        if c:
            check = check + p.scale(c)
    return Verification(check == f, f, cert)


# products written by juxtaposition, with T(x,y,z) and F(w,x,y,z) in argument lists


class _ProductParser:
    def __init__(self, text: str, functions):
        self.text = text.replace(" ", "")
        self.pos = 0
        self.functions = functions

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.pos != len(self.text):
            raise PipelineError(f"unexpected {self.text[self.pos]!r} at position {self.pos} in {self.text!r}")
        return p

    def expr(self) -> Polynomial:
        acc = self.atom()
        while self.pos < len(self.text) and self.text[self.pos] not in ",)":
            acc = freealg.mul(acc, self.atom())
        return acc

    def atom(self) -> Polynomial:
        if self.pos >= len(self.text):
            raise PipelineError(f"unexpected end of {self.text!r}")
        ch = self.text[self.pos]
        if ch in self.functions:
            self.pos += 1
            self._take("(")
            args = [self.expr()]
            while self.text[self.pos] == ",":
                self.pos += 1
                args.append(self.expr())
            self._take(")")
            return self.functions[ch](*args)
        if ch == "(":
            self.pos += 1
            p = self.expr()
            self._take(")")
            return p
        if ch in freealg.LETTERS:
            self.pos += 1
            return freealg.var(freealg.LETTERS.index(ch))
        raise PipelineError(f"unexpected {ch!r} at position {self.pos} in {self.text!r}")

    def _take(self, ch):
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise PipelineError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1


def polarized_T(x, y, z) -> Polynomial:
    return freealg.substitute(varieties.T(), [x, y, z])


def polarized_F(w, x, y, z) -> Polynomial:
    return freealg.substitute(varieties.F(), [w, x, y, z])


def parse_product(text: str) -> Polynomial:
    """Parse words like ``(T(a,a,a)a)b`` or ``F(a,a,a,b)a``; juxtaposition is a product."""
    return _ProductParser(text, {"T": polarized_T, "F": polarized_F}).parse()


SPECIAL_CERTIFICATE_TERMS = (
    "T((ab)a,a,a)", "T((aa)b,a,a)", "T((aa)a,a,b)", "T((ba)a,a,a)", "T(aa,ab,a)", "T(aa,aa,b)",
    "T(aa,ba,a)", "T(a(ab),a,a)", "T(a(ba),a,a)", "T(a(aa),a,b)", "T(b(aa),a,a)", "T(aa,a,a)b",
    "T(ab,a,a)a", "T(aa,a,b)a", "T(ba,a,a)a", "bT(aa,a,a)", "aT(ab,a,a)", "aT(aa,a,b)",
    "aT(ba,a,a)", "(T(a,a,a)a)b", "(T(a,a,a)b)a", "(T(a,a,b)a)a", "b(T(a,a,a)a)", "a(T(a,a,a)b)",
    "a(T(a,a,b)a)", "F(a,a,a,a)b", "F(a,a,a,b)a", "bF(a,a,a,a)", "aF(a,a,a,b)",
)


def special_certificate_family() -> list:
    return [(label, parse_product(label)) for label in SPECIAL_CERTIFICATE_TERMS]


# ---------------------------------------------------------------------------
# nonlinear search


@dataclass
class SearchResult:
    pattern: str
    substitutions: int
    operation_monomials: list
    free_monomials: int
    matrix_shape: tuple
    lattice_rank: int
    reduced: list  # LLL-reduced identities as OpPolynomials
    survivors: list
    counts: dict


def normalize(p: OpPolynomial) -> OpPolynomial:
    """Content-reduce and make the leading coefficient (canonical order) positive."""
    if not p:
        return p
    terms = p.sorted_terms()
    den = math.lcm(*(c.denominator for _, c in terms))
    ints = [int(c * den) for _, c in terms]
    g = math.gcd(*ints)
    s = 1 if ints[0] > 0 else -1
    return p.scale(Fraction(den * s, g))


def nonlinear_monomials(signature, pattern) -> tuple:
    """(number of substitutions, sorted nonzero canonical operation monomials)."""
    arrs = pattern_arrangements(pattern)
    n = len(arrs[0])
    found = set()
    count = 0
    for t in ops.operation_types(signature, n):
        for arr in arrs:
            count += 1
            sign, c = ops.canonicalize(ops.fill(t, arr), power_rules=True)
            if sign:
                found.add(c)
    return count, sorted(found, key=ops.term_key)


def _vanishes(t, names) -> bool:
    if isinstance(t, int):
        return False
    if t[0] in names and len(set(t[1:])) == 1:
        return True
    return any(_vanishes(c, names) for c in t[1:])


def substitution_counts(signature, pattern) -> dict:
    """How many pattern substitutions survive each vanishing rule.

    ``nonzero`` drops substitutions containing [x,x]; ``power_nonzero`` also
    drops (x,x,x) and Q1(x,x,x,x); ``distinct`` counts canonical monomials
    after skew-symmetry and the power rules.
    """
    arrs = pattern_arrangements(pattern)
    n = len(arrs[0])
    filled = [ops.fill(t, a) for t in ops.operation_types(signature, n) for a in arrs]
    return {
        "substitutions": len(filled),
        "nonzero": sum(not _vanishes(f, {"comm"}) for f in filled),
        "power_nonzero": sum(not _vanishes(f, {"comm", "assoc", "Q1"}) for f in filled),
        "distinct": len(nonlinear_monomials(signature, pattern)[1]),
    }


def special_identity_search(
    pattern: str = "aaaab",
    signature="btq",
    variety: str = "power-assoc",
    delta=Fraction(3, 4),
    lifted: symrep.LiftedModule | None = None,
    method: str | None = None,
) -> SearchResult:
    """Nonlinear identities of one multidegree that do not follow from lower degrees.

    ``method="hnf"`` (the default up to degree 5) takes the identity lattice
    from the Hermite normal form.  ``"rcf"`` (the default in degree 6) reduces
    over Q and clears denominators row by row, which spans the same rational
    space at a fraction of the cost.
    """
    arrs = pattern_arrangements(pattern)
    n = len(arrs[0])
    if n > MAX_DEGREE:
        raise PipelineError(f"pattern degree must be at most {MAX_DEGREE}")
    subs, op_monos = nonlinear_monomials(signature, pattern)
    free_monos = sorted({freealg.fill(t, a) for t in freealg.association_types(n) for a in arrs}, key=freealg.monomial_key)
    findex = {m: i for i, m in enumerate(free_monos)}
    left = len(free_monos)

    def sparse(p):
        return {findex[m]: c for m, c in p.items()}

    rows = [sparse(h) for _, h in nonlinear_consequences(variety, arrs[0])] if variety != "free" else []
    for k, t in enumerate(op_monos):
        vec = sparse(ops.expand(t))
        vec[left + k] = 1
        rows.append(vec)
    width = left + len(op_monos)
    method = method or ("hnf" if n <= 5 else "rcf")
    if method == "hnf":
        dense = [[int(r.get(j, 0)) for j in range(width)] for r in rows]
        h = exactla.hnf(dense)
        right = [row[left:] for row, piv in zip(h.matrix, h.pivots) if piv >= left]
    elif method == "rcf":
        right = []
        for r in RowSpace(rows).rref():
            if min(r) >= left:
                den = math.lcm(*(Fraction(x).denominator for x in r.values()))
                vec = [0] * len(op_monos)
                for j, x in r.items():
                    vec[j - left] = int(x * den)
                right.append(vec)
    else:
        raise PipelineError(f"unknown method {method!r}")
    lattice = []
    for vec in right:
        g = math.gcd(*vec)
        lattice.append([x // g for x in vec])
    reduced = exactla.lll(lattice, delta) if lattice else []
    polys = [normalize(OpPolynomial({op_monos[j]: x for j, x in enumerate(v) if x}, power_rules=True)) for v in reduced]
    module = lifted if lifted is not None else symrep.LiftedModule(n, signature, lower_degree_extras(n))
    survivors = []
    trial = None
    for p in polys:
        lin = varieties.linearize(p)
        if module.contains(lin):
            continue
        if trial is None:
            trial = symrep.LiftedModule.__new__(symrep.LiftedModule)
            trial.n, trial.types, trial.partitions = module.n, module.types, module.partitions
            trial.spaces = {lam: sp.copy() for lam, sp in module.spaces.items()}
        if trial.add(lin):
            survivors.append(p)
    return SearchResult(
        "".join(freealg.letter(i) for i in arrs[0]),
        subs,
        op_monos,
        left,
        (len(rows), width),
        len(lattice),
        polys,
        survivors,
        substitution_counts(signature, pattern),
    )


# ---------------------------------------------------------------------------
# degree-4 Sabinin operations versus the BTQQ operations

_A = {
    1: "[[[{0},{1}],{2}],{3}]",
    2: "[({0},{1},{2}),{3}]",
    3: "[[{0},{1}],[{2},{3}]]",
    4: "([{0},{1}],{2},{3})",
    5: "({0},[{1},{2}],{3})",
    6: "({0},{1},[{2},{3}])",
}

# Akivis elements rewritten in Sabinin operations
_A_SAB = {
    1: "-S2(S2(S2({0},{1}),{2}),{3})",
    2: "-S2(Phi12({0},{1},{2}),{3}) + 1/2*S2(S3({0},{1},{2}),{3})",
    3: "-S2(S2({0},{1}),S2({2},{3}))",
    4: "-Phi12(S2({0},{1}),{2},{3}) + 1/2*S3(S2({0},{1}),{2},{3})",
    5: "-Phi12({0},S2({1},{2}),{3}) + 1/2*S3({0},S2({1},{2}),{3})",
    6: "-Phi12({0},{1},S2({2},{3})) + 1/2*S3({0},{1},S2({2},{3}))",
}


def _combo(pairs, table=_A) -> OpPolynomial:
    """Sum of c * X_i(word) where X is 'A' (from ``table``) or a literal operation name."""
    acc = OpPolynomial()
    for c, what, args in pairs:
        letters = list(args)
        if what.startswith("A"):
            text = table[int(what[1:])].format(*letters)
        else:
            text = f"{what}({','.join(letters)})"
        acc = acc + parse_op_polynomial(text).scale(Fraction(c))
    return acc


def sabinin_from_btqq() -> dict:
    """Sabinin operations of degree <= 4 written in the BTQQ operations."""
    f = Fraction
    return {
        "S2": parse_op_polynomial("-[a,b]"),
        "S3": parse_op_polynomial("-(a,b,c) + (a,c,b)"),
        "Phi12": parse_op_polynomial("1/2*(a,b,c) + 1/2*(a,c,b)"),
        "S4": _combo([(-1, "A2", "acdb"), (1, "A2", "adcb"), (-1, "Q1", "abcd"), (1, "Q1", "abdc")]),
        "Phi13": _combo(
            [
                (2, "A2", "abcd"), (2, "A2", "abdc"), (2, "A2", "acbd"), (-4, "A2", "acdb"),
                (2, "A2", "adbc"), (2, "A2", "adcb"), (-3, "A5", "abcd"), (-1, "A5", "abdc"),
                (-1, "A5", "acdb"), (-2, "A6", "abcd"), (-2, "A6", "acbd"), (-2, "Q1", "abcd"),
                (2, "Q1", "abdc"), (-2, "Q1", "acbd"), (2, "Q1", "acdb"), (6, "Q2", "abcd"),
            ]
        ).scale(f(1, 6)),
        "Phi22": _combo(
            [
                (2, "A2", "acdb"), (2, "A2", "adcb"), (-1, "A4", "abcd"), (-1, "A4", "abdc"),
                (2, "Q1", "abcd"), (2, "Q1", "abdc"),
            ]
        ).scale(f(1, 4)),
    }


def btqq_from_sabinin() -> dict:
    """The BTQQ operations written in the Sabinin operations of degree <= 4."""
    f = Fraction
    return {
        "comm": parse_op_polynomial("-S2(a,b)"),
        "assoc": parse_op_polynomial("Phi12(a,b,c) - 1/2*S3(a,b,c)"),
        "Q1": _combo(
            [
                (-1, "A2", "acdb"), (f(1, 4), "A4", "abcd"), (f(1, 4), "A4", "abdc"),
                (f(-1, 2), "S4", "abcd"), (1, "Phi22", "abcd"),
            ],
            _A_SAB,
        ),
        "Q2": _combo(
            [
                (f(-1, 3), "A2", "abcd"), (f(-2, 3), "A2", "abdc"), (f(-1, 3), "A2", "acbd"),
                (f(1, 3), "A2", "acdb"), (f(1, 2), "A5", "abcd"), (f(1, 6), "A5", "abdc"),
                (f(1, 6), "A5", "acdb"), (f(1, 3), "A6", "abcd"), (f(1, 3), "A6", "acbd"),
                (f(-1, 3), "S4", "abcd"), (f(-1, 3), "S4", "acbd"), (1, "Phi13", "abcd"),
            ],
            _A_SAB,
        ),
    }


SABININ_IDENTITIES = (
    ("S1 skew, degree 2", "S2(a,b) + S2(b,a)"),
    ("S1 skew, degree 3", "S3(a,b,c) + S3(a,c,b)"),
    ("S1 skew, degree 4", "S4(a,b,c,d) + S4(a,b,d,c)"),
    ("S2 with r = m = 0", "S4(a,b,c,d) - S4(b,a,c,d) + S3(S2(a,b),c,d)"),
    ("S3 with r = 0 (Akivis)", "S3(a,b,c) + S3(b,c,a) + S3(c,a,b) + S2(S2(b,c),a) + S2(S2(c,a),b) + S2(S2(a,b),c)"),
    (
        "S3 with r = 1",
        "S4(a,b,c,d) + S4(a,c,d,b) + S4(a,d,b,c)"
        " + S2(S3(a,c,d),b) + S2(S3(a,d,b),c) + S2(S3(a,b,c),d)"
        " + S3(a,S2(c,d),b) + S3(a,S2(d,b),c) + S3(a,S2(b,c),d)",
    ),
    ("S4 Phi12 symmetry", "Phi12(a,b,c) - Phi12(a,c,b)"),
    ("S4 Phi13 symmetry (1 2)", "Phi13(a,b,c,d) - Phi13(a,c,b,d)"),
    ("S4 Phi13 symmetry (2 3)", "Phi13(a,b,c,d) - Phi13(a,b,d,c)"),
    ("S4 Phi22 symmetry x", "Phi22(a,b,c,d) - Phi22(b,a,c,d)"),
    ("S4 Phi22 symmetry y", "Phi22(a,b,c,d) - Phi22(a,b,d,c)"),
)


def btqq_module(n: int) -> varieties.ConsequenceSpace:
    """Degree-n consequences (n = 3, 4) of the BTQQ identities in the BTQQ operations."""
    ob = ops.operation_basis("btqq", n)
    ids = btqq_identities()
    if n == 3:
        return varieties.consequence_space([ids[1]], 3, ob)
    return varieties.consequence_space(varieties.lift(ids[1], "commutator") + list(ids[2:]), 4, ob)


def sabinin_module(n: int) -> varieties.ConsequenceSpace:
    """Degree-n consequences (n = 3, 4) of the degree-4 Sabinin identities."""
    ob = ops.operation_basis("sabinin4", n)
    akivis = parse_op_polynomial(SABININ_IDENTITIES[4][1])
    if n == 3:
        return varieties.consequence_space([akivis], 3, ob)
    gens = varieties.lift_with(akivis, "S2", drop_last=True)
    gens += [parse_op_polynomial(SABININ_IDENTITIES[i][1]) for i in (3, 5)]
    return varieties.consequence_space(gens, 4, ob)


def _degree(p: OpPolynomial) -> int:
    return max((ops.degree(t) for t in p), default=0)


def sabinin_btqq_checks() -> dict:
    """Named boolean checks of the BTQQ / degree-4 Sabinin correspondence."""
    out: dict = {}
    for i, text in enumerate(BTQQ_IDENTITIES, 1):
        out[f"BTQQ identity {i} expands to zero"] = not expand_raw(ops.parse_raw(text))
    to_sab = sabinin_from_btqq()
    to_btqq = btqq_from_sabinin()
    for name, d in to_sab.items():
        n = ops.REGISTRY[name].arity
        out[f"{name} agrees with its BTQQ form in F{{X}}"] = ops.expand(d) == ops.expand((name,) + tuple(range(n)))
    for name, d in to_btqq.items():
        n = ops.REGISTRY[name].arity
        out[f"{name} agrees with its Sabinin form in F{{X}}"] = ops.expand(d) == ops.expand((name,) + tuple(range(n)))
    btqq_mods = {3: btqq_module(3), 4: btqq_module(4)}
    sab_mods = {3: sabinin_module(3), 4: sabinin_module(4)}
    for label, text in SABININ_IDENTITIES:
        raw = ops.parse_raw(text)
        conv = ops.compose(raw, to_sab)
        n = _degree(conv) or max(ops.degree(t) for t in raw)
        ok = not ops.expand(conv)
        if conv and n in btqq_mods:
            ok = ok and btqq_mods[n].contains(conv)
        out[f"{label} holds for the BTQQ-defined operations"] = ok
    for i, text in enumerate(BTQQ_IDENTITIES, 1):
        raw = ops.parse_raw(text)
        conv = ops.compose(raw, to_btqq)
        n = max(ops.degree(t) for t in raw)
        ok = not ops.expand(conv)
        if conv and n in sab_mods:
            ok = ok and sab_mods[n].contains(conv)
        out[f"BTQQ identity {i} holds for the Sabinin-defined operations"] = ok
    for name in to_btqq:
        n = ops.REGISTRY[name].arity
        back = ops.compose(to_btqq[name], to_sab) - OpPolynomial.term((name,) + tuple(range(n)))
        ok = not back or (n in btqq_mods and btqq_mods[n].contains(back))
        out[f"{name} round trip through Sabinin operations"] = ok
    for name in to_sab:
        n = ops.REGISTRY[name].arity
        back = ops.compose(to_sab[name], to_btqq) - OpPolynomial.term((name,) + tuple(range(n)))
        ok = not back or (n in sab_mods and sab_mods[n].contains(back))
        out[f"{name} round trip through BTQQ operations"] = ok
    return out
