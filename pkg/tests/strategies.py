"""Hypothesis strategies shared by the unit tests."""

from fractions import Fraction

from hypothesis import strategies as st

from polyident import freealg, ops

small = st.integers(-5, 5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def multilinear_polynomials(draw, n=None):
    n = n or draw(st.integers(2, 4))
    basis = freealg.multilinear_basis(n).monomials
    picks = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=6, unique=True))
    return freealg.Polynomial({m: draw(rationals) for m in picks})


@st.composite
def op_terms(draw, letters):
    """A random operation term over the given letters (each used once)."""
    letters = list(letters)
    if len(letters) == 1:
        return letters[0]
    names = [k for k in ("comm", "assoc", "Q1", "Q2") if ops.REGISTRY[k].arity <= len(letters)]
    name = draw(st.sampled_from(names))
    k = ops.REGISTRY[name].arity
    cuts = sorted(draw(st.lists(st.integers(1, len(letters) - 1), min_size=k - 1, max_size=k - 1, unique=True)))
    bounds = [0] + cuts + [len(letters)]
    return (name,) + tuple(draw(op_terms(letters[bounds[i]:bounds[i + 1]])) for i in range(k))


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


@st.composite
def integer_matrices(draw, max_rows=5, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]
