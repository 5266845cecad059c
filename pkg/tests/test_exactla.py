import io
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polyident import exactla

from strategies import integer_matrices


def test_rcf_small():
    r = exactla.rcf([[2, 4, 2], [1, 2, 3]])
    assert r.rank == 2
    assert r.pivots == [0, 2]
    assert r.matrix == [[1, 2, 0], [0, 0, 1]]


def test_hnf_small():
    h = exactla.hnf([[2, 4], [3, 5]])
    assert h.matrix == [[1, 1], [0, 2]]
    assert h.pivots == [0, 1]


def test_lll_known_example():
    basis = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    red = exactla.lll(basis, sort=False)
    assert exactla.is_lll_reduced(red)
    assert exactla.same_lattice(red, basis)
    # the last step meets a tie mu = 1/2; either rounding is a valid basis
    assert red[:2] == [[0, 1, 0], [1, 0, 1]]
    assert sorted(sum(x * x for x in v) for v in red) == [1, 2, 5]


def test_lll_rejects_dependent_rows():
    with pytest.raises(exactla.LinearAlgebraError):
        exactla.lll([[1, 2], [2, 4]])


def test_lll_delta_range():
    with pytest.raises(exactla.LinearAlgebraError):
        exactla.lll([[1, 0]], Fraction(1, 4))


def test_rowspace_incremental():
    sp = exactla.RowSpace()
    assert sp.add({0: 2, 2: 4})
    assert not sp.add({0: 1, 2: 2})
    assert sp.add({1: 3})
    assert sp.rank == 2
    assert sp.contains({0: 1, 1: 1, 2: 2})
    assert sp.rref(3) == [{0: 1, 2: 2}, {1: 1}]


def test_solve_in_column_space():
    m = [[1, 0, 1], [0, 1, 1]]
    cols, coeffs = exactla.solve_in_column_space(m, [2, 3])
    assert cols == [0, 1] and coeffs == [2, 3]
    with pytest.raises(exactla.NotInColumnSpace):
        exactla.solve_in_column_space([[1], [1]], [1, 0])


def test_matrix_text_format():
    m = [[1, Fraction(-1, 2)], [0, 3]]
    buf = io.StringIO()
    exactla.write_matrix(m, buf)
    assert buf.getvalue() == "2 2\n1 -1/2\n0 3\n"
    assert exactla.read_matrix(io.StringIO(buf.getvalue())) == m
    with pytest.raises(exactla.LinearAlgebraError):
        exactla.read_matrix(io.StringIO("2 2\n1 2 3"))


@given(integer_matrices())
def test_rcf_idempotent(m):
    r = exactla.rcf(m)
    assert exactla.rcf(r.matrix).matrix == r.matrix


@given(integer_matrices())
def test_rank_matches_rowspace(m):
    sp = exactla.RowSpace({j: x for j, x in enumerate(row) if x} for row in m)
    assert sp.rank == exactla.rank(m) == exactla.rank(exactla.transpose(m))


@given(integer_matrices())
def test_hnf_preserves_lattice(m):
    h = exactla.hnf(m)
    assert h.rank == exactla.rank(m)
    assert exactla.same_lattice(h.matrix[: h.rank], m)
    for i, c in enumerate(h.pivots):
        assert h.matrix[i][c] > 0
        assert all(0 <= h.matrix[k][c] < h.matrix[i][c] for k in range(i))


@settings(max_examples=60)
@given(integer_matrices(max_rows=4, max_cols=5), st.sampled_from([Fraction(3, 4), Fraction(99, 100)]))
def test_lll_properties(m, delta):
    assume(exactla.rank(m) == len(m))
    red = exactla.lll(m, delta, sort=False)
    assert exactla.same_lattice(red, m)
    assert exactla.is_lll_reduced(red, delta)
