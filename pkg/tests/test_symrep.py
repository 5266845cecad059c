import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyident import symrep


def test_partitions_and_dims():
    assert symrep.partitions(5) == ((5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1))
    assert [symrep.dim(l) for l in symrep.partitions(5)] == [1, 4, 5, 6, 5, 4, 1]
    assert [symrep.dim(l) for l in symrep.partitions(6)] == [1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_sum_of_squares(n):
    import math

    assert sum(symrep.dim(l) ** 2 for l in symrep.partitions(n)) == math.factorial(n)


def test_tableaux():
    assert len(symrep.standard_tableaux((3, 2, 1))) == 16
    assert symrep.conjugate((3, 1)) == (2, 1, 1)


def test_partition_text():
    assert symrep.parse_partition("311") == (3, 1, 1)
    assert symrep.format_partition((2, 1, 1)) == "211"
    with pytest.raises(symrep.RepresentationError):
        symrep.parse_partition("13")


def test_identity_maps_to_identity():
    for lam in symrep.partitions(4):
        d = symrep.dim(lam)
        m = symrep.repr_matrix(lam, tuple(range(4)))
        assert [list(r) for r in m] == [[int(i == j) for j in range(d)] for i in range(d)]


def test_trivial_and_sign():
    for p in itertools.permutations(range(4)):
        assert symrep.repr_matrix((4,), p) == ((1,),)
        inv = sum(1 for i in range(4) for j in range(i) if p[j] > p[i])
        assert symrep.repr_matrix((1, 1, 1, 1), p) == (((-1) ** inv,),)


def _mm(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))) for i in range(len(a)))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_homomorphism(data):
    n = data.draw(st.integers(2, 5))
    lam = data.draw(st.sampled_from(symrep.partitions(n)))
    p = tuple(data.draw(st.permutations(list(range(n)))))
    q = tuple(data.draw(st.permutations(list(range(n)))))
    assert symrep.repr_matrix(lam, symrep.compose(p, q)) == _mm(symrep.repr_matrix(lam, p), symrep.repr_matrix(lam, q))


def test_degree4_rank_agreement():
    from polyident import ops, varieties
    from polyident.ops import OpPolynomial

    gens = [OpPolynomial.term(ops.quaternator(1))]
    gens += [OpPolynomial.term(ops.akivis_element(i)) for i in range(1, 7)]
    gens += list(varieties.T_liftings())
    types = symrep.free_types(4)
    total = sum(symrep.dim(l) * symrep.module_rank(gens, l, types) for l in symrep.partitions(4))
    assert total == 82 == varieties.consequence_space([ops.expand(g) if isinstance(g, OpPolynomial) else g for g in gens], 4).rank


def test_rank_analysis_degree_guard():
    with pytest.raises(symrep.RepresentationError):
        symrep.partition_rank_analysis(4)


def test_degree5_partition_41():
    (r,) = symrep.partition_rank_analysis(5, partitions_=[(4, 1)])
    assert (r.dim, r.rank_symm_lift, r.rank_all, r.new) == (4, 73, 74, 1)
    assert r.as_dict()["partition"] == "41"


def test_render_table():
    rows = [symrep.PartitionReport((4, 1), 4, 73, 74)]
    text = symrep.render_table(rows)
    assert text.splitlines()[1].split() == ["41", "4", "73", "74", "1"]
