import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyident import freealg, ops, pipeline, varieties
from polyident.freealg import var
from polyident.ops import OpPolynomial


def test_linearize_third_power():
    t = varieties.T()
    a, b, c = (var(i) for i in range(3))
    expected = freealg.Polynomial()
    for x, y, z in itertools.permutations([a, b, c]):
        expected = expected + freealg.associator(x, y, z)
    assert t == expected


def test_linearize_fourth_power():
    f = varieties.F()
    ws = [var(i) for i in range(4)]
    expected = freealg.Polynomial()
    for w, x, y, z in itertools.permutations(ws):
        expected = expected + freealg.associator(freealg.mul(w, x), y, z)
    assert f == expected


def test_linearize_rejects_inhomogeneous():
    with pytest.raises(varieties.VarietyError):
        varieties.linearize(freealg.parse_polynomial("((a a) b) + (a a)"))


def test_linearize_skew_square_vanishes():
    assert not ops.expand(varieties.linearize(ops.parse_op_polynomial("[a,a]")))


def test_lift_counts():
    assoc = freealg.parse_polynomial("((a b) c) - (a (b c))")
    assert len(varieties.lift(assoc, "product")) == 5
    ak = ops.parse_op_polynomial(pipeline.AKIVIS_IDENTITY)
    assert len(varieties.lift(ak, "commutator")) == 4
    assert len(varieties.lift(ak, "associator")) == 6


def test_akivis_lifts():
    ak = ops.parse_op_polynomial(pipeline.AKIVIS_IDENTITY)
    lifts = varieties.lift(ak, "commutator")
    assert all(varieties.arity(g) == 4 for g in lifts)
    # the first lifting substitutes [a,d] for a
    assert lifts[0] == ops.substitute(ak, [OpPolynomial.term(("comm", 0, 3)), OpPolynomial.term(1), OpPolynomial.term(2)])
    space = varieties.consequence_space(lifts, 4, ops.operation_basis("btqq", 4))
    assert space.rank == 10


def test_power_associative_generator_counts():
    assert len(varieties.power_associative_consequences(3)) == 1
    assert len(varieties.power_associative_consequences(4)) == 33
    assert len(varieties.power_associative_consequences(5)) == 36


def test_degree4_power_associative_space():
    space = varieties.variety_space("power-assoc", 4)
    for g in (*varieties.T_liftings(), varieties.F()):
        assert space.contains(g)
    assert space.is_permutation_stable()


def test_quaternator_orbit_sum():
    q = OpPolynomial({("Q1",) + p: 1 for p in itertools.permutations(range(4))})
    t1, t2, t3 = varieties.T_liftings()
    cyc = lambda p: [p.relabel([(j + s) % 4 for j in range(4)]) for s in range(4)]
    rhs = varieties.F()
    for p in cyc(t2) + cyc(t3):
        rhs = rhs - p
    assert ops.expand(q) == rhs


def test_rank_sequence():
    t1, t2, t3 = varieties.T_liftings()
    space = varieties.consequence_space([], 4)
    seq = []
    for g in [t1, t2, t3] + [ops.expand(ops.akivis_element(i)) for i in range(1, 7)]:
        space.add([g])
        seq.append(space.rank)
    assert seq == [12, 16, 20, 32, 46, 49, 61, 73, 73]


def test_empty_space():
    assert varieties.consequence_space([], 3).rank == 0


def test_unknown_variety():
    with pytest.raises(varieties.VarietyError):
        varieties.variety_generators("alternative", 4)


@settings(max_examples=20, deadline=None)
@given(st.permutations(list(range(4))))
def test_lifted_space_is_permutation_stable(sigma):
    ak = ops.parse_op_polynomial(pipeline.AKIVIS_IDENTITY)
    space = pipeline.akivis_consequences(4)
    for g in varieties.lift(ak, "commutator"):
        assert space.contains(g.relabel(sigma))
