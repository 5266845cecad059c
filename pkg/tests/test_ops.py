import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyident import freealg, ops
from polyident.ops import OpPolynomial

from strategies import op_terms, permutations


def test_parse_examples():
    assert ops.parse_term("[(a,b,c),d]") == ops.akivis_element(2)
    assert ops.parse_term("Q1(a,b,c,d)") == ("Q1", 0, 1, 2, 3)
    p = ops.parse_op_polynomial("1/4*[[a,b],[c,d]] - 2*(a,b,(c,d,e))")
    assert len(p) == 2


def test_skew_canonical_form():
    p = ops.parse_op_polynomial("[b,a] + [a,b]")
    assert not p
    assert ops.canonicalize(("comm", 0, 0))[0] == 0


def test_power_rules():
    assert not ops.parse_op_polynomial("(a,a,a)", power_rules=True)
    assert not ops.parse_op_polynomial("Q1(a,a,a,a)", power_rules=True)
    assert ops.parse_op_polynomial("(a,a,a)")
    assert ops.parse_op_polynomial("Q1(a,a,a,b)", power_rules=True)


@pytest.mark.parametrize("bad", ["[a,", "Z1(a,b)", "Q1(a,b,c)", "[a,b] +", "(a,b)"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        ops.parse_op_polynomial(bad)


def test_expand_commutator_associator():
    assert ops.expand(("comm", 0, 1)) == freealg.commutator(freealg.var(0), freealg.var(1))
    assert ops.expand(ops.parse_op_polynomial("[a,b] + [b,a]")) == freealg.Polynomial()


def test_type_counts():
    assert ops.type_counts("btqq", 4) == [12, 24, 3, 12, 12, 12, 24, 24]
    assert ops.type_counts("btq", 4) == [12, 24, 3, 12, 12, 12, 24]
    assert len(ops.canonical_monomials("btq", 4)) == 99
    assert len(ops.operation_types("btq", 5)) == 22


def test_p_mn_primitive():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        assert freealg.is_primitive(ops.p_mn(m, n))


def test_registry_checks_symmetry():
    sym = ops.OperationSymbol("bad", 2, freealg.mul(freealg.var(0), freealg.var(1)), skew=((0, 1),))
    with pytest.raises(ops.OperationError):
        ops.Registry().register(sym)


def test_operation_basis_roundtrip():
    ob = ops.operation_basis("btqq", 4)
    p = ops.parse_op_polynomial("Q2(a,b,c,d) - [(a,b,c),d]")
    assert ob.polynomial(ob.vector(p)) == p


def test_compose_raw_mapping():
    # compose sees the raw terms, so skew pairs are not cancelled before substitution
    raw = ops.parse_raw("[a,b] + [b,a]")
    defs = {"comm": OpPolynomial.term(("comm", 0, 1))}
    assert not ops.compose(raw, defs)


@settings(max_examples=60)
@given(st.integers(2, 5).flatmap(lambda n: op_terms(range(n))))
def test_render_parse_roundtrip(t):
    s, c = ops.canonicalize(t)
    if s:
        assert ops.parse_term(ops.render_term(c)) == c


@settings(max_examples=40)
@given(st.integers(2, 5).flatmap(lambda n: op_terms(range(n))))
def test_canonicalize_preserves_expansion(t):
    s, c = ops.canonicalize(t)
    assert ops.expand(t) == ops.expand(c).scale(s)


@settings(max_examples=30)
@given(st.data())
def test_expand_commutes_with_relabel(data):
    n = data.draw(st.integers(2, 4))
    t = data.draw(op_terms(range(n)))
    s = data.draw(permutations(n))
    p = OpPolynomial.term(t)
    assert ops.expand(p.relabel(s)) == ops.expand(p).relabel(s)
