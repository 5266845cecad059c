import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyident import freealg
from polyident.freealg import Polynomial, var

from strategies import multilinear_polynomials, permutations


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_size(n):
    assert len(freealg.multilinear_basis(n)) == math.factorial(n) * freealg.catalan(n)


def test_association_types_descending():
    shapes = [freealg.render_monomial(freealg.fill(t, range(4))) for t in freealg.association_types(4)]
    assert shapes == ["(((a b) c) d)", "((a (b c)) d)", "((a b) (c d))", "(a ((b c) d))", "(a (b (c d)))"]


def test_degree3_basis_order():
    got = [freealg.render_monomial(m) for m in freealg.multilinear_basis(3).monomials]
    assert got[:2] == ["((a b) c)", "((a c) b)"] and got[6] == "(a (b c))"


def test_parse_render():
    p = freealg.parse_polynomial("((a b) c) - 1/2*(a (b c))")
    assert p.terms[((0, 1), 2)] == 1 and p.terms[(0, (1, 2))] == Fraction(-1, 2)
    assert freealg.parse_polynomial(freealg.render_polynomial(p)) == p
    assert freealg.parse_polynomial("0") == Polynomial()


@pytest.mark.parametrize("bad", ["(a b", "a +", "((a b) c) d", "(a 1)"])
def test_parse_errors(bad):
    with pytest.raises(freealg.FreeAlgebraError):
        freealg.parse_polynomial(bad)


def test_commutator_and_associator():
    a, b, c = (var(i) for i in range(3))
    assert freealg.commutator(a, b) == freealg.mul(a, b) - freealg.mul(b, a)
    assert len(freealg.associator(a, b, c)) == 2
    assert freealg.commutator(a, a) == Polynomial()


def test_substitute():
    a, b, c = (var(i) for i in range(3))
    p = freealg.commutator(a, b)
    q = freealg.substitute(p, [freealg.mul(a, c), b])
    assert q == freealg.commutator(freealg.mul(a, c), b)


def test_primitive_elements():
    a, b, c = (var(i) for i in range(3))
    assert freealg.is_primitive(freealg.commutator(a, b))
    assert freealg.is_primitive(freealg.associator(a, b, c))
    assert not freealg.is_primitive(freealg.mul(a, b))
    assert not freealg.is_primitive(freealg.product(a, b, c))


@given(multilinear_polynomials())
def test_roundtrip(p):
    assert freealg.parse_polynomial(freealg.render_polynomial(p)) == p


@given(multilinear_polynomials(), multilinear_polynomials())
def test_addition_commutes(p, q):
    assert p + q == q + p
    assert (p + q) - q == p


@settings(max_examples=40)
@given(st.data())
def test_relabel_composes(data):
    n = data.draw(st.integers(2, 4))
    p = data.draw(multilinear_polynomials(n))
    s = data.draw(permutations(n))
    t = data.draw(permutations(n))
    assert p.relabel(s).relabel(t) == p.relabel([t[s[i]] for i in range(n)])


@given(multilinear_polynomials(3))
def test_vector_roundtrip(p):
    basis = freealg.multilinear_basis(3)
    assert basis.polynomial(basis.vector(p)) == p
    assert basis.polynomial(basis.sparse(p)) == p
