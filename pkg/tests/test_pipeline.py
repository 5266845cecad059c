import itertools
from fractions import Fraction

import pytest

from polyident import ops, pipeline, varieties
from polyident.ops import OpPolynomial


def test_degree3_completeness():
    ib = pipeline.find_identities("btq", 3, "tpa")
    ob = ib.basis
    found = varieties.consequence_space(ib.polynomials(), 3, ob)
    lemma = varieties.consequence_space(list(pipeline.btq_degree3_identities()), 3, ob)
    assert found.rank == lemma.rank
    assert all(found.contains(p) for p in pipeline.btq_degree3_identities())


def test_free_identities_degree3():
    # only the Akivis identity (and skew-symmetry, built into the basis)
    ib = pipeline.find_identities("akivis", 3, "free")
    assert len(ib) == 1
    assert varieties.consequence_space(ib.polynomials(), 3, ib.basis).contains(
        ops.parse_op_polynomial(pipeline.AKIVIS_IDENTITY))


def test_rcf_and_hnf_agree():
    r = pipeline.find_identities("btq", 4, "power-assoc", method="rcf")
    h = pipeline.find_identities("btq", 4, "power-assoc", method="hnf")
    assert (len(r), r.left_rank) == (len(h), h.left_rank) == (38, 82)
    span = varieties.consequence_space(r.polynomials(), 4, r.basis)
    assert all(span.contains(p) for p in h.polynomials())


def test_identity_rows_are_sound():
    ib = pipeline.find_identities("btq", 4, "power-assoc", method="hnf")
    space = varieties.variety_space("power-assoc", 4)
    assert all(space.contains(ops.expand(p)) for p in ib.polynomials())


def test_bad_arguments():
    with pytest.raises(pipeline.PipelineError):
        pipeline.find_identities("btq", 7)
    with pytest.raises(pipeline.PipelineError):
        pipeline.find_identities("btq", 3, method="svd")


def test_known_equals_all_gives_nothing():
    ib = pipeline.find_identities("btqq", 4, "free")
    known = varieties.consequence_space(ib.polynomials(), 4, ib.basis)
    gs = pipeline.new_generators(ib.polynomials(), known)
    assert gs.generators == [] and gs.quotient_dimension == 0


def test_generators_order_insensitive():
    ib = pipeline.find_identities("btqq", 4, "free")
    known = pipeline.akivis_consequences(4)
    cands = ib.polynomials()
    a = pipeline.new_generators(cands, known)
    b = pipeline.new_generators(list(reversed(cands)), known, presorted=True)
    sa, sb = known.copy(), known.copy()
    sa.add(a.generators)
    sb.add(b.generators)
    assert sa.rank == sb.rank == known.rank + 35
    assert all(sa.contains_module(g) for g in b.generators)


def test_express_trivial_and_nonmember():
    q1 = OpPolynomial.term(ops.quaternator(1))
    e = pipeline.express_over_module(q1, [q1], 4)
    assert len(e) == 1 and e.terms[0][0] == 1
    q2 = OpPolynomial.term(ops.quaternator(2))
    akivis = [OpPolynomial.term(ops.akivis_element(i)) for i in range(1, 7)]
    assert pipeline.express_over_module(q2, akivis, 4) is None


def test_verify_free_and_power_associative():
    ids = pipeline.btq_degree4_identities()
    assert pipeline.verify_identity(ids[1], "free").holds
    assert not pipeline.verify_identity(ids[3], "free").holds
    v = pipeline.verify_identity(ids[3], "power-assoc")
    assert v.holds and v.certificate


def test_special_certificate():
    fam = pipeline.special_certificate_family()
    assert len(fam) == 29
    v = pipeline.verify_identity(pipeline.special_identity(), "power-assoc", fam)
    assert v.holds
    assert {c.denominator for c, _ in v.certificate} <= {1, 2, 3, 5, 6, 10, 15, 30}


def test_parse_product_matches_definitions():
    from polyident import freealg

    t = pipeline.parse_product("T(a,b,c)")
    assert t == varieties.T()
    f = pipeline.parse_product("F(a,b,c,d)")
    assert f == varieties.F()
    assert pipeline.parse_product("(ab)c") == freealg.product(*(freealg.var(i) for i in range(3)))


def test_substitution_counts():
    c = pipeline.substitution_counts("btq", "aaaab")
    assert c == {"substitutions": 110, "nonzero": 49, "power_nonzero": 38, "distinct": 27}


def test_special_search_degree5():
    res = pipeline.special_identity_search("aaaab")
    assert res.lattice_rank == len(res.reduced)
    assert [pipeline.normalize(p) for p in res.survivors] == [pipeline.normalize(pipeline.special_identity())]


def test_special_search_methods_agree():
    hnf = pipeline.special_identity_search("aaaab", method="hnf")
    rcf = pipeline.special_identity_search("aaaab", method="rcf")
    assert hnf.lattice_rank == rcf.lattice_rank
    assert [pipeline.normalize(p) for p in rcf.survivors] == [pipeline.normalize(p) for p in hnf.survivors]
    with pytest.raises(pipeline.PipelineError):
        pipeline.special_identity_search("aaaab", method="smith")


def test_special_search_degree4_finds_nothing_new():
    res = pipeline.special_identity_search("aaaa")
    assert res.survivors == []


def test_special_search_pattern_guard():
    with pytest.raises(pipeline.PipelineError):
        pipeline.special_identity_search("aaaabbb")


def test_normalize():
    p = ops.parse_op_polynomial("-2*[a,b] + 4*(a,b,c)")
    n = pipeline.normalize(p)
    assert sorted(c for _, c in n.sorted_terms()) in ([-2, 1], [-1, 2])
    assert n.sorted_terms()[0][1] > 0


def test_sabinin_checks_all_pass():
    checks = pipeline.sabinin_btqq_checks()
    assert len(checks) == 41
    assert all(checks.values()), [k for k, v in checks.items() if not v]


def test_sabinin_formulas_expand_correctly():
    for name, d in pipeline.sabinin_from_btqq().items():
        n = ops.REGISTRY[name].arity
        assert ops.expand(d) == ops.expand((name,) + tuple(range(n)))


def test_special_search_degree6(allow_large):
    if not allow_large:
        pytest.skip("needs --allow-large")
    res = pipeline.special_identity_search("aaabbb")
    assert res.counts == {"substitutions": 1600, "nonzero": 960, "power_nonzero": 934, "distinct": 550}
    assert res.lattice_rank == 314
    assert len(res.survivors) == 1
