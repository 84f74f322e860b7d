
import pytest

import hopfbrace as hb
import oracle
from hopfbrace.linalg import SparseVector


def H_of(brace):
    return hb.HopfBrace(brace)


# ----------------------------------------------------------------- series

def test_left_series_values(radical_c4, opp_s3, by_name):
    assert hb.left_series(H_of(radical_c4)).sizes() == [4, 2, 1]
    res = hb.left_series(H_of(opp_s3))
    assert res.sizes() == [6, 3, 3]
    assert res.stabilized and res.nil_class is None
    triv = hb.trivial_brace(hb.cyclic_group(2))
    assert hb.left_series(H_of(triv)).sizes() == [2, 1]
    # trivial brace on any group: the star product collapses immediately
    _, triv_s4 = by_name["trivial:S4"]
    assert hb.left_series(H_of(triv_s4)).sizes() == [24, 1]


def test_right_series_values(radical_c4, opp_s3):
    res = hb.right_series(H_of(radical_c4))
    assert res.sizes() == [4, 2, 1] and res.nil_class == 3
    assert hb.right_series(H_of(opp_s3)).sizes() == [6, 3, 3]
    triv = hb.trivial_brace(hb.cyclic_group(4))
    assert hb.right_series(H_of(triv)).sizes() == [4, 1]


def test_gamma_series_values(radical_c4, triv_s3, by_name):
    assert hb.gamma_series(H_of(radical_c4)).sizes() == [4, 2, 1]
    res = hb.gamma_series(H_of(triv_s3))
    assert res.sizes() == [6, 3, 3]
    assert res.terms[1].carrier == (0, 3, 4)
    triv_ab = hb.trivial_brace(hb.cyclic_group(6))
    assert hb.gamma_series(H_of(triv_ab)).sizes() == [6, 1]
    _, mixed = by_name["prod:radical_c4,trivial:S3"]
    assert hb.gamma_series(H_of(mixed)).sizes() == [24, 6, 3, 3]


def test_series_against_oracle(catalog):
    for desc, brace in catalog:
        if desc.order > 24:
            continue
        dot = brace.dot.table.tolist()
        circ = brace.circ.table.tolist()
        H = H_of(brace)
        assert [t.dim for t in hb.left_series(H).terms] \
            == [len(t) for t in oracle.left_series(dot, circ)]
        assert [t.dim for t in hb.right_series(H).terms] \
            == [len(t) for t in oracle.right_series(dot, circ)]
        assert [t.dim for t in hb.gamma_series(H).terms] \
            == [len(t) for t in oracle.gamma_series(dot, circ)]


def test_series_term_properties(catalog):
    for desc, brace in catalog:
        H = H_of(brace)
        for term in hb.left_series(H).terms:
            assert term.is_strong()
        right = hb.right_series(H)
        for k, term in enumerate(right.terms):
            assert term.is_normal() and term.is_normal_via_star()
            if k:
                assert right.terms[k - 1].contains(term)


def test_max_n_truncates(radical_c4):
    res = hb.right_series(H_of(radical_c4), max_n=2)
    assert res.sizes() == [4, 2] and res.nil_class is None
    with pytest.raises(ValueError):
        hb.left_series(H_of(radical_c4), max_n=0)


# ------------------------------------------------------------ commutators

def test_relative_commutator_values(radical_c4, opp_s3):
    H = H_of(radical_c4)
    assert hb.relative_commutator(hb.trivial_subbrace(H), H).carrier == (0,)
    assert hb.relative_commutator(hb.Subbrace(H, (0, 2)), H).carrier == (0,)
    Ho = H_of(opp_s3)
    assert hb.relative_commutator(hb.Subbrace(Ho, (0, 3, 4)), Ho).carrier \
        == (0, 3, 4)


def test_relative_commutator_requires_normal(triv_s3):
    Ht = H_of(triv_s3)
    sub = hb.Subbrace(Ht, Ht.base.dot.subgroup_generated([1]))
    with pytest.raises(hb.NormalityError):
        hb.relative_commutator(sub, Ht)


def test_huq_commutator_values(radical_c4, opp_s3, triv_s3):
    H = H_of(radical_c4)
    assert hb.huq_commutator(hb.whole_subbrace(H), H).carrier == (0, 2)
    Ht = H_of(triv_s3)
    assert hb.huq_commutator(hb.whole_subbrace(Ht), Ht).carrier == (0, 3, 4)
    Ho = H_of(opp_s3)
    assert hb.huq_commutator(hb.whole_subbrace(Ho), Ho).carrier == (0, 3, 4)


def test_gamma_equals_iterated_huq(catalog):
    for desc, brace in catalog:
        H = H_of(brace)
        res = hb.gamma_series(H)   # raises CrossCheckError on any mismatch
        for n in range(1, len(res.terms)):
            huq = hb.huq_commutator(res.terms[n - 1], H)
            assert huq.carrier == res.terms[n].carrier


def test_relative_commutator_normal_and_contained(catalog):
    for desc, brace in catalog:
        H = H_of(brace)
        for term in hb.right_series(H).terms:
            rel = hb.relative_commutator(term, H)
            assert rel.is_normal()
            assert term.contains(rel)


# ------------------------------------------------------------- hopf center

def test_hopf_center_values(radical_c4, opp_s3, triv_s3):
    assert hb.hopf_center(H_of(radical_c4)).carrier == (0, 1, 2, 3)
    assert hb.hopf_center(H_of(opp_s3)).carrier == (0,)
    assert hb.hopf_center(H_of(triv_s3)).carrier == (0,)
    d4 = hb.trivial_brace(hb.dihedral_group(4))
    assert hb.hopf_center(H_of(d4)).dim == 2


def test_hopf_center_is_strong_and_central(catalog):
    for desc, brace in catalog:
        hz = hb.hopf_center(H_of(brace))
        assert hz.is_strong()
        for g in hz.carrier:
            for x in range(brace.order):
                assert brace.dot.mul(g, x) == brace.dot.mul(x, g)


# --------------------------------------------------------------- socle/ann

def test_socle_values(radical_c4, opp_s3):
    soc = hb.socle_annihilator(H_of(radical_c4))
    assert soc.socle.carrier == (0, 2)
    assert soc.annihilator.carrier == (0, 2)
    # e1 - e3 solves the defining linear system: the space is strictly
    # larger than the group-like span, and that is reported, not hidden
    assert soc.socle_space.dim == 3 and soc.socle_strict
    assert soc.annihilator_space.dim == 3 and soc.annihilator_strict
    assert soc.socle_space.contains(SparseVector({1: 1, 3: -1}))
    soc2 = hb.socle_annihilator(H_of(opp_s3))
    assert soc2.socle.carrier == (0,)
    assert soc2.annihilator.carrier == (0,)
    assert soc2.socle_space.dim == 1 and not soc2.socle_strict


def test_socle_of_trivial_brace_is_center(catalog):
    for desc, brace in catalog:
        if desc.construction != "trivial":
            continue
        soc = hb.socle_annihilator(H_of(brace))
        z = brace.dot.center()
        assert soc.socle.carrier == z
        assert soc.annihilator.carrier == z
        assert soc.socle_space.dim == len(z) and not soc.socle_strict


def test_socle_properties_everywhere(catalog):
    for desc, brace in catalog:
        soc = hb.socle_annihilator(H_of(brace))
        assert soc.socle.is_normal() and soc.annihilator.is_normal()
        assert soc.socle.contains(soc.annihilator)
        assert soc.socle_space.contains_space(soc.socle_span)
        assert soc.annihilator_space.contains_space(soc.annihilator_span)
        # S = T on the socle carrier
        for g in soc.socle.carrier:
            assert brace.dot.inv(g) == brace.circ.inv(g)
        assert soc.socle.carrier == tuple(sorted(oracle.soc_carrier(
            brace.dot.table.tolist(), brace.circ.table.tolist())))
        assert soc.annihilator.carrier == tuple(sorted(oracle.ann_carrier(
            brace.dot.table.tolist(), brace.circ.table.tolist())))


def test_socle_carriers_match_oracle_products(catalog, by_name):
    _, prod = by_name["prod:radical_c4,radical_c4"]
    soc = hb.socle_annihilator(H_of(prod))
    assert soc.socle.carrier == (0, 2, 8, 10)
    _, mixed = by_name["prod:radical_c4,trivial:S3"]
    soc = hb.socle_annihilator(H_of(mixed))
    assert soc.socle.carrier == (0, 12)


# ----------------------------------------------------------- abelianisation

def test_star_abelianization_values(radical_c4, opp_s3, triv_s3):
    F, pi = hb.star_abelianization(H_of(radical_c4))
    assert F.dim == 2 and F.base.is_trivial()
    F, _ = hb.star_abelianization(H_of(opp_s3))
    assert F.dim == 2
    Ht = H_of(triv_s3)
    F, pi = hb.star_abelianization(Ht)
    assert F.dim == 6        # trivial brace: star closure is just k1
    assert hb.hopf_kernel(pi).carrier == (0,)


def test_full_abelianization_values(radical_c4, opp_s3, triv_s3):
    ab, _ = hb.full_abelianization(H_of(triv_s3))
    assert ab.dim == 2
    ab, _ = hb.full_abelianization(H_of(radical_c4))
    assert ab.dim == 2
    triv_ab = hb.trivial_brace(hb.cyclic_group(4))
    ab, _ = hb.full_abelianization(H_of(triv_ab))
    assert ab.dim == 4
    ab, _ = hb.full_abelianization(H_of(opp_s3))
    assert ab.dim == 2


def test_star_closure_is_relative_commutator_of_whole(catalog):
    for desc, brace in catalog:
        H = H_of(brace)
        star_sub = hb.star_closure_subbrace(H)
        assert star_sub.is_normal()
        whole = hb.whole_subbrace(H)
        assert hb.relative_commutator(whole, H).carrier == star_sub.carrier


def test_abelianization_dims_against_oracle(catalog):
    for desc, brace in catalog:
        if desc.order > 24:
            continue
        dot = brace.dot.table.tolist()
        circ = brace.circ.table.tolist()
        H = H_of(brace)
        F, _ = hb.star_abelianization(H)
        assert F.dim == brace.order // len(oracle.star_closure(dot, circ))
        ab, _ = hb.full_abelianization(H)
        assert ab.dim == brace.order // len(oracle.ab_closure(dot, circ))


# --------------------------------------------------------------- nilpotency

def test_nilpotency_report_values(radical_c4, opp_s3):
    rep = hb.nilpotency_report(H_of(radical_c4))
    assert (rep.left_class, rep.right_class, rep.gamma_class,
            rep.adjunction_class) == (3, 3, 3, 2)
    rep = hb.nilpotency_report(H_of(opp_s3), max_n=10)
    assert not rep.is_nilpotent_any()
    triv_ab = hb.trivial_brace(hb.cyclic_group(4))
    rep = hb.nilpotency_report(H_of(triv_ab))
    assert (rep.left_class, rep.right_class, rep.gamma_class,
            rep.adjunction_class) == (2, 2, 2, 1)


def test_nilpotency_trivial_nonabelian(triv_s3):
    # trivial braces are right nilpotent (class 2) but the gamma series
    # sees the group's lower central series
    rep = hb.nilpotency_report(H_of(triv_s3))
    assert rep.left_class == 2 and rep.right_class == 2
    assert rep.gamma_class is None
    assert rep.adjunction_class == 1


# ------------------------------------------------------------- coincidence

def test_coincidence_separators_in_radical_c4(radical_c4):
    rep = hb.coincidence_report(H_of(radical_c4))
    assert rep.star_trivial_space.dim == 3
    assert rep.coincidence_space.dim == 3
    assert not rep.equivalent
    assert rep.separator_star_only is not None
    assert rep.separator_coincidence_only is not None
    # the two hand-picked separators lie where they should
    e1me3 = SparseVector({1: 1, 3: -1})
    e1pe3 = SparseVector({1: 1, 3: 1})
    assert rep.star_trivial_space.contains(e1me3)
    assert not rep.coincidence_space.contains(e1me3)
    assert rep.coincidence_space.contains(e1pe3)
    assert not rep.star_trivial_space.contains(e1pe3)


def test_coincidence_trivial_brace_equivalent(triv_s3):
    rep = hb.coincidence_report(H_of(triv_s3))
    assert rep.equivalent
    assert rep.star_trivial_space == rep.coincidence_space


def test_star_trivial_space_matches_star_formulation(catalog):
    """The action-based system defining the star-trivial space agrees
    with the direct star-based system (the two conditions are proved
    equivalent)."""
    for desc, brace in catalog:
        if desc.order > 12:
            continue
        rep = hb.coincidence_report(H_of(brace))
        n = brace.order
        e = brace.identity
        rows = []
        for h in range(n):
            fibers = {}
            for g in range(n):
                fibers.setdefault(brace.star_set(g, h), []).append(g)
            for x, fib in fibers.items():
                if x != e:
                    rows.append(SparseVector({g: 1 for g in fib}))
        from hopfbrace.linalg import common_nullspace
        assert common_nullspace(rows, n) == rep.star_trivial_space
