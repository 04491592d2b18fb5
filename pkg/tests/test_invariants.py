import json

import pytest

from quandles.catalog import (build, build_named, cyclic, dihedral,
                              groups_of_order, named_automorphism,
                              sl23_element_index)
from quandles.groups import (Subgroup, automorphism_group, fixed_subgroup,
                             groups_isomorphic, identity_map,
                             inner_automorphism, is_normal)
from quandles.invariants import (check_p1, check_p2,
                                 compute_P, compute_P2, descriptor_display,
                                 group_descriptor, inn_structure, profile,
                                 profile_to_json, restrict_to_P,
                                 transported_class, twisted_normalizer,
                                 _direct_with_cyclic)


def test_compute_P_identity_map():
    for name in ("C4", "D4", "Q8"):
        g = build_named(name)
        assert compute_P(g, identity_map(g)).members == (0,)


def test_compute_P_dihedral_formula_instance():
    d4 = build(dihedral(4))
    p = compute_P(d4, named_automorphism(d4, "phi:3,1"))
    assert p.members == (0, 1, 2, 3)  # <sigma>, d = gcd(4, 1-3, 1) = 1


def test_compute_P_full_group_for_q8_rotation():
    q8 = build_named("Q8")
    assert compute_P(q8, named_automorphism(q8, "psi_4")).order == 8


def test_compute_P2():
    d4 = build(dihedral(4))
    assert compute_P2(d4, identity_map(d4)).members == (0,)
    # n=4, a=3, b=1: d=1, g2 = gcd(4, -2) = 2, so P^2 = <sigma^2>
    p2 = compute_P2(d4, named_automorphism(d4, "phi:3,1"))
    assert p2.members == (0, 2)


def test_compute_P2_abelian_is_double_difference_image():
    # over an abelian group the orbit subgroup is the image of x -> x - psi(x),
    # and the second orbit subgroup is the image of its square
    for name, aut in (("C9", "mul:4"), ("C4xC2", "psi_sigma"), ("C15", "mul:2")):
        g = build_named(name)
        psi = named_automorphism(g, aut)
        rho = [g.table[x][g.inv(psi.images[x])] for x in range(g.order)]
        p2 = compute_P2(g, psi)
        assert set(rho[rho[x]] for x in range(g.order)) == p2.member_set()


def test_psi_preserves_P():
    for order in range(1, 13):
        for spec in groups_of_order(order):
            g = build(spec)
            for psi in automorphism_group(g):
                _, _, embed = restrict_to_P(g, psi)
                assert {psi.images[m] for m in embed} == set(embed)


def test_P_normal_and_P2_normal_in_P():
    for order in range(1, 13):
        for spec in groups_of_order(order):
            g = build(spec)
            for psi in automorphism_group(g):
                p = compute_P(g, psi)
                assert is_normal(g, p)
                grp, restricted, _ = restrict_to_P(g, psi)
                assert is_normal(grp, compute_P(grp, restricted))


def test_twisted_normalizer_basics():
    g = build_named("D4")
    tn = twisted_normalizer(g, identity_map(g), Subgroup(g, (0,)))
    assert tn.order == 8
    psi = named_automorphism(g, "phi:3,1")
    p2 = compute_P2(g, psi)
    tn = twisted_normalizer(g, psi, p2)
    p = compute_P(g, psi)
    fix = fixed_subgroup(psi)
    pf = {g.table[a][b] for a in p.members for b in fix.members}
    assert pf <= tn.member_set()
    # P is normal in the twisted normalizer
    for a in tn.members:
        for x in p.members:
            assert g.conj(a, x) in p.member_set()


def test_twisted_normalizer_equals_PF_under_preconditions():
    for name, aut in (("D4", "phi:3,1"), ("D6", "phi:5,1"), ("Q8", "psi_3"),
                      ("Dic3", "beta_tau"), ("C4xC2", "psi_sigma")):
        g = build_named(name)
        psi = named_automorphism(g, aut)
        assert check_p1(g, psi) and check_p2(g, psi)
        p = compute_P(g, psi)
        fix = fixed_subgroup(psi)
        pf = {g.table[a][b] for a in p.members for b in fix.members}
        tn = twisted_normalizer(g, psi, compute_P2(g, psi))
        assert tn.member_set() == pf


def test_precondition_flags_table_cases():
    q8 = build_named("Q8")
    psi4 = named_automorphism(q8, "psi_4")
    assert check_p1(q8, psi4) and not check_p2(q8, psi4)
    s33 = build_named("S3xS3")
    swap = named_automorphism(s33, "swap")
    assert not check_p1(s33, swap) and check_p2(s33, swap)
    a4 = build_named("A4")
    conj12 = named_automorphism(a4, "conj_perm:(1 2)")
    assert check_p1(a4, conj12) and not check_p2(a4, conj12)
    g = build_named("C6xC2")
    assert check_p1(g, identity_map(g)) and check_p2(g, identity_map(g))


def test_inn_structure_products():
    g = build_named("C6xC2")
    r = inn_structure(g, named_automorphism(g, "alpha_sigma"), verify_iso=True)
    assert r.inn_size == 72 and r.p_size == 12 and r.psi_order == 6
    assert r.product_holds and r.semidirect_witness is not None
    r = inn_structure(g, identity_map(g))
    assert r.inn_size == 1 and r.psi_order == 1 and r.p_size == 1


def test_inn_structure_dichotomy_outer_branch():
    # conjugation by an odd permutation restricts to an outer map of the
    # centerless orbit subgroup, so the inner group stays a twisted product
    a4 = build_named("A4")
    psi = named_automorphism(a4, "conj_perm:(1 2)")
    r = inn_structure(a4, psi, verify_iso=True)
    assert r.centerless_p and not r.psi_p_inner
    assert r.semidirect_witness is not None and r.direct_witness is None


def test_inn_structure_dichotomy_inner_branch():
    s4 = build_named("S4")
    three_cycle = next(i for i in range(24) if s4.element_order(i) == 3)
    r = inn_structure(s4, inner_automorphism(s4, three_cycle), verify_iso=True)
    assert r.centerless_p and r.psi_p_inner
    assert r.direct_witness is not None


def test_sl23_escapes_the_dichotomy():
    sl = build_named("SL23")
    psi = inner_automorphism(sl, sl23_element_index(((0, -1), (1, 0))))
    assert psi.map_order() == 2
    r = inn_structure(sl, psi, verify_iso=True)
    grp, _, _ = restrict_to_P(sl, psi)
    assert groups_isomorphic(grp, build_named("Q8")) is not None
    assert not r.centerless_p and r.psi_p_inner
    assert r.semidirect_witness is not None
    inn_group, _ = r.perm_group.as_group()
    assert groups_isomorphic(inn_group, _direct_with_cyclic(grp, 2)) is None


def test_inn_size_law_over_catalog():
    from quandles.groups import automorphism_conjugacy_classes
    for order in range(1, 13):
        for spec in groups_of_order(order):
            g = build(spec)
            for rep, _ in automorphism_conjugacy_classes(g):
                r = inn_structure(g, rep, verify_iso=False)
                assert r.inn_size == r.p_size * r.psi_order


def test_group_descriptor_catalog_resolution():
    d4 = build_named("D4")
    desc = group_descriptor(d4)
    assert desc[3] == "D4" and descriptor_display(desc) == "D4"
    trivial = build(cyclic(1))
    assert descriptor_display(group_descriptor(trivial)) == "1"
    s33 = build_named("S3xS3")
    desc = group_descriptor(s33)
    assert desc[3] is None and desc[0] == 36


def test_transported_class_well_defined_across_presentations():
    # the restriction class must look the same no matter which copy of the
    # abstract group carries it
    d6 = build(dihedral(6))
    c6c2 = build_named("C6xC2")
    dic3 = build_named("Dic3")
    cls_a = profile(d6, named_automorphism(d6, "phi:5,1")).psi_restricted_class
    cls_b = profile(c6c2, named_automorphism(c6c2, "alpha_tau")).psi_restricted_class
    cls_c = profile(dic3, named_automorphism(dic3, "beta_tau*beta_sigma")).psi_restricted_class
    assert cls_a == cls_b == cls_c
    c6 = build(cyclic(6))
    assert cls_a == transported_class(c6, named_automorphism(c6, "mul:5"))


def test_profile_fields():
    c8 = build_named("C2xC2xC2")
    m3 = named_automorphism(c8, "mat:0,0,1;1,0,0;0,1,0")
    prof = profile(c8, m3)
    assert (prof.group_order, prof.psi_order, prof.fix_size) == (8, 3, 2)
    assert prof.p_iso_type[3] == "C2xC2"
    c2c2 = build_named("C2xC2")
    expected = transported_class(c2c2, named_automorphism(c2c2, "mat:0,1;1,1"))
    assert prof.psi_restricted_class == expected

    d6 = build_named("D6")
    prof = profile(d6, named_automorphism(d6, "phi:5,1"))
    assert (prof.psi_order, prof.fix_size, prof.p_iso_type[3]) == (2, 2, "C6")

    g = build_named("C4")
    prof = profile(g, identity_map(g))
    assert (prof.group_order, prof.psi_order, prof.fix_size) == (4, 1, 4)
    assert prof.p_iso_type[3] == "C1" and prof.p1 and prof.p2


def test_profile_serialization():
    g = build_named("Q8")
    prof = profile(g, named_automorphism(g, "psi_4"))
    data = json.loads(profile_to_json(prof))
    assert data["version"] == "profile.v1"
    for field in ("group_order", "psi_order", "fix_size", "p_iso_type",
                  "p2_iso_type", "psi_restricted_class", "p_fix_size",
                  "tn_size", "p1", "p2", "inn_size"):
        assert field in data
    assert data["p1"] is True and data["p2"] is False
    assert data["p_iso_type"]["name"] == "Q8"


def test_simple_groups_have_full_orbit():
    for p in (2, 3, 5, 7, 11, 13):
        g = build(cyclic(p))
        for psi in automorphism_group(g):
            if psi.images == tuple(range(p)):
                continue
            assert compute_P(g, psi).order == p
    a5 = build_named("A5")
    swap01 = inner_automorphism(a5, next(
        i for i in range(60) if a5.element_order(i) == 2))
    assert compute_P(a5, swap01).order == 60


def test_profile_equal_within_isomorphism_classes():
    from quandles.classify import classify_order
    for order in (8, 12):
        report = classify_order(order)
        for cls in report.classes:
            profs = {report.profiles[i] for i in cls}
            assert len(profs) == 1
