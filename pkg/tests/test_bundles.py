from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fivebundles.bundles import (
    BundleTriple,
    ConditionBMode,
    SplitReason,
    Verdict,
    check_condition_A,
    check_condition_B,
    classification_applicability,
    classify_rank5_spinnable,
    covering_kappa,
    enumerate_quaternionic,
    gamma_image_check,
    h1_type,
    kappa_structure_dependence,
    parallelizability_verdict,
    pi4_group,
    rho2_matrix,
    sq2_image_rank,
    verdict_rule,
)
from fivebundles.cohomology import Ring, betti_numbers, cohomology_basis, coefficient_map, zero_cochain
from fivebundles.complex_store import circle, fixture, product_complex
from fivebundles.errors import NotSpin, OrientabilityRequired, RingMismatch, ValidationError
from fivebundles.manifold import kervaire_semichar
from fivebundles.steenrod import cup


@pytest.fixture(scope="module")
def cp2_classes():
    K = fixture("cp2")
    X = cohomology_basis(K, Ring.Z, 2).generators[0]
    x = coefficient_map(X, Ring.Z2)
    return K, X, x


def test_cp2_tangent_triple_is_in_image(cp2_classes):
    K, X, x = cp2_classes
    X2 = cup(X, X)
    t = BundleTriple(x, cup(x, x), 3 * X2)
    assert gamma_image_check(K, t)


def test_triple_without_w2_is_rejected(cp2_classes):
    K, X, x = cp2_classes
    t = BundleTriple(zero_cochain(K, 2, Ring.Z2), zero_cochain(K, 4, Ring.Z2), cup(X, X))
    assert not gamma_image_check(K, t)


def test_image_condition_on_multiples(cp2_classes):
    # with a = 0 the condition reads rho4(n x^2) = i*(b): n even with b = (n/2) x^2 mod 2
    K, X, x = cp2_classes
    X2, x2 = cup(X, X), cup(x, x)
    zero_a = zero_cochain(K, 2, Ring.Z2)
    for n in range(-4, 5):
        for b in (zero_cochain(K, 4, Ring.Z2), x2):
            ok = gamma_image_check(K, BundleTriple(zero_a, b, n * X2))
            b_bit = 0 if b.is_zero() else 1
            assert ok == (n % 4 == 2 * b_bit)


def test_triple_validation(cp2_classes):
    K, X, x = cp2_classes
    with pytest.raises(RingMismatch):
        BundleTriple(X, cup(x, x), cup(X, X))
    with pytest.raises(RingMismatch):
        BundleTriple(x, cup(x, x), cup(x, x))


@pytest.mark.parametrize("torsion,expected", [([], True), ([2, 2], True), ([4], False), ([12], False), ([2, 6], True)])
def test_condition_A_on_lists(torsion, expected):
    assert check_condition_A(torsion) is expected


@given(st.lists(st.integers(2, 60), max_size=4))
def test_condition_A_matches_divisibility(torsion):
    assert check_condition_A(torsion) == all(d % 4 for d in torsion)


def test_condition_B_readings_on_rp5():
    K = fixture("rp5")
    assert check_condition_B(K, ConditionBMode.MOD2_SOURCE)
    assert not check_condition_B(K, ConditionBMode.INTEGRAL_SOURCE)
    assert sq2_image_rank(K, "mod2_source") == (1, 1)
    assert sq2_image_rank(K, "integral_source") == (0, 1)
    report = classification_applicability(K)
    assert report.condition_A
    assert report.condition_B == {"integral_source": False, "mod2_source": True}


@pytest.mark.parametrize("name", ["s5", "s1xs4", "s2xs3"])
def test_condition_B_fails_on_spin_fixtures(name):
    # Sq^2 into degree 5 is multiplication by v2 = 0 on spin manifolds
    K = fixture(name)
    for mode in ConditionBMode:
        assert not check_condition_B(K, mode)


def test_condition_B_vacuous_below_dimension_5():
    assert sq2_image_rank(fixture("cp2")) == (0, 0)
    assert check_condition_B(fixture("cp2"))


@pytest.mark.parametrize("name,group", [("s5", "Z2"), ("s1xs4", "Z + Z2"), ("s2xs3", "Z2")])
def test_pi4_on_spin_fixtures(name, group):
    p = pi4_group(fixture(name))
    assert p.kernel_order == 2 and p.splits and p.split_reason is SplitReason.SPIN
    assert p.description == group


def test_pi4_on_rp5():
    p = pi4_group(fixture("rp5"))
    assert p.kernel_order == 2
    assert str(p.base) == "Z2"
    assert not p.splits and p.split_reason is SplitReason.UNKNOWN
    assert p.to_dict()["group"] == "extension of Z2 by Z2"


def test_pi4_needs_oriented_5_manifold():
    with pytest.raises(ValidationError):
        pi4_group(fixture("cp2"))
    with pytest.raises(OrientabilityRequired):
        pi4_group(product_complex(fixture("rp4"), circle(3)))


def test_enumeration():
    e = enumerate_quaternionic(fixture("s5"))
    assert e.count == 2 and {c.kappa for c in e.classes} == {0, 1}
    e = enumerate_quaternionic(fixture("s1xs4"))
    assert e.count is None and e.descriptor == "(Z) x Z2"
    with pytest.raises(NotSpin):
        enumerate_quaternionic(fixture("rp5"))


def test_classify_s5():
    r = classify_rank5_spinnable(fixture("s5"))
    assert r.W1_count == 2 and r.W2_count == 0 and r.W2 == "empty"
    assert r.kernel_index == 1


def test_classify_s1xs4():
    r = classify_rank5_spinnable(fixture("s1xs4"))
    assert r.h4_orders == (0,)
    assert r.rho2 == ((1,),)
    assert r.W1 == "{x in Z : g1 even} x Z2"
    assert r.W2 == "{x in Z : not (g1 even)}"
    assert r.kernel_index == 2
    assert any("ker rho2" in n for n in r.notes)


def test_rho2_matrix_s2xs3_is_empty():
    assert rho2_matrix(fixture("s2xs3")).shape == (0, 0)


def test_kappa_structure_dependence():
    K = fixture("s1xs4")
    alpha = cohomology_basis(K, Ring.Z2, 1).generators[0]
    w4 = cohomology_basis(K, Ring.Z2, 4).generators[0]
    assert not kappa_structure_dependence(K, alpha, w4)
    assert kappa_structure_dependence(K, alpha, zero_cochain(K, 4, Ring.Z2))
    with pytest.raises(RingMismatch):
        kappa_structure_dependence(K, w4, alpha)


@pytest.mark.parametrize("kappa,deg,expected", [(1, 2, 0), (1, 1, 1), (0, 3, 0), (1, 0, 0)])
def test_covering_kappa(kappa, deg, expected):
    assert covering_kappa(kappa, deg) == expected


@pytest.mark.parametrize(
    "name,flag,verdict,k",
    [
        ("s5", True, Verdict.TANGENT_ISO_PULLBACK_TS5, 1),
        ("s5", None, Verdict.TANGENT_ISO_PULLBACK_TS5, 1),
        ("s1xs4", True, Verdict.PARALLELIZABLE, 0),
        ("s1xs4", None, Verdict.NOT_APPLICABLE, 0),
        ("s2xs3", None, Verdict.PARALLELIZABLE, 0),
    ],
)
def test_verdicts(name, flag, verdict, k):
    r = parallelizability_verdict(fixture(name), flag)
    assert r.verdict is verdict and r.kervaire == k


def test_verdict_rule_table():
    assert verdict_rule(True, None, None, "z2").verdict is Verdict.STABLY_PARALLELIZABLE_UNKNOWN_FRAME
    assert verdict_rule(True, False, 0, "other").verdict is Verdict.NOT_APPLICABLE
    assert verdict_rule(True, True, 1, "other").verdict is Verdict.TANGENT_ISO_PULLBACK_TS5
    assert verdict_rule(True, None, 0, "z2").stably_parallelizable == "derived"
    with pytest.raises(NotSpin):
        verdict_rule(False, True, 0, "trivial")
    with pytest.raises(NotSpin):
        parallelizability_verdict(fixture("rp5"))


def test_h1_types():
    assert h1_type(fixture("s5")) == "trivial"
    assert h1_type(fixture("s1xs4")) == "other"
    assert h1_type(fixture("rp5")) == "z2"


def test_kervaire_equals_beta2_when_h1_is_z2():
    # mod-2 duality gives beta_4 = beta_1 = 1, so k = 1 + beta_2 + 1 = beta_2 mod 2
    K = fixture("rp5")
    betti = betti_numbers(K, Ring.Z2)
    assert betti[1] == betti[4] == 1
    assert kervaire_semichar(K) == betti[2] % 2
