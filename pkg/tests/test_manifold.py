from __future__ import annotations

from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivebundles.cohomology import Ring, cohomology_basis, is_same_class, is_zero_class, random_cochain
from fivebundles.complex_store import SimplicialComplex, circle, fixture, product_complex
from fivebundles.errors import (
    ComplexError,
    NonOrientable,
    OrientabilityRequired,
    RingMismatch,
    SingularPairing,
    ValidationError,
)
from fivebundles.exact_linalg import IntMatrix, rank_mod
from fivebundles.manifold import (
    duality_matrix,
    evaluate,
    fundamental_class,
    is_orientable,
    is_spin,
    kervaire_semichar,
    pairing,
    stiefel_whitney,
    wu_classes,
)
from fivebundles.steenrod import cup
from oracles import RP2_FACETS


def _powers(K, top):
    a = cohomology_basis(K, Ring.Z2, 1).generators[0]
    out = {1: a}
    for k in range(2, top + 1):
        out[k] = cup(out[k - 1], a)
    return out


@pytest.mark.parametrize("n", [4, 5])
def test_projective_sw_classes_follow_binomials(n):
    # w(RP^n) = (1 + a)^{n+1}
    K = fixture(f"rp{n}")
    a = _powers(K, n)
    w = stiefel_whitney(K)
    assert len(w) == n
    for k in range(1, n + 1):
        if comb(n + 1, k) % 2:
            assert is_same_class(w[k - 1], a[k]), k
        else:
            assert is_zero_class(w[k - 1]), k


def test_cp2_sw_classes():
    # w(CP^2) = (1 + x)^3
    K = fixture("cp2")
    x = cohomology_basis(K, Ring.Z2, 2).generators[0]
    w = stiefel_whitney(K)
    assert is_zero_class(w[0]) and is_zero_class(w[2])
    assert is_same_class(w[1], x)
    assert is_same_class(w[3], cup(x, x))
    assert not is_spin(K)


@pytest.mark.parametrize("name", ["s5", "s1xs4", "s2xs3"])
def test_spin_fixtures_have_vanishing_sw_classes(name):
    K = fixture(name)
    assert all(is_zero_class(c) for c in stiefel_whitney(K))
    assert is_spin(K) and is_orientable(K)
    data = wu_classes(K)
    assert is_zero_class(data.v1) and is_zero_class(data.v2)


def test_rp5_is_orientable_not_spin():
    K = fixture("rp5")
    assert is_orientable(K) and not is_spin(K)
    assert not is_orientable(fixture("rp4"))


@pytest.mark.parametrize("name,expected", [("s5", 1), ("s1xs4", 0), ("s2xs3", 0), ("rp5", 1)])
def test_kervaire_semichar(name, expected):
    assert kervaire_semichar(fixture(name)) == expected


def _relabel(K, perm):
    return SimplicialComplex.from_facets([[int(perm[v]) for v in f] for f in K.facets])


@settings(max_examples=10)
@given(st.permutations(list(range(7))))
def test_kervaire_invariant_under_relabelling(perm):
    assert kervaire_semichar(_relabel(fixture("s5"), perm)) == 1


@settings(max_examples=5)
@given(st.integers(0, 2**31))
def test_sw_invariant_under_relabelling_cp2(s):
    perm = np.random.default_rng(s).permutation(9)
    K = _relabel(fixture("cp2"), perm)
    w = stiefel_whitney(K)
    assert not is_zero_class(w[1]) and not is_zero_class(w[3])


def test_kervaire_needs_orientable_five_manifold():
    with pytest.raises(ValidationError):
        kervaire_semichar(fixture("cp2"))
    with pytest.raises(OrientabilityRequired):
        kervaire_semichar(SimplicialComplex.from_facets(_nonorientable_5()))


def _nonorientable_5():
    return product_complex(fixture("rp4"), circle(3)).facets


@pytest.mark.parametrize("name", ["cp2", "s2xs3", "rp4", "rp5"])
def test_duality_matrix_is_nonsingular(name):
    K = fixture(name)
    for k in range(1, K.dim):
        D = duality_matrix(K, k)
        assert D.shape[0] == D.shape[1]
        if D.size:
            assert rank_mod(IntMatrix.from_dense(D.tolist()), 2) == D.shape[0]


def test_fundamental_class_and_evaluation():
    K = fixture("cp2")
    for ring in (Ring.Z, Ring.Z2, Ring.Z4):
        fc = fundamental_class(K, ring)
        assert fc.cycle.shape == (K.count(4),)
    X = cohomology_basis(K, Ring.Z, 2).generators[0]
    assert abs(pairing(X, X)) == 1
    with pytest.raises(RingMismatch):
        evaluate(X)
    with pytest.raises(RingMismatch):
        pairing(X, cup(X, X))
    with pytest.raises(NonOrientable):
        fundamental_class(fixture("rp4"), Ring.Z)
    with pytest.raises(RingMismatch):
        fundamental_class(K, Ring.Q)


def test_evaluation_vanishes_on_coboundaries(rng):
    K = fixture("s5")
    for ring in (Ring.Z, Ring.Z2, Ring.Z4):
        c = random_cochain(K, 4, ring, rng).coboundary()
        assert evaluate(c) == 0


def test_fundamental_class_rejects_boundary():
    K = SimplicialComplex.from_facets([(0, 1, 2), (0, 2, 3)])
    with pytest.raises(ComplexError):
        fundamental_class(K, Ring.Z2)


def test_wu_rejects_wrong_dimension_and_non_manifold():
    with pytest.raises(ValidationError):
        wu_classes(fixture("s5").__class__.from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]))
    # double suspension of RP^2: a closed pseudomanifold with H^1 = 0 but H^3 = Z2
    cones = []
    for f in _suspend(_suspend(RP2_FACETS, 6), 8):
        cones.append(f)
    with pytest.raises(SingularPairing):
        wu_classes(SimplicialComplex.from_facets(cones))


def _suspend(facets, apex):
    return [tuple(f) + (apex,) for f in facets] + [tuple(f) + (apex + 1,) for f in facets]
