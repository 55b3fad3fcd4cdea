"""Fundamental classes, duality pairing, Wu and Stiefel-Whitney classes.

Stiefel-Whitney classes come from Wu's formula ``w = Sq(v)``.  On a closed
n-manifold ``v_k = 0`` for ``2k > n``, so in dimensions 4 and 5 only v1 and
v2 are solved for, and every square needed is Sq^0, Sq^1, Sq^2 in degree
2 or 3, or Sq^k in degree k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohomology import (
    CohomologyClass,
    Cochain,
    Ring,
    as_ring,
    betti_numbers,
    boundary_values,
    cohomology_basis,
    is_zero_class,
    zero_cochain,
)
from .complex_store import OrientedComplex, SimplicialComplex, orient, validate
from .errors import (
    ComplexError,
    ComputationError,
    NonOrientable,
    OrientabilityRequired,
    RingMismatch,
    SingularPairing,
    ValidationError,
)
from .exact_linalg import IntMatrix, NoSolution, rank_mod, solve_mod
from .steenrod import cup, sq


@dataclass(frozen=True, eq=False)
class FundamentalClass:
    """Top-dimensional cycle: facet signs over Z (or Z4), all ones over Z2."""

    complex: SimplicialComplex
    ring: Ring
    cycle: np.ndarray


def _base(K: SimplicialComplex | OrientedComplex) -> SimplicialComplex:
    return K.base if isinstance(K, OrientedComplex) else K


def fundamental_class(K: SimplicialComplex | OrientedComplex, ring=Ring.Z) -> FundamentalClass:
    """Return the fundamental cycle of a closed pseudomanifold.

    Raises:
        ComplexError: if K is not a closed pseudomanifold.
        NonOrientable: for integral (or mod-4) coefficients on nonorientable input.
    """
    ring = as_ring(ring)
    base = _base(K)

    def build():
        if ring is Ring.Z2:
            if not validate(base).is_closed_pseudomanifold:
                raise ComplexError("not a closed pseudomanifold")
            cycle = np.ones(base.count(base.dim), dtype=np.int64)
        elif ring in (Ring.Z, Ring.Z4):
            oc = K if isinstance(K, OrientedComplex) else orient(base)
            cycle = np.asarray(oc.facet_signs, dtype=np.int64)
            if ring is Ring.Z4:
                cycle = cycle % 4
        else:
            raise RingMismatch(f"no fundamental class over {ring}")
        n = base.dim
        if n > 0 and np.any(boundary_values(base, n, cycle, ring.modulus)):
            raise ComputationError("fundamental cycle has nonzero boundary")
        cycle.setflags(write=False)
        return FundamentalClass(base, ring, cycle)

    return base.cached(("fundamental", ring), build)


def evaluate(c: Cochain, fc: FundamentalClass | None = None) -> int:
    """Kronecker pairing of a top-degree cochain with the fundamental class."""
    K = c.complex
    if c.degree != K.dim:
        raise RingMismatch(f"evaluation needs degree {K.dim}, got {c.degree}")
    fc = fc or fundamental_class(K, c.ring)
    if fc.ring is not c.ring:
        raise RingMismatch("fundamental class ring differs from the cochain ring")
    total = int(np.dot(c.values, fc.cycle))
    return total % c.ring.modulus if c.ring.modulus else total


def pairing(x: Cochain, y: Cochain) -> int:
    """Evaluate ``<x cup y, [M]>`` in the coefficient ring of x and y."""
    if x.degree + y.degree != x.complex.dim:
        raise RingMismatch(
            f"degrees {x.degree} + {y.degree} do not add up to dimension {x.complex.dim}"
        )
    return evaluate(cup(x, y))


def duality_matrix(K: SimplicialComplex, k: int) -> np.ndarray:
    """Mod-2 pairing matrix between the bases of H^k and H^{n-k}."""
    left = cohomology_basis(K, Ring.Z2, k).generators
    right = cohomology_basis(K, Ring.Z2, K.dim - k).generators
    return np.array([[pairing(a, b) for b in right] for a in left], dtype=np.int64).reshape(
        len(left), len(right)
    )


def _solve_wu(K: SimplicialComplex, k: int) -> CohomologyClass:
    """Solve ``<v_k cup x, [M]> = <Sq^k x, [M]>`` over a basis x of H^{n-k}."""
    n = K.dim
    ys = cohomology_basis(K, Ring.Z2, k).generators
    xs = cohomology_basis(K, Ring.Z2, n - k).generators
    if len(xs) != len(ys):
        raise SingularPairing(f"dim H^{k} != dim H^{n - k} mod 2; not a manifold")
    if not ys:
        return zero_cochain(K, k, Ring.Z2)
    # rows: test classes x_j, columns: candidate basis classes y_i
    P = IntMatrix.from_dense([[pairing(y, x) for y in ys] for x in xs])
    if rank_mod(P, 2) < len(ys):
        raise SingularPairing(f"mod-2 pairing H^{k} x H^{n - k} is degenerate")
    rhs = [evaluate(sq(k, x)) for x in xs]
    try:
        coeffs = solve_mod(P, rhs, 2)
    except NoSolution as exc:  # pragma: no cover - nondegenerate square system
        raise SingularPairing("Wu system has no solution") from exc
    total = zero_cochain(K, k, Ring.Z2)
    for c, y in zip(coeffs, ys):
        if c % 2:
            total = total + y
    return total.as_class()


@dataclass(frozen=True, eq=False)
class WuData:
    """Wu classes v1, v2 and the Stiefel-Whitney classes w_1..w_n."""

    v1: CohomologyClass
    v2: CohomologyClass
    w: tuple[CohomologyClass, ...]


def wu_classes(K: SimplicialComplex) -> WuData:
    """Wu classes and Stiefel-Whitney classes of a closed 4- or 5-pseudomanifold.

    Raises:
        ValidationError: for other dimensions or non-closed input.
        SingularPairing: if the mod-2 duality pairing is degenerate.
    """

    def build():
        if K.dim not in (4, 5):
            raise ValidationError(f"Wu classes are provided in dimensions 4 and 5, got {K.dim}")
        if not validate(K).is_closed_pseudomanifold:
            raise ComplexError("not a closed pseudomanifold")
        v1 = _solve_wu(K, 1)
        v2 = _solve_wu(K, 2)
        v = {0: None, 1: v1, 2: v2}
        w = []
        for k in range(1, K.dim + 1):
            total = zero_cochain(K, k, Ring.Z2)
            for i in (1, 2):
                if k - i >= 0 and k - i <= i:
                    total = total + sq(k - i, v[i])
            w.append(total.as_class())
        return WuData(v1, v2, tuple(w))

    return K.cached(("wu",), build)


def stiefel_whitney(K: SimplicialComplex) -> tuple[CohomologyClass, ...]:
    """Stiefel-Whitney classes ``(w_1, ..., w_n)`` via Wu's formula."""
    return wu_classes(K).w


def is_orientable(K: SimplicialComplex) -> bool:
    """True iff coherent facet signs exist."""
    try:
        orient(K)
    except NonOrientable:
        return False
    return True


def is_spin(K: SimplicialComplex) -> bool:
    """True iff w1 and w2 vanish in cohomology."""
    w = stiefel_whitney(K)
    return is_zero_class(w[0]) and is_zero_class(w[1])


def kervaire_semichar(K: SimplicialComplex) -> int:
    """Kervaire semi-characteristic, the sum of even-degree mod-2 Betti numbers mod 2.

    The rational sum is computed too; the two must agree on an oriented
    closed manifold.

    Raises:
        OrientabilityRequired: on nonorientable input.
        ComputationError: if the mod-2 and rational sums disagree.
    """
    if K.dim != 5:
        raise ValidationError(f"the semi-characteristic is used in dimension 5, got {K.dim}")
    try:
        orient(K)
    except NonOrientable as exc:
        raise OrientabilityRequired(str(exc), exc.witness) from exc
    mod2 = sum(betti_numbers(K, Ring.Z2)[0::2]) % 2
    real = sum(betti_numbers(K, Ring.Q)[0::2]) % 2
    if mod2 != real:
        raise ComputationError(
            f"mod-2 ({mod2}) and rational ({real}) semi-characteristics disagree"
        )
    return mod2
