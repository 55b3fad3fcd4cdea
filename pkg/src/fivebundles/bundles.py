"""Decision procedures for rank-5 and quaternionic line bundles over 5-complexes.

Bundles enter only through characteristic data: the triple (w2, w4, p1),
the spin class p1/2 as coordinates in the integral cohomology basis, and
the framing bit kappa.  Nothing here builds transition functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .cohomology import (
    CohomologyClass,
    Cochain,
    GradedAbelianGroup,
    Ring,
    coefficient_map,
    cohomology_basis,
    cohomology_group,
    coordinates,
    homology,
    is_same_class,
    is_zero_class,
)
from .complex_store import SimplicialComplex, orient
from .errors import (
    ComputationError,
    NonOrientable,
    NotSpin,
    OrientabilityRequired,
    RingMismatch,
    ValidationError,
)
from .exact_linalg import IntMatrix, rank_mod
from .manifold import is_spin, kervaire_semichar, pairing
from .steenrod import pontryagin_square, sq2

RULES = {
    "condition_A": "H^4(X;Z) has no element of order 4",
    "condition_B_integral": "Sq^2 of mod-2 reductions of H^3(X;Z) spans H^5(X;Z2)",
    "condition_B_mod2": "Sq^2 of H^3(X;Z2) spans H^5(X;Z2)",
    "gamma_image": "(a, b, c) is realized iff rho4(c) = P(a) + i*(b) in H^4(X;Z4)",
    "injectivity": "gamma is injective when conditions A and B both hold",
    "pi4_sequence": "0 -> H^5(M;Z2)/Sq^2 H^3(M;Z) -> pi^4(M) -> H^4(M;Z) -> 0",
    "pi4_split_spin": "the sequence splits on spin manifolds",
    "pi4_split_trivial": "the sequence splits when its kernel is trivial",
    "pi4_split_image": "the sequence splits when the Sq^2 images of H^3(M;Z) and H^3(M;Z2) in H^5(M;Z2) coincide",
    "quaternionic": "quaternionic line bundles over a spin 5-manifold <-> (p1/2, kappa) in H^4(M;Z) x Z2",
    "rank5_W1": "spinnable rank-5 bundles with w4 = 0 <-> (p1/2 in ker rho2, kappa)",
    "rank5_W2": "spinnable rank-5 bundles with w4 != 0 <-> p1/2 outside ker rho2",
    "kappa_structure": "kappa does not depend on the Sp(1)-structure when alpha cup w4(E) = 0",
    "covering": "kappa of a pullback is deg2 times kappa",
    "verdict_stable": "a stably parallelizable spin 5-manifold is parallelizable iff k(M) = 0, otherwise TM = p*(TS^5)",
    "verdict_h1_trivial": "H_1(M;Z) = 0 forces stable parallelizability; parallelizable iff k(M) = 0",
    "verdict_h1_z2": "H_1(M;Z) = Z2 forces stable parallelizability; parallelizable iff beta_2 is even",
}


class ConditionBMode(str, Enum):
    INTEGRAL_SOURCE = "integral_source"
    MOD2_SOURCE = "mod2_source"


class SplitReason(str, Enum):
    SPIN = "spin"
    TAYLOR_IMAGE_CRITERION = "taylor_image_criterion"
    TRIVIAL_KERNEL = "trivial_kernel"
    UNKNOWN = "unknown"


class Verdict(str, Enum):
    PARALLELIZABLE = "parallelizable"
    TANGENT_ISO_PULLBACK_TS5 = "tangent_iso_pullback_TS5"
    STABLY_PARALLELIZABLE_UNKNOWN_FRAME = "stably_parallelizable_unknown_frame"
    NOT_APPLICABLE = "not_applicable"


def _require_spin(K: SimplicialComplex):
    if not is_spin(K):
        raise NotSpin(f"{K.name or 'complex'} is not spin (w1 or w2 nonzero)")


def _require_oriented_5(K: SimplicialComplex):
    if K.dim != 5:
        raise ValidationError(f"expected a 5-dimensional complex, got dimension {K.dim}")
    try:
        orient(K)
    except NonOrientable as exc:
        raise OrientabilityRequired(str(exc), exc.witness) from exc


# ---------------------------------------------------------------- triples


@dataclass(frozen=True, eq=False)
class BundleTriple:
    """Characteristic triple (w2, w4, p1) of a rank-5 bundle."""

    a: Cochain
    b: Cochain
    c: Cochain

    def __post_init__(self):
        expected = {"a": (Ring.Z2, 2), "b": (Ring.Z2, 4), "c": (Ring.Z, 4)}
        for name, (ring, degree) in expected.items():
            x = getattr(self, name)
            if x.ring is not ring or x.degree != degree:
                raise RingMismatch(
                    f"component {name} must be a degree-{degree} class over {ring}, "
                    f"got degree {x.degree} over {x.ring}"
                )
            if not x.is_cocycle():
                raise ValidationError(f"component {name} is not a cocycle")
        if not (self.a.complex == self.b.complex == self.c.complex):
            raise RingMismatch("triple components live on different complexes")


def gamma_image_check(K: SimplicialComplex, t: BundleTriple) -> bool:
    """Test ``rho4(c) = P(a) + i*(b)`` in H^4(K;Z4)."""
    if t.a.complex != K:
        raise RingMismatch("triple does not live on the given complex")
    if K.dim > 5:
        raise ValidationError("the image criterion is stated for complexes of dimension at most 5")
    lhs = coefficient_map(t.c, Ring.Z4)
    rhs = pontryagin_square(t.a) + coefficient_map(t.b, Ring.Z4)
    return is_same_class(lhs, rhs)


# ---------------------------------------------------------------- conditions


def check_condition_A(K: SimplicialComplex | Sequence[int]) -> bool:
    """True iff no torsion coefficient of H^4(K;Z) is divisible by 4.

    Accepts a complex or directly a list of torsion coefficients.
    """
    if isinstance(K, SimplicialComplex):
        torsion = cohomology_group(K, Ring.Z, 4).torsion if K.dim >= 4 else ()
    else:
        torsion = tuple(int(d) for d in K)
    return all(d % 4 for d in torsion)


def _sq2_sources(K: SimplicialComplex, mode: ConditionBMode) -> list[CohomologyClass]:
    if mode is ConditionBMode.MOD2_SOURCE:
        return cohomology_basis(K, Ring.Z2, 3).generators
    if cohomology_group(K, Ring.Z, 3).is_zero:
        return []
    return [coefficient_map(g, Ring.Z2) for g in cohomology_basis(K, Ring.Z, 3).generators]


def sq2_image_rank(K: SimplicialComplex, mode=ConditionBMode.MOD2_SOURCE) -> tuple[int, int]:
    """Rank of the Sq^2 image in H^5(K;Z2) and dim H^5(K;Z2).

    Complexes of dimension below 5 have H^5 = 0 and return ``(0, 0)``.
    """
    mode = ConditionBMode(mode)
    if K.dim > 5:
        raise ValidationError("condition B is stated for complexes of dimension at most 5")
    if K.dim < 5:
        return 0, 0

    def build():
        h5 = len(cohomology_basis(K, Ring.Z2, 5))
        images = [coordinates(sq2(x)) for x in _sq2_sources(K, mode)]
        if not images or h5 == 0:
            return 0, h5
        return rank_mod(IntMatrix.from_dense(np.array(images).T), 2), h5

    return K.cached(("sq2_image_rank", mode), build)


def check_condition_B(K: SimplicialComplex, mode=ConditionBMode.MOD2_SOURCE) -> bool:
    """True iff the Sq^2 image spans H^5(K;Z2) under the chosen source reading."""
    rank, h5 = sq2_image_rank(K, mode)
    return rank == h5


@dataclass(frozen=True)
class ApplicabilityReport:
    condition_A: bool
    condition_B: dict[str, bool]
    injectivity: dict[str, str]

    def to_dict(self) -> dict:
        return {
            "condition_A": self.condition_A,
            "condition_B": dict(self.condition_B),
            "injectivity": dict(self.injectivity),
        }


def classification_applicability(K: SimplicialComplex) -> ApplicabilityReport:
    """Evaluate conditions A and B (both readings) and the injectivity status."""
    a = check_condition_A(K)
    b = {m.value: check_condition_B(K, m) for m in ConditionBMode}
    inj = {m: ("guaranteed" if a and ok else "not guaranteed") for m, ok in b.items()}
    return ApplicabilityReport(a, b, inj)


# ---------------------------------------------------------------- pi^4


@dataclass(frozen=True)
class Pi4Presentation:
    """Extension of H^4(M;Z) by a kernel of order 1 or 2."""

    base: GradedAbelianGroup
    kernel_order: int
    splits: bool
    split_reason: SplitReason

    @property
    def description(self) -> str:
        if self.kernel_order == 1:
            return str(self.base)
        if self.splits:
            return "Z2" if self.base.is_zero else f"{self.base} + Z2"
        return f"extension of {self.base} by Z2"

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "kernel_order": self.kernel_order,
            "splits": self.splits,
            "split_reason": self.split_reason.value,
            "group": self.description,
        }


def pi4_group(K: SimplicialComplex) -> Pi4Presentation:
    """Cohomotopy group pi^4(M) of a closed connected oriented 5-manifold.

    Raises:
        OrientabilityRequired: on nonorientable input.
    """
    _require_oriented_5(K)
    base = cohomology_group(K, Ring.Z, 4)
    integral, h5 = sq2_image_rank(K, ConditionBMode.INTEGRAL_SOURCE)
    kernel_order = 2 ** (h5 - integral)
    if kernel_order > 2:
        raise ComputationError(f"kernel of order {kernel_order}; input is not a connected manifold")
    if is_spin(K):
        return Pi4Presentation(base, kernel_order, True, SplitReason.SPIN)
    if kernel_order == 1:
        return Pi4Presentation(base, kernel_order, True, SplitReason.TRIVIAL_KERNEL)
    mod2, _ = sq2_image_rank(K, ConditionBMode.MOD2_SOURCE)
    if mod2 == integral:
        return Pi4Presentation(base, kernel_order, True, SplitReason.TAYLOR_IMAGE_CRITERION)
    return Pi4Presentation(base, kernel_order, False, SplitReason.UNKNOWN)


# ---------------------------------------------------------------- enumeration


@dataclass(frozen=True)
class SpinBundleClass:
    """A quaternionic line bundle as (p1/2 coordinates, kappa)."""

    half_p1: tuple[int, ...]
    kappa: int

    def to_dict(self) -> dict:
        return {"half_p1": list(self.half_p1), "kappa": self.kappa}


def _h4_orders(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(cohomology_basis(K, Ring.Z, 4).orders)


def _coordinate_label(orders: Sequence[int]) -> str:
    parts = ["Z" if d == 0 else f"Z{d}" for d in orders]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class QuaternionicEnumeration:
    orders: tuple[int, ...]
    count: int | None
    classes: tuple[SpinBundleClass, ...] | None
    descriptor: str

    def to_dict(self) -> dict:
        return {
            "h4_orders": list(self.orders),
            "count": self.count,
            "classes": None if self.classes is None else [c.to_dict() for c in self.classes],
            "descriptor": self.descriptor,
        }


def enumerate_quaternionic(K: SimplicialComplex) -> QuaternionicEnumeration:
    """Quaternionic line bundles over a spin 5-complex, as H^4(K;Z) x Z2.

    Raises:
        NotSpin: if w1 or w2 is nonzero.
    """
    _require_spin(K)
    orders = _h4_orders(K)
    descriptor = f"({_coordinate_label(orders)}) x Z2"
    if any(d == 0 for d in orders):
        return QuaternionicEnumeration(orders, None, None, descriptor)
    classes = tuple(
        SpinBundleClass(tuple(x), kappa)
        for x in itertools.product(*(range(d) for d in orders))
        for kappa in (0, 1)
    )
    return QuaternionicEnumeration(orders, len(classes), classes, descriptor)


def rho2_matrix(K: SimplicialComplex) -> np.ndarray:
    """Mod-2 reduction H^4(K;Z) -> H^4(K;Z2) in basis coordinates (rows: Z2 basis)."""
    gens = cohomology_basis(K, Ring.Z, 4).generators
    h4 = len(cohomology_basis(K, Ring.Z2, 4))
    cols = [coordinates(coefficient_map(g, Ring.Z2)) for g in gens]
    return np.array(cols, dtype=np.int64).reshape(len(gens), h4).T % 2


def _parity_constraints(M: np.ndarray) -> list[str]:
    """Nonzero rows of the reduced mod-2 matrix as ``g1 + g3 even`` strings."""
    rows = []
    work = [list(r) for r in M % 2]
    seen: set[tuple[int, ...]] = set()
    for r in work:
        key = tuple(r)
        if any(r) and key not in seen:
            seen.add(key)
            rows.append(" + ".join(f"g{j + 1}" for j, v in enumerate(r) if v))
    return rows


@dataclass(frozen=True)
class ClassificationReport:
    """Spinnable rank-5 bundles split by whether w4 vanishes."""

    h4_orders: tuple[int, ...]
    rho2: tuple[tuple[int, ...], ...]
    W1: str
    W2: str
    W1_count: int | None
    W2_count: int | None
    kernel_index: int
    W1_classes: tuple[SpinBundleClass, ...] | None
    W2_classes: tuple[tuple[int, ...], ...] | None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "h4_orders": list(self.h4_orders),
            "rho2": [list(r) for r in self.rho2],
            "W1": self.W1,
            "W2": self.W2,
            "W1_count": self.W1_count,
            "W2_count": self.W2_count,
            "kernel_index": self.kernel_index,
            "W1_classes": None if self.W1_classes is None else [c.to_dict() for c in self.W1_classes],
            "W2_classes": None if self.W2_classes is None else [list(x) for x in self.W2_classes],
            "notes": list(self.notes),
        }


def classify_rank5_spinnable(K: SimplicialComplex) -> ClassificationReport:
    """Classify spinnable rank-5 bundles over a spin 5-complex.

    W1 (w4 = 0) is parametrized by ``ker rho2 x Z2`` and W2 (w4 != 0) by the
    classes of H^4(K;Z) with nonzero mod-2 reduction, using
    ``w4 = rho2(p1/2)``.

    Raises:
        NotSpin: if w1 or w2 is nonzero.
    """
    _require_spin(K)
    orders = _h4_orders(K)
    M = rho2_matrix(K)
    rank = rank_mod(IntMatrix.from_dense(M), 2) if M.size else 0
    index = 2**rank
    constraints = _parity_constraints(M)
    if constraints:
        cond = ", ".join(f"{c} even" for c in constraints)
        W1 = f"{{x in {_coordinate_label(orders)} : {cond}}} x Z2"
        W2 = f"{{x in {_coordinate_label(orders)} : not ({cond})}}"
    else:
        W1 = f"({_coordinate_label(orders)}) x Z2"
        W2 = "empty"
    notes = []
    if rank:
        notes.append(
            "ker rho2 is a proper subgroup of H^4(M;Z): bundles with w4 = 0 are "
            "parametrized by ker rho2 x Z2, not by all of H^4(M;Z) x Z2"
        )
    if any(d == 0 for d in orders):
        return ClassificationReport(
            orders, tuple(map(tuple, M.tolist())), W1, W2, None, None, index, None, None, tuple(notes)
        )
    w1, w2 = [], []
    for x in itertools.product(*(range(d) for d in orders)):
        red = (M @ np.array(x, dtype=np.int64)) % 2 if orders else np.zeros(0)
        if np.any(red):
            w2.append(tuple(x))
        else:
            w1.extend(SpinBundleClass(tuple(x), kappa) for kappa in (0, 1))
    if not any(orders):
        notes.append("with p1/2 = 0 the two classes are the trivial bundle (kappa 0) and p*(TS^5) (kappa 1)")
    return ClassificationReport(
        orders,
        tuple(map(tuple, M.tolist())),
        W1,
        W2,
        len(w1),
        len(w2),
        index,
        tuple(w1),
        tuple(w2),
        tuple(notes),
    )


# ---------------------------------------------------------------- kappa


def kappa_structure_dependence(K: SimplicialComplex, alpha: Cochain, w4E: Cochain) -> bool:
    """True iff kappa is independent of the Sp(1)-structure twisted by alpha.

    Independence holds when ``alpha cup w4(E)`` pairs to zero, and for every
    alpha when w4(E) vanishes.
    """
    if alpha.ring is not Ring.Z2 or alpha.degree != 1:
        raise RingMismatch("alpha must be a mod-2 class of degree 1")
    if w4E.ring is not Ring.Z2 or w4E.degree != 4:
        raise RingMismatch("w4(E) must be a mod-2 class of degree 4")
    if alpha.complex != K or w4E.complex != K:
        raise RingMismatch("classes do not live on the given complex")
    if is_zero_class(w4E):
        return True
    return pairing(alpha, w4E) == 0


def covering_kappa(kappa: int, deg2: int) -> int:
    """Kappa of the pullback along a map of mod-2 degree ``deg2``."""
    return (int(kappa) & 1) & (int(deg2) & 1)


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class VerdictReport:
    verdict: Verdict
    rule: str
    kervaire: int | None
    h1: str
    stably_parallelizable: str

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "rule": self.rule,
            "kervaire": self.kervaire,
            "h1": self.h1,
            "stably_parallelizable": self.stably_parallelizable,
        }


def verdict_rule(spin: bool, flag: bool | None, k: int | None, h1: str) -> VerdictReport:
    """Pure parallelizability rule on (spin, stable-parallelizability flag, k, H_1).

    ``h1`` is ``"trivial"``, ``"z2"`` or ``"other"``.  For the first two,
    stable parallelizability is derived and the flag is ignored.
    """
    if not spin:
        raise NotSpin("parallelizability verdicts require a spin manifold")
    if h1 == "trivial":
        rule, stable = RULES["verdict_h1_trivial"], "derived"
    elif h1 == "z2":
        rule, stable = RULES["verdict_h1_z2"], "derived"
    elif flag:
        rule, stable = RULES["verdict_stable"], "assumed"
    else:
        return VerdictReport(Verdict.NOT_APPLICABLE, RULES["verdict_stable"], k, h1, "unknown")
    if k is None:
        return VerdictReport(Verdict.STABLY_PARALLELIZABLE_UNKNOWN_FRAME, rule, k, h1, stable)
    verdict = Verdict.PARALLELIZABLE if k == 0 else Verdict.TANGENT_ISO_PULLBACK_TS5
    return VerdictReport(verdict, rule, k, h1, stable)


def h1_type(K: SimplicialComplex) -> str:
    """Classify H_1(K;Z) as ``trivial``, ``z2`` or ``other``."""
    g = homology(K, Ring.Z, 1)
    if g.is_zero:
        return "trivial"
    if g.rank == 0 and tuple(g.torsion) == (2,):
        return "z2"
    return "other"


def parallelizability_verdict(K: SimplicialComplex, half_p1_is_zero: bool | None = None) -> VerdictReport:
    """Parallelizability verdict for a spin 5-complex.

    ``half_p1_is_zero`` is user metadata asserting stable parallelizability;
    it is not needed when H_1 is 0 or Z2.

    Raises:
        NotSpin: if w1 or w2 is nonzero.
    """
    spin = is_spin(K)
    if not spin:
        raise NotSpin(f"{K.name or 'complex'} is not spin (w1 or w2 nonzero)")
    try:
        k = kervaire_semichar(K)
    except (ValidationError, ComputationError):
        k = None
    return verdict_rule(spin, half_p1_is_zero, k, h1_type(K))
