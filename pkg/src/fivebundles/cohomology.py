"""Simplicial (co)chains, (co)homology groups and cohomology bases.

Cochains are numpy vectors indexed by the lexicographically ordered
simplices of one degree, with the ascending-vertex orientation.  The
coboundary is the transpose of the boundary:
``(d c)(v0..v{k+1}) = sum_i (-1)^i c(v0..^vi..v{k+1})``.

Groups over Z come from Smith normal forms of boundary matrices.  Mod-2
cohomology uses sparse set elimination so it scales to large complexes
(tens of thousands of simplices).  Mod-4 membership uses a Howell echelon.
Integral and mod-4 *bases* use Smith forms with transforms and are meant
for small complexes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Sequence

import numpy as np

from .complex_store import SimplicialComplex
from .errors import ComputationError, NoSolution, ParseError, RingMismatch, ValidationError
from .exact_linalg import GF2Echelon, IntMatrix, Z4Echelon, smith_diagonal, smith_normal_form, solve_mod


class Ring(str, Enum):
    """Coefficient rings."""

    Z = "Z"
    Z2 = "Z2"
    Z4 = "Z4"
    Q = "Q"

    @property
    def modulus(self) -> int:
        """0 for Z, n for Z/n; Q has no cochain model and raises."""
        if self is Ring.Q:
            raise ValidationError("rational coefficients are supported for ranks only")
        return {"Z": 0, "Z2": 2, "Z4": 4}[self.value]

    def __str__(self) -> str:
        return self.value


def as_ring(ring) -> Ring:
    try:
        return Ring(str(ring).upper() if str(ring).lower() != "q" else "Q")
    except ValueError:
        raise ValidationError(f"unknown ring {ring!r}; use Z, Z2, Z4 or Q") from None


# ------------------------------------------------------------------- groups


@dataclass(frozen=True)
class GradedAbelianGroup:
    """A finitely generated group ``R^rank + torsion`` in one degree.

    For Z the torsion is the divisor chain of invariant factors.  For Z4
    ``rank`` counts Z4 summands and ``torsion`` lists the Z2 summands.  For
    Z2 and Q the group is a vector space and ``torsion`` is empty.
    """

    degree: int
    rank: int
    torsion: tuple[int, ...] = ()
    ring: Ring = Ring.Z

    def __post_init__(self):
        object.__setattr__(self, "ring", as_ring(self.ring))
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.rank < 0:
            raise ValidationError("rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValidationError("torsion entries must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValidationError("torsion must form a divisor chain")

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Cardinality, or None when infinite."""
        if self.ring in (Ring.Z, Ring.Q) and self.rank:
            return None
        base = {Ring.Z: 1, Ring.Q: 1, Ring.Z2: 2, Ring.Z4: 4}[self.ring]
        out = base**self.rank
        for t in self.torsion:
            out *= t
        return out

    def to_dict(self) -> dict:
        return {"degree": self.degree, "ring": str(self.ring), "rank": self.rank, "torsion": list(self.torsion), "text": str(self)}

    def __str__(self) -> str:
        base = {Ring.Z: "Z", Ring.Q: "Q", Ring.Z2: "Z2", Ring.Z4: "Z4"}[self.ring]
        parts = []
        if self.rank == 1:
            parts.append(base)
        elif self.rank > 1:
            parts.append(f"{base}^{self.rank}")
        parts.extend(f"Z{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


# ------------------------------------------------------------------ cochains


@dataclass(frozen=True, eq=False)
class Cochain:
    """A cochain of one degree with values in Z, Z2 or Z4.

    Attributes:
        complex: The complex the cochain lives on.
        degree: Degree k; ``values`` has one entry per k-simplex.
        ring: Coefficient ring.
        values: Integer vector, reduced into ``[0, n)`` for Z/n.
    """

    complex: SimplicialComplex
    degree: int
    ring: Ring
    values: np.ndarray

    def __post_init__(self):
        ring = as_ring(self.ring)
        object.__setattr__(self, "ring", ring)
        vals = np.array(self.values, dtype=np.int64).reshape(-1)
        n = self.complex.count(self.degree) if 0 <= self.degree <= self.complex.dim else 0
        if vals.shape[0] != n:
            raise ValidationError(f"degree-{self.degree} cochain needs {n} values, got {vals.shape[0]}")
        if ring.modulus:
            vals %= ring.modulus
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def _check(self, other: "Cochain"):
        if other.complex is not self.complex and other.complex != self.complex:
            raise RingMismatch("cochains live on different complexes")
        if other.degree != self.degree or other.ring != self.ring:
            raise RingMismatch(f"cannot combine degree {self.degree}/{self.ring} with degree {other.degree}/{other.ring}")

    def _like(self, other, values) -> "Cochain":
        both = isinstance(self, CohomologyClass) and (other is None or isinstance(other, CohomologyClass))
        cls = CohomologyClass if both else Cochain
        return cls(self.complex, self.degree, self.ring, values)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return self._like(other, self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return self._like(other, self.values - other.values)

    def __neg__(self) -> "Cochain":
        return self._like(None, -self.values)

    def __rmul__(self, k: int) -> "Cochain":
        return self._like(None, int(k) * self.values)

    def is_zero(self) -> bool:
        """True when the cochain vanishes identically (not merely in cohomology)."""
        return not np.any(self.values)

    def coboundary(self) -> "Cochain":
        return Cochain(self.complex, self.degree + 1, self.ring, coboundary_values(self.complex, self.degree, self.values, self.ring.modulus))

    def is_cocycle(self) -> bool:
        return not np.any(coboundary_values(self.complex, self.degree, self.values, self.ring.modulus))

    def as_class(self) -> "CohomologyClass":
        return CohomologyClass(self.complex, self.degree, self.ring, self.values)

    def support(self) -> list[tuple[int, int]]:
        """Sparse form: ``(simplex index, value)`` pairs with nonzero value."""
        idx = np.flatnonzero(self.values)
        return [(int(i), int(self.values[i])) for i in idx]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(degree={self.degree}, ring={self.ring}, nnz={int(np.count_nonzero(self.values))})"


class CohomologyClass(Cochain):
    """A cocycle standing for its cohomology class.

    Construction asserts ``d(cocycle) = 0`` over the stated ring.
    """

    def __post_init__(self):
        super().__post_init__()
        if not self.is_cocycle():
            raise ValidationError(f"degree-{self.degree} cochain over {self.ring} is not a cocycle")

    @property
    def cocycle(self) -> np.ndarray:
        return self.values


def coboundary_values(K: SimplicialComplex, k: int, values: np.ndarray, modulus: int) -> np.ndarray:
    """Apply the coboundary to a degree-k cochain vector."""
    if k + 1 > K.dim or k < 0:
        return np.zeros(0 if k + 1 > K.dim else K.count(k + 1), dtype=np.int64)
    F = K.faces(k + 1)
    signs = np.array([(-1) ** i for i in range(k + 2)], dtype=np.int64)
    out = (np.asarray(values, dtype=np.int64)[F] * signs).sum(axis=1)
    return out % modulus if modulus else out


def boundary_values(K: SimplicialComplex, k: int, values: np.ndarray, modulus: int = 0) -> np.ndarray:
    """Apply the boundary to a degree-k chain vector."""
    if k <= 0:
        return np.zeros(0, dtype=np.int64)
    F = K.faces(k)
    out = np.zeros(K.count(k - 1), dtype=np.int64)
    vals = np.asarray(values, dtype=np.int64)
    for i in range(k + 1):
        np.add.at(out, F[:, i], (-1) ** i * vals)
    return out % modulus if modulus else out


def zero_cochain(K: SimplicialComplex, degree: int, ring) -> CohomologyClass:
    return CohomologyClass(K, degree, ring, np.zeros(K.count(degree), dtype=np.int64))


def unit_class(K: SimplicialComplex, ring) -> CohomologyClass:
    """The degree-0 class taking value 1 on every vertex."""
    return CohomologyClass(K, 0, ring, np.ones(K.count(0), dtype=np.int64))


def random_cochain(K: SimplicialComplex, degree: int, ring, rng: np.random.Generator, density: float = 0.5) -> Cochain:
    """A random cochain; entries nonzero with probability ``density``."""
    ring = as_ring(ring)
    n = K.count(degree)
    lo, hi = (0, ring.modulus) if ring.modulus else (-3, 4)
    vals = rng.integers(lo, hi, size=n) * (rng.random(n) < density)
    return Cochain(K, degree, ring, vals)


# ---------------------------------------------------------- boundary matrices


def boundary_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """The boundary map from k-chains to (k-1)-chains."""

    def build():
        cols = boundary_columns(K, k)
        return IntMatrix.from_columns(K.count(k - 1), cols)

    return K.cached(("boundary_matrix", k), build)


def boundary_columns(K: SimplicialComplex, k: int) -> list[dict[int, int]]:
    F = K.faces(k)
    return [{int(F[s, i]): (-1) ** i for i in range(k + 1)} for s in range(F.shape[0])]


def coboundary_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """The coboundary map from k-cochains to (k+1)-cochains."""
    if k + 1 > K.dim:
        return IntMatrix(0, K.count(k))
    if k < 0:
        return IntMatrix(K.count(0), 0)
    return K.cached(("coboundary_matrix", k), lambda: boundary_matrix(K, k + 1).transpose())


def _invariant_factors(K: SimplicialComplex, k: int) -> tuple[int, ...]:
    """Invariant factors of the boundary from degree k to k-1 (empty outside 1..dim)."""
    if k < 1 or k > K.dim:
        return ()
    return K.cached(("smith_diagonal", k), lambda: smith_diagonal(boundary_columns(K, k), rows=K.count(k - 1)))


def _rank_mod2(K: SimplicialComplex, k: int) -> int:
    """Mod-2 rank of the boundary from degree k to k-1."""
    if k < 1 or k > K.dim:
        return 0
    return len(_z2_cocycle_echelon(K, k - 1).table)


def _check_degree(K: SimplicialComplex, degree: int):
    if not 0 <= degree <= K.dim:
        raise ValidationError(f"degree {degree} outside 0..{K.dim}")


def _z4_group(degree: int, free: int, tors: Sequence[int]) -> GradedAbelianGroup:
    fours = free
    twos = 0
    for d in tors:
        g = gcd(d, 4)
        if g == 4:
            fours += 1
        elif g == 2:
            twos += 1
    return GradedAbelianGroup(degree, fours, (2,) * twos, Ring.Z4)


def homology(K: SimplicialComplex, ring, degree: int) -> GradedAbelianGroup:
    """Simplicial homology group H_degree(K; ring)."""
    ring = as_ring(ring)
    _check_degree(K, degree)
    if ring is Ring.Z2:
        rank = K.count(degree) - _rank_mod2(K, degree) - _rank_mod2(K, degree + 1)
        return GradedAbelianGroup(degree, rank, (), Ring.Z2)
    d_out = _invariant_factors(K, degree)
    d_in = _invariant_factors(K, degree + 1)
    free = K.count(degree) - len(d_out) - len(d_in)
    tors = tuple(sorted(d for d in d_in if d > 1))
    if ring is Ring.Q:
        return GradedAbelianGroup(degree, free, (), Ring.Q)
    if ring is Ring.Z:
        return GradedAbelianGroup(degree, free, tors, Ring.Z)
    # universal coefficients: H_k(Z4) = H_k(Z) (x) Z4 + Tor(H_{k-1}(Z), Z4)
    prev = [d for d in d_out if d > 1]
    return _z4_group(degree, free, list(tors) + prev)


def cohomology_group(K: SimplicialComplex, ring, degree: int) -> GradedAbelianGroup:
    """Simplicial cohomology group H^degree(K; ring)."""
    ring = as_ring(ring)
    _check_degree(K, degree)
    if ring in (Ring.Z2, Ring.Q):
        h = homology(K, ring, degree)
        return GradedAbelianGroup(degree, h.rank, (), ring)
    d_out = _invariant_factors(K, degree)
    d_in = _invariant_factors(K, degree + 1)
    free = K.count(degree) - len(d_out) - len(d_in)
    tors_here = [d for d in d_out if d > 1]
    if ring is Ring.Z:
        return GradedAbelianGroup(degree, free, tuple(sorted(tors_here)), Ring.Z)
    # H^k(Z4) = H^k(Z) (x) Z4 + Tor(H^{k+1}(Z), Z4)
    return _z4_group(degree, free, tors_here + [d for d in d_in if d > 1])


def betti_numbers(K: SimplicialComplex, ring=Ring.Q) -> tuple[int, ...]:
    """Ranks of H_0..H_dim over a field (Q or Z2)."""
    return tuple(homology(K, ring, k).rank for k in range(K.dim + 1))


# --------------------------------------------------------- mod-2 machinery


def _z2_cocycle_echelon(K: SimplicialComplex, k: int) -> GF2Echelon:
    """Echelon of the rows of the degree-k coboundary (one per (k+1)-simplex)."""

    def build():
        E = GF2Echelon()
        if k + 1 <= K.dim:
            for row in K.faces(k + 1):
                E.insert({int(x) for x in row})
        return E

    return K.cached(("z2_cocycle_echelon", k), build)


@dataclass
class _Z2Data:
    free: list[int]  # coordinates determining a cocycle
    image: GF2Echelon  # coboundaries restricted to ``free``
    classes: list[int]  # free coordinates not hit by coboundaries
    pivots: list[int]
    cocycles: GF2Echelon


def _z2_data(K: SimplicialComplex, k: int) -> _Z2Data:
    def build():
        P = _z2_cocycle_echelon(K, k)
        pivset = set(P.table)
        free = [i for i in range(K.count(k)) if i not in pivset]
        freeset = set(free)
        Q = GF2Echelon()
        if k >= 1:
            F = K.faces(k)
            cof: list[list[int]] = [[] for _ in range(K.count(k - 1))]
            for s in range(F.shape[0]):
                if s in freeset:
                    for x in F[s]:
                        cof[int(x)].append(s)
            for c in cof:
                if c:
                    Q.insert(set(c))
        classes = [i for i in free if i not in Q.table]
        return _Z2Data(free=free, image=Q, classes=classes, pivots=sorted(pivset), cocycles=P)

    return K.cached(("z2_data", k), build)


def _z2_extend(data: _Z2Data, free_ones: set[int], n: int) -> np.ndarray:
    """The unique cocycle with the given values on the free coordinates."""
    z = np.zeros(n, dtype=np.int64)
    for i in free_ones:
        z[i] = 1
    table = data.cocycles.table
    for m in data.pivots:
        row = table[m][0]
        z[m] = sum(int(z[i]) for i in row if i != m) % 2
    return z


def _z2_coords(c: Cochain) -> tuple[int, ...]:
    data = _z2_data(c.complex, c.degree)
    freeset = set(data.free)
    restricted = {int(i) for i in np.flatnonzero(c.values % 2) if int(i) in freeset}
    res, _ = data.image.reduce_fully(restricted)
    return tuple(1 if i in res else 0 for i in data.classes)


# ------------------------------------------------------------------- bases


@dataclass(frozen=True, eq=False)
class CohomologyBasis:
    """Deterministic generators of H^degree(K; ring).

    Attributes:
        degree: Cohomological degree.
        ring: Coefficient ring.
        free_generators: Generators of infinite order (Z) or of order 4 (Z4),
            or the vector-space basis (Z2).
        torsion_generators: ``(class, order)`` for finite-order generators
            (Z: order >= 2; Z4: order 2).
        certificates: For each torsion generator c of order t, a cochain u
            with ``t * c = d u``.
    """

    complex: SimplicialComplex
    degree: int
    ring: Ring
    free_generators: tuple[CohomologyClass, ...]
    torsion_generators: tuple[tuple[CohomologyClass, int], ...]
    certificates: tuple[Cochain, ...] = ()

    @property
    def generators(self) -> list[CohomologyClass]:
        """Generators in coordinate order: free first, then torsion."""
        return list(self.free_generators) + [c for c, _ in self.torsion_generators]

    @property
    def orders(self) -> list[int]:
        """Additive order of each generator (0 = infinite)."""
        free_order = {Ring.Z: 0, Ring.Z2: 2, Ring.Z4: 4}[self.ring]
        return [free_order] * len(self.free_generators) + [t for _, t in self.torsion_generators]

    def __len__(self) -> int:
        return len(self.free_generators) + len(self.torsion_generators)

    def group(self) -> GradedAbelianGroup:
        if self.ring is Ring.Z2:
            return GradedAbelianGroup(self.degree, len(self.free_generators), (), Ring.Z2)
        return GradedAbelianGroup(self.degree, len(self.free_generators), tuple(sorted(t for _, t in self.torsion_generators)), self.ring)


def cohomology_basis(K: SimplicialComplex, ring, degree: int) -> CohomologyBasis:
    """Deterministic cocycle generators of H^degree(K; ring)."""
    ring = as_ring(ring)
    _check_degree(K, degree)
    if ring is Ring.Q:
        raise ValidationError("rational cohomology is computed as ranks only")
    return K.cached(("basis", ring.value, degree), lambda: _build_basis(K, ring, degree))


def _build_basis(K: SimplicialComplex, ring: Ring, k: int) -> CohomologyBasis:
    if ring is Ring.Z2:
        data = _z2_data(K, k)
        n = K.count(k)
        gens = tuple(CohomologyClass(K, k, Ring.Z2, _z2_extend(data, {f}, n)) for f in data.classes)
        return CohomologyBasis(K, k, Ring.Z2, gens, ())
    zdata = _integral_data(K, k)
    if ring is Ring.Z:
        free = tuple(CohomologyClass(K, k, Ring.Z, v) for v in zdata.free)
        tors = tuple((CohomologyClass(K, k, Ring.Z, v), d) for v, d, _ in zdata.torsion)
        certs = tuple(Cochain(K, k - 1, Ring.Z, u) for _, _, u in zdata.torsion)
        return CohomologyBasis(K, k, Ring.Z, free, tors, certs)
    # Z4 from universal coefficients: reductions of integral classes plus
    # the Tor part coming from torsion one degree up.
    fours: list[np.ndarray] = [v for v in zdata.free]
    twos: list[tuple[np.ndarray, np.ndarray]] = []
    for v, d, u in zdata.torsion:
        g = gcd(d, 4)
        if g == 4:
            fours.append(v)
        elif g == 2:
            twos.append((v, u))
    if k + 1 <= K.dim:
        up = _integral_data(K, k + 1)
        for _, d, u in up.torsion:
            g = gcd(d, 4)
            if g == 4:
                fours.append(u)
            elif g == 2:
                twos.append((2 * u, np.zeros(K.count(k - 1) if k >= 1 else 0, dtype=np.int64)))
    free4 = tuple(CohomologyClass(K, k, Ring.Z4, v) for v in fours)
    tors4 = tuple((CohomologyClass(K, k, Ring.Z4, v), 2) for v, _ in twos)
    certs4 = tuple(Cochain(K, k - 1, Ring.Z4, u) for _, u in twos) if k >= 1 else ()
    return CohomologyBasis(K, k, Ring.Z4, free4, tors4, certs4)


@dataclass
class _IntegralData:
    free: list[np.ndarray]
    torsion: list[tuple[np.ndarray, int, np.ndarray]]  # (cocycle, order, certificate)
    U: IntMatrix | None  # change of basis for coordinates
    rank: int
    diagonal: tuple[int, ...]
    kernel_solver: IntMatrix | None


def _to_int64(vec: Sequence[int]) -> np.ndarray:
    if any(abs(int(x)) >= 2**62 for x in vec):
        raise ComputationError("cocycle entries exceed 64-bit range")
    return np.array([int(x) for x in vec], dtype=np.int64)


def _integral_data(K: SimplicialComplex, k: int) -> _IntegralData:
    def build():
        n = K.count(k)
        if k >= 1:
            snf = smith_normal_form(coboundary_matrix(K, k - 1))
            Uinv = snf.U_inv.col_dicts()
            Vc = snf.V.col_dicts()
            r, diag, U = snf.rank, snf.diagonal, snf.U
        else:
            Uinv = {t: {t: 1} for t in range(n)}
            Vc, r, diag, U = {}, 0, (), IntMatrix.identity(n)
        basis_cols = [Uinv.get(t, {}) for t in range(n)]
        torsion = []
        for t in range(r):
            if diag[t] > 1:
                b = _dense(basis_cols[t], n)
                u = _dense(Vc.get(t, {}), K.count(k - 1))
                torsion.append((_to_int64(b), diag[t], _to_int64(u)))
        W = IntMatrix.from_columns(n, basis_cols[r:])
        M = coboundary_matrix(K, k) @ W if k + 1 <= K.dim else IntMatrix(0, n - r)
        snf2 = smith_normal_form(M)
        V2 = snf2.V.col_dicts()
        kernel_cols = [V2.get(t, {}) for t in range(snf2.rank, n - r)]
        Kmat = IntMatrix.from_columns(n - r, kernel_cols)
        free = [_to_int64(W @ _dense(col, n - r)) for col in kernel_cols]
        return _IntegralData(free=free, torsion=torsion, U=U, rank=r, diagonal=diag, kernel_solver=Kmat)

    return K.cached(("integral_data", k), build)


def _dense(col: dict[int, int], n: int) -> list[int]:
    out = [0] * n
    for i, v in col.items():
        out[i] = v
    return out


# ------------------------------------------------------------- membership


def _z4_image_echelon(K: SimplicialComplex, k: int) -> Z4Echelon:
    """Howell echelon of the degree-k coboundaries over Z4."""

    def build():
        E = Z4Echelon()
        if k >= 1:
            F = K.faces(k)
            cof: list[dict[int, int]] = [dict() for _ in range(K.count(k - 1))]
            for s in range(F.shape[0]):
                for i in range(k + 1):
                    cof[int(F[s, i])][s] = (-1) ** i % 4
            for c in cof:
                if c:
                    E.insert(c)
        return E

    return K.cached(("z4_image", k), build)


def is_coboundary(c: Cochain) -> bool:
    """True iff the cocycle c is d of some cochain over its ring."""
    K, k = c.complex, c.degree
    if not c.is_cocycle():
        return False
    if c.is_zero():
        return True
    if k == 0:
        return False
    if c.ring is Ring.Z2:
        data = _z2_data(K, k)
        freeset = set(data.free)
        restricted = {int(i) for i in np.flatnonzero(c.values) if int(i) in freeset}
        return data.image.contains(restricted)
    if c.ring is Ring.Z4:
        return _z4_image_echelon(K, k).contains({int(i): int(c.values[i]) for i in np.flatnonzero(c.values)})
    try:
        solve_mod(coboundary_matrix(K, k - 1), [int(x) for x in c.values], 0)
        return True
    except NoSolution:
        return False


def is_same_class(c1: Cochain, c2: Cochain) -> bool:
    """True iff c1 - c2 is a coboundary."""
    if c1.degree != c2.degree or c1.ring != c2.ring:
        raise RingMismatch("classes must share degree and ring")
    return is_coboundary(Cochain(c1.complex, c1.degree, c1.ring, c1.values - c2.values))


def is_zero_class(c: Cochain) -> bool:
    return is_coboundary(c)


def coordinates(c: Cochain) -> tuple[int, ...]:
    """Coordinates of a cocycle in the deterministic basis (see :func:`cohomology_basis`).

    Free coordinates over Z are integers; every other coordinate is reduced
    modulo the order of its generator.
    """
    if not c.is_cocycle():
        raise ValidationError("coordinates are defined for cocycles only")
    K, k = c.complex, c.degree
    if c.ring is Ring.Z2:
        return _z2_coords(c)
    basis = cohomology_basis(K, c.ring, k)
    if c.ring is Ring.Z:
        z = _integral_data(K, k)
        y = z.U @ [int(x) for x in c.values]
        tors = [y[t] % d for t, d in enumerate(z.diagonal) if d > 1]
        free = solve_mod(z.kernel_solver, y[z.rank :], 0) if len(z.free) else []
        return tuple(int(x) for x in free) + tuple(int(x) for x in tors)
    E = K.cached(("z4_coord_echelon", k), lambda: _z4_coordinate_echelon(K, k, basis))
    res, tag = E.reduce({int(i): int(c.values[i]) for i in np.flatnonzero(c.values)})
    if res:
        raise ComputationError("class not in the span of the Z4 basis")
    return tuple(((-tag.get(g, 0)) % o) for g, o in enumerate(basis.orders))


def _z4_coordinate_echelon(K: SimplicialComplex, k: int, basis: CohomologyBasis) -> Z4Echelon:
    E = Z4Echelon()
    if k >= 1:
        F = K.faces(k)
        cof: list[dict[int, int]] = [dict() for _ in range(K.count(k - 1))]
        for s in range(F.shape[0]):
            for i in range(k + 1):
                cof[int(F[s, i])][s] = (-1) ** i % 4
        for c in cof:
            if c:
                E.insert(c)
    for g, gen in enumerate(basis.generators):
        E.insert({int(i): int(gen.values[i]) for i in np.flatnonzero(gen.values)}, {g: 1})
    return E


def class_from_coordinates(K: SimplicialComplex, ring, degree: int, coords: Sequence[int]) -> CohomologyClass:
    """The combination of basis generators with the given coefficients."""
    basis = cohomology_basis(K, ring, degree)
    if len(coords) != len(basis):
        raise ValidationError(f"H^{degree}({ring}) has {len(basis)} generators, got {len(coords)} coordinates")
    vals = np.zeros(K.count(degree), dtype=np.int64)
    for a, g in zip(coords, basis.generators):
        vals = vals + int(a) * g.values
    return CohomologyClass(K, degree, basis.ring, vals)


# ----------------------------------------------------- coefficient changes


def coefficient_map(c: Cochain, target) -> Cochain:
    """Change of coefficients: mu (Z->Z2), rho4 (Z->Z4), i_* (Z2->Z4), Z4->Z2.

    ``i_*`` multiplies a mod-2 cocycle by 2 into Z4 coefficients.
    """
    target = as_ring(target)
    pair = (c.ring, target)
    if pair in ((Ring.Z, Ring.Z2), (Ring.Z, Ring.Z4), (Ring.Z4, Ring.Z2)):
        vals = c.values
    elif pair == (Ring.Z2, Ring.Z4):
        vals = 2 * c.values
    else:
        raise RingMismatch(f"unsupported coefficient map {c.ring} -> {target}")
    cls = CohomologyClass if isinstance(c, CohomologyClass) else Cochain
    return cls(c.complex, c.degree, target, vals)


def integer_lift(c: Cochain) -> Cochain:
    """Lift a mod-n cochain to Z with entries in [0, n)."""
    return Cochain(c.complex, c.degree, Ring.Z, c.values)


def bockstein_sq1(c: Cochain) -> Cochain:
    """Sq^1 as the Bockstein: reduce ``d(lift)/2`` modulo 2."""
    if c.ring is not Ring.Z2:
        raise RingMismatch("Sq^1 is defined on mod-2 classes")
    lift = coboundary_values(c.complex, c.degree, c.values, 0)
    if np.any(lift % 2):
        raise ValidationError("Sq^1 needs a mod-2 cocycle")
    cls = CohomologyClass if isinstance(c, CohomologyClass) else Cochain
    return cls(c.complex, c.degree + 1, Ring.Z2, (lift // 2) % 2)


# ------------------------------------------------------------------ maps


def pullback(c: Cochain, source: SimplicialComplex, vertex_map: Sequence[int]) -> Cochain:
    """Pull a cochain back along a simplicial map given on vertices.

    Simplices mapped degenerately get value 0; over Z the sign of the
    vertex permutation is applied.
    """
    k = c.degree
    S = source.simplex_array(k)
    vm = np.asarray(vertex_map, dtype=np.int64)
    img = vm[S]
    order = np.argsort(img, axis=1, kind="stable")
    sorted_img = np.take_along_axis(img, order, axis=1)
    nondeg = np.all(np.diff(sorted_img, axis=1) != 0, axis=1) if k else np.ones(len(S), dtype=bool)
    vals = np.zeros(len(S), dtype=np.int64)
    if np.any(nondeg):
        idx = c.complex.lookup(k, sorted_img[nondeg])
        sign = np.array([_perm_sign(p) for p in order[nondeg]], dtype=np.int64)
        vals[nondeg] = c.values[idx] * (sign if c.ring is not Ring.Z2 else 1)
    cls = CohomologyClass if isinstance(c, CohomologyClass) else Cochain
    return cls(source, k, c.ring, vals)


def _perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


# ---------------------------------------------------------- serialization


def class_to_json(c: Cochain) -> dict:
    """Sparse JSON form ``{"degree", "ring", "values": [[index, value], ...]}``."""
    return {"degree": c.degree, "ring": str(c.ring), "values": [[i, v] for i, v in c.support()]}


def class_from_json(K: SimplicialComplex, doc: dict | str, check: bool = True) -> Cochain:
    """Inverse of :func:`class_to_json`; returns a CohomologyClass when ``check``."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid class JSON: {e}") from None
    try:
        degree = int(doc["degree"])
        ring = as_ring(doc["ring"])
        vals = np.zeros(K.count(degree), dtype=np.int64)
        for i, v in doc["values"]:
            vals[int(i)] = int(v)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ParseError(f"malformed class document: {e}") from None
    cls = CohomologyClass if check else Cochain
    return cls(K, degree, ring, vals)
