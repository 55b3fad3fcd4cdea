"""Framed circles, loops in SO(5) and their Z2 class via the Sp(2) double cover.

A quaternion ``w + xi + yj + zk`` is represented by the complex 2x2 matrix
``[[a, -conj(b)], [b, conj(a)]]`` with ``a = w + xi`` and ``b = y - zi``.
This embedding is multiplicative and sends quaternion conjugation to the
conjugate transpose, so a 2x2 quaternionic matrix becomes a complex 4x4
matrix and Sp(2) becomes a subgroup of U(4).

Sp(2) acts on the 5-dimensional space of trace-free quaternionic Hermitian
2x2 matrices by ``X -> A X A*``; in a fixed orthonormal basis this is the
double cover Sp(2) -> SO(5).  A based loop in SO(5) lifts by Lie-algebra
continuation, and the lift ends at +I or -I according to its class in
pi_1(SO(5)) = Z2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.linalg import expm

from .errors import LiftError, ParseError, StepBoundError, ValidationError

ORTHO_TOL = 1e-9
TERMINAL_TOL = 1e-6
STEP_BOUND = 0.1


# ---------------------------------------------------------------- quaternions


@dataclass(frozen=True)
class Quaternion:
    w: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a: Sequence[float]) -> "Quaternion":
        return cls(*(float(t) for t in a))

    def array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = o.w, o.x, o.y, o.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __add__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.array() + o.array())

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_array(-self.array())

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return float(np.linalg.norm(self.array()))

    def to_complex(self) -> np.ndarray:
        """Complex 2x2 representation."""
        return quaternion_to_complex(self.array())


ONE, QI, QJ, QK = Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)


def quaternion_to_complex(q: Sequence[float]) -> np.ndarray:
    w, x, y, z = q
    a, b = complex(w, x), complex(y, -z)
    return np.array([[a, -b.conjugate()], [b, a.conjugate()]])


def complex_to_quaternion(m: np.ndarray) -> Quaternion:
    a, b = m[0, 0], m[1, 0]
    return Quaternion(a.real, a.imag, b.real, -b.imag)


def quaternion_matrix(entries: Sequence[Sequence[Quaternion | Sequence[float]]]) -> np.ndarray:
    """Complex representation of a square quaternionic matrix."""
    n = len(entries)
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    for r, row in enumerate(entries):
        for c, q in enumerate(row):
            arr = q.array() if isinstance(q, Quaternion) else np.asarray(q, dtype=float)
            out[2 * r : 2 * r + 2, 2 * c : 2 * c + 2] = quaternion_to_complex(arr)
    return out


def _is_quaternionic(m: np.ndarray, tol: float) -> bool:
    # every 2x2 block must have the form [[a, -conj(b)], [b, conj(a)]]
    n = m.shape[0] // 2
    for r in range(n):
        for c in range(n):
            blk = m[2 * r : 2 * r + 2, 2 * c : 2 * c + 2]
            if abs(blk[0, 0] - np.conj(blk[1, 1])) > tol or abs(blk[0, 1] + np.conj(blk[1, 0])) > tol:
                return False
    return True


@dataclass(frozen=True, eq=False)
class Sp2Element:
    """Element of Sp(2), stored as its complex 4x4 representation."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValidationError("Sp(2) elements are 2x2 quaternionic matrices")
        if not _is_quaternionic(m, ORTHO_TOL):
            raise ValidationError("matrix is not quaternionic")
        if np.linalg.norm(m @ m.conj().T - np.eye(4)) > ORTHO_TOL:
            raise ValidationError("matrix is not unitary within 1e-9")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_quaternions(cls, entries: Sequence[Sequence[Quaternion | Sequence[float]]]) -> "Sp2Element":
        return cls(quaternion_matrix(entries))

    @classmethod
    def identity(cls) -> "Sp2Element":
        return cls(np.eye(4, dtype=complex))

    def entry(self, r: int, c: int) -> Quaternion:
        return complex_to_quaternion(self.matrix[2 * r : 2 * r + 2, 2 * c : 2 * c + 2])

    def __matmul__(self, o: "Sp2Element") -> "Sp2Element":
        return Sp2Element(self.matrix @ o.matrix)

    def __neg__(self) -> "Sp2Element":
        return Sp2Element(-self.matrix)


def random_sp2(rng: np.random.Generator, scale: float = 2.0) -> Sp2Element:
    """exp of a random element of sp(2)."""
    xi = np.tensordot(rng.normal(scale=scale, size=10), _sp2_basis(), axes=1)
    m = expm(xi)
    # re-unitarize against rounding
    u, _, vh = np.linalg.svd(m)
    return Sp2Element(u @ vh)


# ---------------------------------------------------------------- the cover


@lru_cache(maxsize=None)
def _v_basis() -> np.ndarray:
    """Orthonormal basis of trace-free quaternionic Hermitian 2x2 matrices."""
    s = 1 / math.sqrt(2)
    basis = [quaternion_matrix([[ONE, (0, 0, 0, 0)], [(0, 0, 0, 0), -ONE]]) * s]
    for q in (ONE, QI, QJ, QK):
        basis.append(quaternion_matrix([[(0, 0, 0, 0), q], [q.conj(), (0, 0, 0, 0)]]) * s)
    out = np.array(basis)
    out.setflags(write=False)
    return out


def _v_inner(X: np.ndarray, Y: np.ndarray) -> float:
    # real part of the quaternionic trace, which is half the complex trace
    return float(np.real(np.trace(X @ Y))) / 2


def _coords_in_v(X: np.ndarray) -> np.ndarray:
    return np.array([_v_inner(e, X) for e in _v_basis()])


def cover_map(A: Sp2Element | np.ndarray) -> np.ndarray:
    """The double cover Sp(2) -> SO(5) in the fixed basis of V."""
    m = A.matrix if isinstance(A, Sp2Element) else Sp2Element(A).matrix
    basis = _v_basis()
    R = np.empty((5, 5))
    for b, e in enumerate(basis):
        R[:, b] = _coords_in_v(m @ e @ m.conj().T)
    return R


@lru_cache(maxsize=None)
def _sp2_basis() -> np.ndarray:
    """Basis of sp(2): diag(u, 0), diag(0, u) for u = i, j, k; [[0, q], [-conj q, 0]]."""
    zero = (0, 0, 0, 0)
    basis = []
    for u in (QI, QJ, QK):
        basis.append(quaternion_matrix([[u, zero], [zero, zero]]))
    for u in (QI, QJ, QK):
        basis.append(quaternion_matrix([[zero, zero], [zero, u]]))
    for q in (ONE, QI, QJ, QK):
        basis.append(quaternion_matrix([[zero, q], [-q.conj(), zero]]))
    out = np.array(basis)
    out.setflags(write=False)
    return out


_UPPER = np.triu_indices(5, k=1)


def so5_coords(omega: np.ndarray) -> np.ndarray:
    """Upper-triangular entries of an antisymmetric 5x5 matrix, row-major."""
    return omega[_UPPER]


def so5_from_coords(c: np.ndarray) -> np.ndarray:
    out = np.zeros((5, 5))
    out[_UPPER] = c
    return out - out.T


def d_cover(xi: np.ndarray) -> np.ndarray:
    """Differential of the cover: the antisymmetric matrix of X -> xi X + X xi*."""
    basis = _v_basis()
    out = np.empty((5, 5))
    for b, e in enumerate(basis):
        out[:, b] = _coords_in_v(xi @ e + e @ xi.conj().T)
    return out


@lru_cache(maxsize=None)
def _lie_algebra_iso() -> np.ndarray:
    L = np.array([so5_coords(d_cover(xi)) for xi in _sp2_basis()]).T
    if np.linalg.cond(L) > 1e8:
        raise LiftError("differential of the cover is not invertible")
    L.setflags(write=False)
    return L


def lie_algebra_iso() -> np.ndarray:
    """10x10 matrix of the cover's differential sp(2) -> so(5) in fixed bases."""
    return _lie_algebra_iso().copy()


def d_cover_inverse(omega: np.ndarray) -> np.ndarray:
    """The element of sp(2) (complex 4x4) mapping to the antisymmetric ``omega``."""
    coeffs = np.linalg.solve(_lie_algebra_iso(), so5_coords(omega))
    return np.tensordot(coeffs, _sp2_basis(), axes=1)


# ---------------------------------------------------------------- loops in SO(5)


@dataclass(frozen=True)
class StableFramingClass:
    """Element of the framed 1-bordism group Z2."""

    bit: int

    def __post_init__(self):
        object.__setattr__(self, "bit", int(self.bit) & 1)

    def __add__(self, o: "StableFramingClass | int") -> "StableFramingClass":
        return StableFramingClass(self.bit ^ int(o))

    __radd__ = __add__

    def __int__(self) -> int:
        return self.bit

    def __eq__(self, o) -> bool:
        if isinstance(o, StableFramingClass):
            return self.bit == o.bit
        if isinstance(o, int):
            return self.bit == o
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bit)


def _check_rotation(R: np.ndarray, k: int):
    if R.shape != (5, 5):
        raise ValidationError(f"sample {k} is not 5x5")
    if np.linalg.norm(R @ R.T - np.eye(5)) > ORTHO_TOL:
        raise ValidationError(f"sample {k} is not orthogonal within 1e-9")
    if abs(np.linalg.det(R) - 1) > ORTHO_TOL:
        raise ValidationError(f"sample {k} does not have determinant +1")


def step_sizes(samples: np.ndarray) -> np.ndarray:
    """Frobenius norms ``|R_{k+1} R_k^T - I|``."""
    deltas = samples[1:] @ np.transpose(samples[:-1], (0, 2, 1))
    return np.linalg.norm(deltas - np.eye(5), axis=(1, 2))


@dataclass(frozen=True, eq=False)
class SO5Loop:
    """Sampled based loop ``R_0 = I, ..., R_N = I`` in SO(5)."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=float)
        if s.ndim != 3 or s.shape[1:] != (5, 5) or len(s) < 2:
            raise ValidationError("an SO(5) loop needs at least two 5x5 samples")
        for k, R in enumerate(s):
            _check_rotation(R, k)
        if np.linalg.norm(s[0] - np.eye(5)) > ORTHO_TOL:
            raise ValidationError("loop is not based at the identity")
        if np.linalg.norm(s[-1] - s[0]) > ORTHO_TOL:
            raise ValidationError("loop is not closed")
        steps = step_sizes(s)
        if steps.max() >= STEP_BOUND:
            raise StepBoundError(
                f"step {int(steps.argmax())} has size {steps.max():.3g} >= {STEP_BOUND}"
            )
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    def __len__(self) -> int:
        return len(self.samples) - 1

    def concat(self, other: "SO5Loop") -> "SO5Loop":
        return SO5Loop(np.concatenate([self.samples, other.samples[1:]]))

    def conjugate(self, A: np.ndarray) -> "SO5Loop":
        """Pointwise ``A(s) R(s) A(s)^-1`` for samples ``A`` of another loop."""
        A = np.asarray(A, dtype=float)
        if A.shape != self.samples.shape:
            raise ValidationError("conjugating loop must have the same sampling")
        return SO5Loop(A @ self.samples @ np.transpose(A, (0, 2, 1)))


def rotation_loop(N: int = 128, plane: tuple[int, int] = (1, 2), turns: int = 1) -> SO5Loop:
    """Rotation by ``2 pi turns s`` in a coordinate plane, sampled at N + 1 points."""
    i, j = plane
    t = 2 * math.pi * turns * np.arange(N + 1) / N
    R = np.tile(np.eye(5), (N + 1, 1, 1))
    R[:, i, i] = np.cos(t)
    R[:, j, j] = np.cos(t)
    R[:, i, j] = -np.sin(t)
    R[:, j, i] = np.sin(t)
    R[-1] = np.eye(5)
    return SO5Loop(R)


def _principal_log(delta: np.ndarray) -> np.ndarray:
    """Logarithm of rotations with every angle below pi/2 (batched over leading axes).

    The skew part ``(D - D^T)/2`` has eigenvalues ``i sin(phi)``; applying
    arcsin spectrally recovers the generator with eigenvalues ``i phi``.
    """
    skew = (delta - np.swapaxes(delta, -1, -2)) / 2
    vals, vecs = np.linalg.eigh(-1j * skew)
    if np.any(np.abs(vals) > 1 - 1e-12):
        raise StepBoundError("rotation angle too large for the principal logarithm")
    omega = 1j * (vecs * np.arcsin(vals)[..., None, :]) @ np.swapaxes(vecs.conj(), -1, -2)
    omega = np.real(omega)
    return (omega - np.swapaxes(omega, -1, -2)) / 2


def spin_lift_class(loop: SO5Loop) -> StableFramingClass:
    """Z2 class of a based loop in SO(5) by lifting to Sp(2).

    Raises:
        LiftError: if the lifted endpoint is not within 1e-6 of +I or -I.
    """
    R = loop.samples
    omegas = _principal_log(R[1:] @ np.transpose(R[:-1], (0, 2, 1)))
    coeffs = np.linalg.solve(_lie_algebra_iso(), omegas[:, _UPPER[0], _UPPER[1]].T).T
    steps = expm(np.tensordot(coeffs, _sp2_basis(), axes=1))
    S = np.eye(4, dtype=complex)
    for g in steps:
        S = g @ S
    plus = np.abs(S - np.eye(4)).max()
    minus = np.abs(S + np.eye(4)).max()
    if plus <= TERMINAL_TOL:
        return StableFramingClass(0)
    if minus <= TERMINAL_TOL:
        return StableFramingClass(1)
    raise LiftError(f"lift endpoint is {min(plus, minus):.3g} away from +-I")


def kappa_sum(components: Iterable[StableFramingClass | int]) -> StableFramingClass:
    """Sum in Z2 of the classes of the components of a framed divisor."""
    total = StableFramingClass(0)
    for c in components:
        total = total + c
    return total


# ---------------------------------------------------------------- framed loops


@dataclass(frozen=True, eq=False)
class FramedLoop:
    """Periodic samples of a framed circle in an ambient space R^d.

    Arrays have shapes ``(N, d)``, ``(N, d)``, ``(N, 4, d)`` and ``(N, 5, d)``;
    sample N is understood to equal sample 0.
    """

    points: np.ndarray
    tangent: np.ndarray
    normal_frame: np.ndarray
    ambient_frame: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=float)
        t = np.asarray(self.tangent, dtype=float)
        n = np.asarray(self.normal_frame, dtype=float)
        a = np.asarray(self.ambient_frame, dtype=float)
        if p.ndim != 2 or len(p) < 2:
            raise ValidationError("a framed loop needs at least two samples")
        N, d = p.shape
        if t.shape != (N, d) or n.shape != (N, 4, d) or a.shape != (N, 5, d):
            raise ValidationError("frame arrays do not match the point samples")
        for name, arr in (("points", p), ("tangent", t), ("normal_frame", n), ("ambient_frame", a)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self) -> int:
        return len(self.points)

    def moving_frame(self) -> np.ndarray:
        """The frame (tangent, normal_frame) per sample, shape ``(N, 5, d)``."""
        return np.concatenate([self.tangent[:, None, :], self.normal_frame], axis=1)

    def premultiply(self, A: np.ndarray) -> "FramedLoop":
        """Apply ambient linear maps ``A[k]`` to every vector of sample k."""
        A = np.asarray(A, dtype=float)

        def act(v):
            return np.einsum("kij,k...j->k...i", A, v)

        return FramedLoop(act(self.points), act(self.tangent), act(self.normal_frame), act(self.ambient_frame))

    def to_json(self) -> dict:
        return {
            "samples": [
                {
                    "point": self.points[k].tolist(),
                    "tangent": self.tangent[k].tolist(),
                    "normal": self.normal_frame[k].tolist(),
                    "ambient": self.ambient_frame[k].tolist(),
                }
                for k in range(len(self))
            ]
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> "FramedLoop":
        try:
            if isinstance(doc, str):
                doc = json.loads(doc)
            samples = doc["samples"]
            return cls(
                np.array([s["point"] for s in samples], dtype=float),
                np.array([s["tangent"] for s in samples], dtype=float),
                np.array([s["normal"] for s in samples], dtype=float),
                np.array([s["ambient"] for s in samples], dtype=float),
            )
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise ParseError(f"malformed framed-loop document: {exc}") from exc


def _positive_qr(C: np.ndarray) -> np.ndarray:
    # Gram-Schmidt on the columns in order, i.e. QR with a positive diagonal
    Q, Rm = np.linalg.qr(C)
    return Q * np.sign(np.diag(Rm))


def loop_to_so5(fl: FramedLoop) -> SO5Loop:
    """Change of basis from ambient_frame to (tangent, normal_frame), based at I.

    Raises:
        ValidationError: if the two frames do not span the same oriented space.
        StepBoundError: if consecutive samples are too far apart.
    """
    moving = fl.moving_frame()
    out = np.empty((len(fl) + 1, 5, 5))
    for k in range(len(fl)):
        A = fl.ambient_frame[k].T
        F = moving[k].T
        C, *_ = np.linalg.lstsq(A, F, rcond=None)
        scale = max(np.linalg.norm(F), 1.0)
        if np.linalg.norm(A @ C - F) > 1e-6 * scale:
            raise ValidationError(f"sample {k}: frames span different subspaces")
        det = np.linalg.det(C)
        if abs(det) < 1e-9:
            raise ValidationError(f"sample {k}: singular change of basis")
        if det < 0:
            raise ValidationError(f"sample {k}: frames have opposite orientations")
        out[k] = _positive_qr(C)
    base = out[0].T
    out[:-1] = base @ out[:-1]
    out[0] = np.eye(5)
    out[-1] = np.eye(5)
    return SO5Loop(densify(out))


DENSIFY_LIMIT = 1.0


def densify(samples: np.ndarray) -> np.ndarray:
    """Insert geodesic points wherever a step reaches the step bound.

    Steps of size at least ``DENSIFY_LIMIT`` (rotation angles far from the
    principal range of the logarithm) are left alone, so the loop
    constructor rejects them.
    """
    steps = step_sizes(samples)
    if steps.max() < STEP_BOUND:
        return samples
    out = [samples[0]]
    for k, h in enumerate(steps):
        if STEP_BOUND <= h < DENSIFY_LIMIT:
            omega = _principal_log(samples[k + 1] @ samples[k].T)
            m = math.ceil(2 * h / STEP_BOUND)
            out.extend(expm(omega * (j / m)) @ samples[k] for j in range(1, m))
        out.append(samples[k + 1])
    return np.array(out)


def framed_loop_class(fl: FramedLoop) -> StableFramingClass:
    return spin_lift_class(loop_to_so5(fl))


def sample_loop(fn: Callable[[np.ndarray], np.ndarray], N: int = 64, max_N: int = 1 << 16) -> SO5Loop:
    """Sample ``fn(s)`` (SO(5)-valued on [0, 1]) with N doubled until the step bound holds."""
    while True:
        s = np.arange(N + 1) / N
        R = np.array([fn(t) for t in s])
        R[0] = np.eye(5)
        R[-1] = np.eye(5)
        if step_sizes(R).max() < STEP_BOUND or N >= max_N:
            return SO5Loop(R)
        N *= 2


def random_smooth_loop(rng: np.random.Generator, modes: int = 2, amplitude: float = 0.6, turns: int | None = None) -> Callable[[float], np.ndarray]:
    """A based smooth loop ``s -> exp(Omega(s)) exp(Omega(0))^-1``, optionally times a rotation."""
    coeffs = rng.normal(scale=amplitude, size=(modes, 2, 10))
    turns = int(rng.integers(0, 2)) if turns is None else turns

    def omega(s: float) -> np.ndarray:
        c = sum(coeffs[m, 0] * math.cos(2 * math.pi * (m + 1) * s) + coeffs[m, 1] * math.sin(2 * math.pi * (m + 1) * s) for m in range(modes))
        return so5_from_coords(c)

    base_inv = expm(omega(0.0)).T

    def fn(s: float) -> np.ndarray:
        R = expm(omega(s)) @ base_inv
        if turns:
            t = 2 * math.pi * turns * s
            G = np.eye(5)
            G[3, 3] = G[4, 4] = math.cos(t)
            G[3, 4], G[4, 3] = -math.sin(t), math.sin(t)
            R = R @ G
        return R

    return fn


# ---------------------------------------------------------------- the 5-sphere example
#
# R^6 = C + H with real coordinates (Re z, Im z, w, x, y, z) for q = w + xi + yj + zk.
# In complex coordinates C^3 = (z, a, b) with q = a + b j, a = w + xi, b = y + zi.
# The tangent bundle of S^5 splits as R X + E0, X(p) = i p, and E0 at p is the
# Hermitian complement of p.  Its quaternionic structure uses I = i and the
# antilinear map J_p(v) = conj(p x v) (complex cross product); K = I J.


def _to_c3(v: np.ndarray) -> np.ndarray:
    return np.array([complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5])])


def _to_r6(c: np.ndarray) -> np.ndarray:
    return np.array([c[0].real, c[0].imag, c[1].real, c[1].imag, c[2].real, c[2].imag])


def _J(p: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.conj(np.cross(p, v))


def _quaternionic_frame(p: np.ndarray, s: np.ndarray) -> np.ndarray:
    """(s, Is, Js, Ks) in complex coordinates."""
    js = _J(p, s)
    return np.array([s, 1j * s, js, 1j * js])


def _project_to_fiber(p: np.ndarray, v: np.ndarray) -> np.ndarray:
    return v - np.vdot(p, v) * p


def _quaternion_coords(frame: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.array([np.real(np.vdot(e, v)) for e in frame])


def _act(frame: np.ndarray, h: np.ndarray) -> np.ndarray:
    return np.tensordot(h, frame, axes=1)


def _slerp_to(g: np.ndarray, t: float) -> np.ndarray:
    """Point at time t on the shortest arc from 1 to the unit quaternion g."""
    angle = math.acos(max(-1.0, min(1.0, g[0])))
    if angle < 1e-15:
        return np.array([1.0, 0, 0, 0])
    axis = g[1:] / math.sin(angle)
    return np.concatenate([[math.cos(t * angle)], math.sin(t * angle) * axis])


def example_s5_divisor(N: int = 256, framing: str = "tau") -> FramedLoop:
    """The zero circle L0 = S^1 x 0 of the section (z, q) -> (0, jq) on S^5.

    ``framing="tau"`` uses the normal framing (0, N), N in {1, i, j, k} induced by
    the section.  ``framing="bounding"`` uses the ambient quaternionic frame
    itself as normal framing, which gives the constant loop.

    The ambient frame is (X, s, Is, Js, Ks) where s is propagated along L0 by
    projecting to the next fiber of E0 and normalizing; any closure defect is
    removed by a quaternionic gauge interpolating to the identity.
    """
    if N < 64:
        raise ValidationError("use at least 64 samples")
    if framing not in ("tau", "bounding"):
        raise ValidationError(f"unknown framing {framing!r}")
    theta = 2 * math.pi * np.arange(N) / N
    pts = np.array([[np.exp(1j * t), 0, 0] for t in theta])

    # propagate s by projection and normalization
    s = np.array([0, 1, 0], dtype=complex)
    seeds = []
    for p in pts:
        s = _project_to_fiber(p, s)
        s = s / np.linalg.norm(s)
        seeds.append(s)
    closing = _project_to_fiber(pts[0], seeds[-1])
    closing = closing / np.linalg.norm(closing)
    g = _quaternion_coords(_quaternionic_frame(pts[0], seeds[0]), closing)
    g = g / np.linalg.norm(g)
    if np.linalg.norm(g - np.array([1.0, 0, 0, 0])) > 1e-12:
        # s_N = g s_0; rotate sample k by an arc from 1 towards g^-1
        ginv = g * np.array([1, -1, -1, -1])
        seeds = [
            _act(_quaternionic_frame(p, sk), _slerp_to(ginv, k / N))
            for k, (p, sk) in enumerate(zip(pts, seeds))
        ]

    points, tangent, normal, ambient = [], [], [], []
    tau = np.array([_to_r6(v) for v in np.array([[0, 1, 0], [0, 1j, 0], [0, 0, 1], [0, 0, 1j]])])
    for p, sk in zip(pts, seeds):
        X = _to_r6(1j * p)
        quat = np.array([_to_r6(v) for v in _quaternionic_frame(p, sk)])
        points.append(_to_r6(p))
        tangent.append(X)
        normal.append(tau if framing == "tau" else quat)
        ambient.append(np.vstack([X[None, :], quat]))
    return FramedLoop(np.array(points), np.array(tangent), np.array(normal), np.array(ambient))
