"""Cup and cup-1 products, Sq^1, Sq^2 and the Pontryagin square.

Products use the Alexander-Whitney front/back faces.  The cup-1 product is
Steenrod's interval formula: for u of degree p, v of degree q and an
n-simplex (n = p + q - 1),

    (u cup_1 v)(0..n) = sum_{i=0}^{n-q} (-1)^{i(q+1)} u(0..i, i+q..n) v(i..i+q).

With that sign the integral coboundary identity reads

    d(u cup_1 v) = (-1)^{(p+1)q+1} u cup v + (-1)^q v cup u
                   + (-1)^{q+1} du cup_1 v + u cup_1 dv,

which reduces mod 2 to the symmetric identity.
"""

from __future__ import annotations

import numpy as np

from .cohomology import CohomologyClass, Cochain, Ring, bockstein_sq1, coboundary_values
from .errors import RingMismatch, ValidationError


def _result(u: Cochain, v: Cochain | None, degree: int, values: np.ndarray) -> Cochain:
    classes = isinstance(u, CohomologyClass) and (v is None or isinstance(v, CohomologyClass))
    cls = CohomologyClass if classes else Cochain
    return cls(u.complex, degree, u.ring, values)


def _check_pair(u: Cochain, v: Cochain):
    if u.complex is not v.complex and u.complex != v.complex:
        raise RingMismatch("cochains live on different complexes")
    if u.ring != v.ring:
        raise RingMismatch(f"ring mismatch: {u.ring} vs {v.ring}")


def cup(u: Cochain, v: Cochain) -> Cochain:
    """Alexander-Whitney cup product ``(u cup v)(0..n) = u(0..p) v(p..n)``."""
    _check_pair(u, v)
    K, p, q = u.complex, u.degree, v.degree
    n = p + q
    if n > K.dim:
        return _result(u, v, n, np.zeros(0, dtype=np.int64))
    front = K.subface_index(n, tuple(range(p + 1)))
    back = K.subface_index(n, tuple(range(p, n + 1)))
    return _result(u, v, n, u.values[front] * v.values[back])


def cup1_sign(i: int, q: int) -> int:
    """Sign of the i-th interval term of a cup-1 product with a degree-q right factor."""
    return -1 if (i * (q + 1)) % 2 else 1


def cup1(u: Cochain, v: Cochain) -> Cochain:
    """Steenrod's cup-1 product (degree p + q - 1)."""
    _check_pair(u, v)
    K, p, q = u.complex, u.degree, v.degree
    n = p + q - 1
    if n < 0:
        raise ValidationError("cup-1 needs total degree at least 1")
    if n > K.dim:
        return _result(u, v, n, np.zeros(0, dtype=np.int64))
    out = np.zeros(K.count(n), dtype=np.int64)
    for i in range(0, n - q + 1):
        outer = K.subface_index(n, tuple(range(i + 1)) + tuple(range(i + q, n + 1)))
        inner = K.subface_index(n, tuple(range(i, i + q + 1)))
        out += cup1_sign(i, q) * u.values[outer] * v.values[inner]
    return _result(u, v, n, out)


def sq2(c: Cochain) -> Cochain:
    """Sq^2 on mod-2 classes of degree 2 (cup square) or 3 (cup-1 square)."""
    if c.ring is not Ring.Z2:
        raise RingMismatch("Sq^2 acts on mod-2 classes")
    if c.degree == 2:
        return cup(c, c)
    if c.degree == 3:
        return cup1(c, c)
    raise ValidationError(f"Sq^2 is provided on degrees 2 and 3 only, got {c.degree}")


def sq(i: int, c: Cochain) -> Cochain:
    """Sq^i for the cases reachable here: Sq^0, Sq^1, Sq^2 and Sq^k on degree k.

    Uses Sq^i = 0 above the degree and above the dimension of the complex,
    Sq^k(x) = x cup x in degree k, the
    Bockstein for Sq^1 and the cup-1 square for Sq^2 in degree 3.
    """
    if c.ring is not Ring.Z2:
        raise RingMismatch("Steenrod squares act on mod-2 classes")
    k = c.degree
    if i == 0:
        return c
    if i > k or k + i > c.complex.dim:
        return _result(c, None, k + i, np.zeros(c.complex.count(k + i), dtype=np.int64))
    if i == k:
        return cup(c, c)
    if i == 1:
        return bockstein_sq1(c)
    if i == 2 and k == 3:
        return cup1(c, c)
    raise ValidationError(f"Sq^{i} on degree {k} is outside the supported range")


def pontryagin_square(a: Cochain) -> Cochain:
    """Pontryagin square of a mod-2 2-cocycle, as a mod-4 4-cocycle.

    Uses the lift with entries in {0, 1}: ``P(a) = A cup A + A cup_1 dA``
    reduced mod 4.  Since dA is even, the result is a mod-4 cocycle.
    """
    if a.ring is not Ring.Z2 or a.degree != 2:
        raise ValidationError("the Pontryagin square takes a mod-2 class of degree 2")
    K = a.complex
    lift = Cochain(K, 2, Ring.Z, a.values)
    dlift = Cochain(K, 3, Ring.Z, coboundary_values(K, 2, a.values, 0))
    if np.any(dlift.values % 2):
        raise ValidationError("input is not a mod-2 cocycle")
    total = cup(lift, lift).values + cup1(lift, dlift).values
    cls = CohomologyClass if isinstance(a, CohomologyClass) else Cochain
    return cls(K, 4, Ring.Z4, total)
