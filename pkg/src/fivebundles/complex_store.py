"""Finite simplicial complexes given by facet lists.

A complex is stored by its facets only.  Lower-dimensional simplices,
face incidences and lookup tables are generated on demand and memoised on
the (immutable) complex object, so repeated queries are cheap.

Every simplex is a strictly increasing tuple of dense vertex indices, and
simplices of each degree are ordered lexicographically.  That ordering is
the coordinate system for every chain and cochain vector in the package.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ComplexError, NonOrientable, ParseError

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure simplicial complex described by its facets.

    Attributes:
        dim: Dimension of every facet.
        vertex_count: Number of vertices; vertices are ``0..vertex_count-1``.
        facets: Facets as strictly increasing tuples, sorted lexicographically.
        labels: Original vertex labels when the input was relabelled, else None.
        name: Optional human-readable name (fixtures set this).
    """

    dim: int
    vertex_count: int
    facets: tuple[Simplex, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        facets = tuple(sorted(tuple(int(v) for v in f) for f in self.facets))
        object.__setattr__(self, "facets", facets)
        if self.dim < 0:
            raise ComplexError("dimension must be nonnegative")
        if not facets:
            raise ComplexError("a complex needs at least one facet")
        seen = set()
        for f in facets:
            if len(f) != self.dim + 1:
                raise ComplexError(f"non-uniform dimension: facet {f} in a {self.dim}-complex")
            if any(b <= a for a, b in zip(f, f[1:])):
                raise ComplexError(f"facet {f} is not strictly increasing")
            if f[0] < 0 or f[-1] >= self.vertex_count:
                raise ComplexError(f"facet {f} has a vertex outside [0, {self.vertex_count})")
        for a, b in zip(facets, facets[1:]):
            if a == b:
                raise ComplexError(f"duplicate facet {a}")
        for f in facets:
            seen.update(f)
        if len(seen) != self.vertex_count:
            missing = min(set(range(self.vertex_count)) - seen)
            raise ComplexError(f"vertex {missing} lies in no facet")
        object.__setattr__(self, "_cache", {})

    # ------------------------------------------------------------------ cache

    def cached(self, key, build: Callable[[], object]):
        """Return the memoised value for ``key``, building it once if absent.

        The fill is idempotent: concurrent builders produce equal values and
        ``dict.setdefault`` keeps the first one.
        """
        cache = self._cache  # type: ignore[attr-defined]
        try:
            return cache[key]
        except KeyError:
            return cache.setdefault(key, build())

    def __getstate__(self):
        state = {k: getattr(self, k) for k in ("dim", "vertex_count", "facets", "labels", "name")}
        return state

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)
        object.__setattr__(self, "_cache", {})

    # ------------------------------------------------------------- simplices

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], name: str | None = None) -> "SimplicialComplex":
        """Build a complex from arbitrary integer facets.

        Facets are sorted and deduplicated; vertex labels with gaps are
        compacted to ``0..n-1`` and the original labels are kept in ``labels``.
        """
        raw = []
        for f in facets:
            t = tuple(int(v) for v in f)
            if len(set(t)) != len(t):
                raise ComplexError(f"duplicate vertex inside facet {t}")
            raw.append(tuple(sorted(t)))
        if not raw:
            raise ComplexError("a complex needs at least one facet")
        lengths = {len(f) for f in raw}
        if len(lengths) != 1:
            raise ComplexError(f"non-uniform dimension: facet sizes {sorted(lengths)}")
        verts = sorted({v for f in raw for v in f})
        labels = None
        if verts != list(range(len(verts))):
            relabel = {v: i for i, v in enumerate(verts)}
            raw = [tuple(relabel[v] for v in f) for f in raw]
            labels = tuple(verts)
        return cls(dim=len(raw[0]) - 1, vertex_count=len(verts), facets=tuple(sorted(set(raw))), labels=labels, name=name)

    def _key_base(self) -> int:
        return max(self.vertex_count, 2)

    def _encode(self, rows: np.ndarray) -> np.ndarray:
        """Encode rows of vertex indices as order-preserving integer keys."""
        base = self._key_base()
        width = rows.shape[1]
        if base ** max(width, 1) < 2**62:
            keys = np.zeros(rows.shape[0], dtype=np.int64)
            for m in range(width):
                keys = keys * base + rows[:, m].astype(np.int64)
            return keys
        keys = np.zeros(rows.shape[0], dtype=object)
        for m in range(width):
            keys = keys * base + rows[:, m].astype(object)
        return keys

    def simplex_array(self, k: int) -> np.ndarray:
        """All k-simplices as an ``(n_k, k+1)`` integer array in lexicographic order."""
        if k < 0 or k > self.dim:
            return np.zeros((0, max(k + 1, 0)), dtype=np.int64)

        def build():
            F = np.asarray(self.facets, dtype=np.int64)
            if k == self.dim:
                return F
            parts = [F[:, list(c)] for c in itertools.combinations(range(self.dim + 1), k + 1)]
            rows = np.concatenate(parts, axis=0)
            _, first = np.unique(self._encode(rows), return_index=True)
            out = rows[first]
            order = np.lexsort(out.T[::-1])
            return np.ascontiguousarray(out[order])

        return self.cached(("simplex_array", k), build)

    def simplex_keys(self, k: int) -> np.ndarray:
        """Sorted integer keys of the k-simplices (aligned with ``simplex_array``)."""
        return self.cached(("simplex_keys", k), lambda: self._encode(self.simplex_array(k)))

    def simplices(self, k: int) -> list[Simplex]:
        """The k-simplices as tuples, lexicographically ordered."""
        return self.cached(("simplices", k), lambda: [tuple(int(v) for v in r) for r in self.simplex_array(k)])

    def count(self, k: int) -> int:
        """Number of k-simplices."""
        return int(self.simplex_array(k).shape[0])

    def lookup(self, k: int, rows: np.ndarray) -> np.ndarray:
        """Indices of the given k-simplices (rows of sorted vertices).

        Raises:
            KeyError: if some row is not a simplex of the complex.
        """
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, k + 1)
        keys = self._encode(rows)
        table = self.simplex_keys(k)
        idx = np.searchsorted(table, keys)
        if len(table) == 0:
            if len(keys):
                raise KeyError(f"no {k}-simplices")
            return idx.astype(np.int64)
        idx = np.minimum(idx, len(table) - 1)
        miss = np.flatnonzero(table[idx] != keys)
        if len(miss):
            bad = rows[int(miss[0])]
            raise KeyError(f"{tuple(int(v) for v in bad)} is not a {k}-simplex")
        return idx.astype(np.int64)

    def index_of(self, simplex: Sequence[int]) -> int:
        """Index of a single simplex within its degree."""
        s = tuple(sorted(simplex))
        return int(self.lookup(len(s) - 1, np.array([s]))[0])

    def faces(self, k: int) -> np.ndarray:
        """Face incidence table for degree ``k >= 1``.

        Returns an ``(n_k, k+1)`` array whose entry ``[s, i]`` is the index of
        the (k-1)-face of simplex ``s`` obtained by deleting its i-th vertex.
        """

        def build():
            S = self.simplex_array(k)
            out = np.empty(S.shape, dtype=np.int64)
            for i in range(k + 1):
                out[:, i] = self.lookup(k - 1, np.delete(S, i, axis=1))
            return out

        return self.cached(("faces", k), build)

    def subface_index(self, k: int, positions: tuple[int, ...]) -> np.ndarray:
        """For every k-simplex, the index of its face spanned by the given vertex positions."""
        positions = tuple(positions)

        def build():
            S = self.simplex_array(k)
            return self.lookup(len(positions) - 1, S[:, list(positions)])

        return self.cached(("subface", k, positions), build)

    def f_vector(self) -> tuple[int, ...]:
        """Simplex counts in degrees 0..dim."""
        return tuple(self.count(k) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        """Alternating sum of the f-vector."""
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<SimplicialComplex{tag} dim={self.dim} vertices={self.vertex_count} facets={len(self.facets)}>"


@dataclass(frozen=True)
class OrientedComplex:
    """A complex together with a coherent choice of facet signs.

    Attributes:
        base: The underlying complex.
        facet_signs: One entry in {+1, -1} per facet, aligned with ``base.facets``.
    """

    base: SimplicialComplex
    facet_signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.facet_signs) != len(self.base.facets):
            raise ComplexError("need one sign per facet")
        if any(s not in (1, -1) for s in self.facet_signs):
            raise ComplexError("facet signs must be +1 or -1")

    @property
    def dim(self) -> int:
        return self.base.dim


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the structural checks run by :func:`validate`.

    Attributes:
        is_pure: All facets have the same dimension.
        is_closed_pseudomanifold: Every ridge lies in exactly two facets.
        is_connected: The 1-skeleton is connected.
        is_orientable: Sign propagation across shared ridges is consistent.
        failures: ``(check, witness simplex)`` for every failed check.
    """

    is_pure: bool
    is_closed_pseudomanifold: bool
    is_connected: bool
    is_orientable: bool
    failures: tuple[tuple[str, Simplex], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def _ridge_incidence(K: SimplicialComplex) -> tuple[np.ndarray, np.ndarray]:
    """Ridge index per (facet, deleted position) and facet count per ridge."""
    if K.dim == 0:
        table = np.zeros((len(K.facets), 1), dtype=np.int64)
        return table, np.array([len(K.facets)])
    table = K.faces(K.dim)
    return table, np.bincount(table.ravel(), minlength=K.count(K.dim - 1))


def _propagate_signs(K: SimplicialComplex) -> tuple[np.ndarray | None, Simplex | None]:
    """Propagate facet orientations across ridges shared by two facets.

    Returns the sign vector, or None and a witness ridge on contradiction.
    The lexicographically first facet of each component receives +1.
    """
    nf = len(K.facets)
    table, counts = _ridge_incidence(K)
    if K.dim == 0:
        return np.ones(nf, dtype=np.int64), None
    over = np.flatnonzero(counts > 2)
    if len(over):
        return None, K.simplices(K.dim - 1)[int(over[0])]
    owners: dict[int, list[tuple[int, int]]] = {}
    for f in range(nf):
        for i in range(K.dim + 1):
            owners.setdefault(int(table[f, i]), []).append((f, i))
    signs = np.zeros(nf, dtype=np.int64)
    for start in range(nf):
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for i in range(K.dim + 1):
                pair = owners[int(table[f, i])]
                if len(pair) != 2:
                    continue
                g, j = pair[1] if pair[0][0] == f else pair[0]
                want = -signs[f] * (-1) ** (i + j)
                if signs[g] == 0:
                    signs[g] = want
                    queue.append(g)
                elif signs[g] != want:
                    return None, K.simplices(K.dim - 1)[int(table[f, i])]
    return signs, None


def _components(K: SimplicialComplex) -> int:
    F = np.asarray(K.facets, dtype=np.int64)
    if K.dim == 0:
        return K.vertex_count
    rows = np.repeat(F[:, 0], K.dim)
    cols = F[:, 1:].ravel()
    g = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(K.vertex_count, K.vertex_count))
    n, _ = connected_components(g, directed=False)
    return int(n)


def validate(K: SimplicialComplex) -> ValidationReport:
    """Check purity, the closed-pseudomanifold property, connectivity and orientability."""
    failures: list[tuple[str, Simplex]] = []
    table, counts = _ridge_incidence(K)
    bad = np.flatnonzero(counts != 2)
    closed = len(bad) == 0
    if not closed:
        ridge = () if K.dim == 0 else K.simplices(K.dim - 1)[int(bad[0])]
        failures.append(("closed_pseudomanifold", ridge))
    connected = _components(K) == 1
    if not connected:
        failures.append(("connected", K.facets[-1]))
    signs, witness = _propagate_signs(K)
    orientable = signs is not None
    if not orientable:
        failures.append(("orientable", witness or ()))
    return ValidationReport(
        is_pure=True,
        is_closed_pseudomanifold=closed,
        is_connected=connected,
        is_orientable=orientable,
        failures=tuple(failures),
    )


def orient(K: SimplicialComplex) -> OrientedComplex:
    """Choose coherent facet signs; the first facet gets +1.

    Raises:
        ComplexError: if K is not a connected closed pseudomanifold.
        NonOrientable: if sign propagation hits a contradiction.
    """
    cached = K.cached(("orient",), lambda: _orient_uncached(K))
    if isinstance(cached, Exception):
        raise cached
    return cached


def _orient_uncached(K: SimplicialComplex):
    report = validate(K)
    if not report.is_closed_pseudomanifold:
        return ComplexError(f"not a closed pseudomanifold (ridge {report.failures[0][1]})")
    if not report.is_connected:
        return ComplexError("complex is not connected")
    signs, witness = _propagate_signs(K)
    if signs is None:
        return NonOrientable(f"orientation contradiction at ridge {witness}", witness)
    return OrientedComplex(base=K, facet_signs=tuple(int(s) for s in signs))


# ---------------------------------------------------------------- products


def _staircases(p: int, q: int) -> list[tuple[tuple[int, int], ...]]:
    """Monotone lattice paths from (0,0) to (p,q) as vertex sequences."""
    paths = []
    for ups in itertools.combinations(range(p + q), q):
        a = b = 0
        path = [(0, 0)]
        for step in range(p + q):
            if step in ups:
                b += 1
            else:
                a += 1
            path.append((a, b))
        paths.append(tuple(path))
    return paths


def product_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of ``|K| x |L|``.

    The vertex ``(a, b)`` becomes ``a * L.vertex_count + b``, so the vertex
    order is lexicographic in pairs and every staircase simplex is increasing.
    """
    paths = _staircases(K.dim, L.dim)
    nL = L.vertex_count
    facets = set()
    for s in K.facets:
        for t in L.facets:
            for path in paths:
                facets.add(tuple(s[a] * nL + t[b] for a, b in path))
    name = f"{K.name}x{L.name}" if K.name and L.name else None
    return SimplicialComplex(dim=K.dim + L.dim, vertex_count=K.vertex_count * nL, facets=tuple(facets), name=name)


# ------------------------------------------------------------------ format


def parse_complex(text: str) -> SimplicialComplex:
    """Parse ``.scx`` text: ``#`` comments, one ``dim D`` line, then ``f v0 .. vD`` lines.

    Raises:
        ParseError: with the offending line number on syntax errors.
        ComplexError: on non-uniform dimension or repeated vertices in a facet.
    """
    dim = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "dim":
            if dim is not None:
                raise ParseError("repeated dim line", lineno)
            if len(parts) != 2:
                raise ParseError("expected 'dim D'", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", lineno) from None
            if dim < 0:
                raise ParseError("dimension must be nonnegative", lineno)
        elif parts[0] == "f":
            if dim is None:
                raise ParseError("facet before dim line", lineno)
            try:
                verts = [int(v) for v in parts[1:]]
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
            if any(v < 0 for v in verts):
                raise ParseError("vertex indices must be nonnegative", lineno)
            if len(verts) != dim + 1:
                raise ComplexError(f"non-uniform dimension: line {lineno} has {len(verts)} vertices, dim {dim} needs {dim + 1}")
            if len(set(verts)) != len(verts):
                raise ComplexError(f"duplicate vertex inside facet on line {lineno}")
            facets.append(verts)
        else:
            raise ParseError(f"unrecognised record {parts[0]!r}", lineno)
    if dim is None:
        raise ParseError("missing dim line")
    if not facets:
        raise ParseError("no facets")
    return SimplicialComplex.from_facets(facets)


def serialize_complex(K: SimplicialComplex) -> str:
    """Render K as ``.scx`` text with facets in lexicographic order."""
    lines = []
    if K.name:
        lines.append(f"# {K.name}")
    lines.append(f"dim {K.dim}")
    lines.extend("f " + " ".join(str(v) for v in f) for f in K.facets)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- fixtures


def simplex_boundary(n: int, name: str | None = None) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    if n < 1:
        raise ComplexError("simplex boundary needs n >= 1")
    facets = tuple(itertools.combinations(range(n + 1), n))
    return SimplicialComplex(dim=n - 1, vertex_count=n + 1, facets=facets, name=name)


def circle(m: int) -> SimplicialComplex:
    """The m-gon, m >= 3."""
    if m < 3:
        raise ComplexError("a simplicial circle needs at least 3 vertices")
    facets = tuple(tuple(sorted((i, (i + 1) % m))) for i in range(m))
    return SimplicialComplex(dim=1, vertex_count=m, facets=facets, name=f"circle({m})")


def sphere(n: int) -> SimplicialComplex:
    """The n-sphere as the boundary of the (n+1)-simplex."""
    return simplex_boundary(n + 1, name=f"sphere({n})")


# Nine-vertex complex projective plane: a closed 4-pseudomanifold with
# f-vector (9, 36, 84, 90, 36) invariant under a group of order 54 acting on
# the affine plane over F_3; vertex v corresponds to (v // 3, v % 3).
_CP2_FACETS = (
    (0, 1, 2, 3, 6), (0, 1, 2, 3, 8), (0, 1, 2, 4, 6), (0, 1, 2, 4, 7), (0, 1, 2, 5, 7), (0, 1, 2, 5, 8),
    (0, 1, 3, 6, 8), (0, 1, 4, 5, 6), (0, 1, 4, 5, 7), (0, 1, 5, 6, 8), (0, 2, 3, 4, 6), (0, 2, 3, 4, 8),
    (0, 2, 4, 7, 8), (0, 2, 5, 7, 8), (0, 3, 4, 5, 6), (0, 3, 4, 5, 7), (0, 3, 4, 7, 8), (0, 3, 5, 6, 7),
    (0, 3, 6, 7, 8), (0, 5, 6, 7, 8), (1, 2, 3, 5, 7), (1, 2, 3, 5, 8), (1, 2, 3, 6, 7), (1, 2, 4, 6, 7),
    (1, 3, 4, 5, 7), (1, 3, 4, 5, 8), (1, 3, 4, 7, 8), (1, 3, 6, 7, 8), (1, 4, 5, 6, 8), (1, 4, 6, 7, 8),
    (2, 3, 4, 5, 6), (2, 3, 4, 5, 8), (2, 3, 5, 6, 7), (2, 4, 5, 6, 8), (2, 4, 6, 7, 8), (2, 5, 6, 7, 8),
)


@dataclass(frozen=True)
class ProjectiveCover:
    """The antipodal double cover used to build the projective fixtures.

    Attributes:
        sphere: Barycentric subdivision of the cross-polytope boundary.
        quotient: The projective space it covers.
        vertex_map: ``vertex_map[v]`` is the image in ``quotient`` of sphere vertex v.
        antipode: ``antipode[v]`` is the sphere vertex opposite to v.
    """

    sphere: SimplicialComplex
    quotient: SimplicialComplex
    vertex_map: tuple[int, ...]
    antipode: tuple[int, ...]


def projective_cover(n: int) -> ProjectiveCover:
    """Build RP^{n-1} from the boundary of the n-dimensional cross-polytope.

    Sphere vertices are the proper faces of the cross-polytope, encoded as
    sorted tuples of signed coordinates ``(i, +-1)``; facets are maximal
    flags.  The antipodal map negates signs.  The construction asserts that
    the action is free on simplices and that each quotient facet has exactly
    two preimages.
    """
    if n < 2:
        raise ComplexError("cross-polytope dimension must be at least 2")
    faces = sorted(
        tuple(zip(coords, signs))
        for size in range(1, n + 1)
        for coords in itertools.combinations(range(n), size)
        for signs in itertools.product((-1, 1), repeat=size)
    )
    vid = {f: i for i, f in enumerate(faces)}
    antipode = tuple(vid[tuple((i, -s) for i, s in f)] for f in faces)

    def canon(f):
        return min(f, tuple((i, -s) for i, s in f))

    classes = sorted({canon(f) for f in faces})
    qid = {c: i for i, c in enumerate(classes)}
    vertex_map = tuple(qid[canon(f)] for f in faces)

    sphere_facets = []
    for signs in itertools.product((-1, 1), repeat=n):
        for perm in itertools.permutations(range(n)):
            flag = (tuple(sorted((j, signs[j]) for j in perm[: m + 1])) for m in range(n))
            sphere_facets.append(tuple(sorted(vid[f] for f in flag)))
    preimages: dict[Simplex, int] = {}
    for f in sphere_facets:
        if tuple(sorted(antipode[v] for v in f)) == f:
            raise ComplexError("antipodal action fixes a facet")
        image = tuple(sorted(vertex_map[v] for v in f))
        if len(set(image)) != len(image):
            raise ComplexError("quotient map collapses a facet")
        preimages[image] = preimages.get(image, 0) + 1
    if any(c != 2 for c in preimages.values()):
        raise ComplexError("quotient facet without exactly two preimages")
    S = SimplicialComplex(dim=n - 1, vertex_count=len(faces), facets=tuple(sphere_facets), name=f"sd_cross({n})")
    Q = SimplicialComplex(dim=n - 1, vertex_count=len(classes), facets=tuple(preimages), name=f"rp{n - 1}")
    return ProjectiveCover(sphere=S, quotient=Q, vertex_map=vertex_map, antipode=antipode)


_FIXTURE_NAMES = ("s5", "s1xs4", "s2xs3", "cp2", "rp4", "rp5", "circle(m)", "sphere(n)")


def fixture_names() -> tuple[str, ...]:
    """Names accepted by :func:`fixture` (parametrised ones shown with a placeholder)."""
    return _FIXTURE_NAMES


def _build_fixture(name: str) -> SimplicialComplex:
    if name == "s5":
        return simplex_boundary(6, name="s5")
    if name == "s1xs4":
        return _renamed(product_complex(circle(3), simplex_boundary(5)), "s1xs4")
    if name == "s2xs3":
        return _renamed(product_complex(simplex_boundary(3), simplex_boundary(4)), "s2xs3")
    if name == "cp2":
        return SimplicialComplex(dim=4, vertex_count=9, facets=_CP2_FACETS, name="cp2")
    if name == "rp4":
        return projective_cover(5).quotient
    if name == "rp5":
        return projective_cover(6).quotient
    m = re.fullmatch(r"(circle|sphere)\((\d+)\)", name)
    if m:
        n = int(m.group(2))
        return circle(n) if m.group(1) == "circle" else sphere(n)
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_FIXTURE_NAMES)}")


def _renamed(K: SimplicialComplex, name: str) -> SimplicialComplex:
    return SimplicialComplex(dim=K.dim, vertex_count=K.vertex_count, facets=K.facets, labels=K.labels, name=name)


_FIXTURE_CACHE: dict[str, SimplicialComplex] = {}


def fixture(name: str) -> SimplicialComplex:
    """Return a named fixture complex (built once per process).

    Raises:
        KeyError: for an unknown name.
    """
    name = name.strip().lower().replace(" ", "")
    try:
        return _FIXTURE_CACHE[name]
    except KeyError:
        return _FIXTURE_CACHE.setdefault(name, _build_fixture(name))


def binomial_f_vector(n: int) -> tuple[int, ...]:
    """f-vector of the boundary of the n-simplex."""
    return tuple(comb(n + 1, k + 1) for k in range(n))
