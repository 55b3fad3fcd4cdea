"""Exact sparse linear algebra over Z, Z/2, Z/4 and Q.

Integer entries are Python ints throughout, so there is no overflow however
large intermediate Smith-form entries become.  Mod-2 work uses sets of
indices as sparse bit vectors and mod-4 work uses a Howell-style echelon
(pivots with leading entry 2 also store their double), because Z/4 is a
chain ring rather than a field.
"""

from __future__ import annotations

import heapq
from math import gcd
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NoSolution, ValidationError

# ----------------------------------------------------------------- matrices


class IntMatrix:
    """Immutable sparse integer matrix.

    Args:
        rows: Number of rows.
        cols: Number of columns.
        entries: Mapping ``(row, col) -> value``; zero values are dropped.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValidationError("matrix dimensions must be nonnegative")
        clean: dict[tuple[int, int], int] = {}
        for (r, c), v in (entries or {}).items():
            r, c, v = int(r), int(c), int(v)
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValidationError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]] | np.ndarray) -> "IntMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(i, j): int(v) for i, row in enumerate(data) for j, v in enumerate(row) if int(v)}
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, int]]) -> "IntMatrix":
        entries = {(i, j): v for j, col in enumerate(columns) for i, v in col.items()}
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (r, c), v in self._entries.items():
            out.setdefault(r, {})[c] = v
        return out

    def col_dicts(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (r, c), v in self._entries.items():
            out.setdefault(c, {})[r] = v
        return out

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValidationError("shape mismatch in product")
            right = other.row_dicts()
            acc: dict[tuple[int, int], int] = {}
            for (r, k), v in self._entries.items():
                for c, w in right.get(k, {}).items():
                    acc[(r, c)] = acc.get((r, c), 0) + v * w
            return IntMatrix(self.rows, other.cols, acc)
        vec = [int(x) for x in other]
        if len(vec) != self.cols:
            raise ValidationError("shape mismatch in matrix-vector product")
        out = [0] * self.rows
        for (r, c), v in self._entries.items():
            out[r] += v * vec[c]
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self._entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``U A V = D``.

    Attributes:
        U: Unimodular row transform.
        D: Diagonal matrix with the invariant factors.
        V: Unimodular column transform.
        diagonal: The nonzero invariant factors ``d_1 | d_2 | ...`` (length = rank).
        U_inv: Inverse of ``U``; its columns give a basis adapted to the image of A.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    diagonal: tuple[int, ...]
    U_inv: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)


# ------------------------------------------------------- sparse elimination


class _Eliminator:
    """Sparse integer elimination on a row-dict matrix with optional transforms.

    Row operations act on ``U`` (as rows) and inversely on ``U_inv`` (as
    columns); column operations act on ``V`` (as columns).
    """

    def __init__(self, rows: int, cols: int, row_data: dict[int, dict[int, int]], track: bool):
        self.m, self.n = rows, cols
        self.R = {r: dict(d) for r, d in row_data.items() if d}
        self.C: dict[int, set[int]] = {}
        for r, d in self.R.items():
            for c in d:
                self.C.setdefault(c, set()).add(r)
        self.track = track
        if track:
            self.U = {r: {r: 1} for r in range(rows)}
            self.Uinv = {r: {r: 1} for r in range(rows)}
            self.V = {c: {c: 1} for c in range(cols)}
        self.pivots: list[tuple[int, int, int]] = []

    # elementary operations -------------------------------------------------

    def row_axpy(self, r: int, f: int, i: int):
        """row_r -= f * row_i."""
        if not f:
            return
        row = self.R.setdefault(r, {})
        for c, val in self.R.get(i, {}).items():
            nv = row.get(c, 0) - f * val
            if nv:
                if c not in row:
                    self.C.setdefault(c, set()).add(r)
                row[c] = nv
            else:
                row.pop(c, None)
                self.C[c].discard(r)
        if not row:
            del self.R[r]
        if self.track:
            _axpy(self.U[r], -f, self.U[i])
            _axpy(self.Uinv[i], f, self.Uinv[r])

    def row_scale_neg(self, i: int):
        row = self.R.get(i, {})
        for c in row:
            row[c] = -row[c]
        if self.track:
            for c in self.U[i]:
                self.U[i][c] = -self.U[i][c]
            for c in self.Uinv[i]:
                self.Uinv[i][c] = -self.Uinv[i][c]

    def col_axpy(self, c: int, g: int, j: int):
        """col_c -= g * col_j."""
        if not g:
            return
        for r in list(self.C.get(j, ())):
            row = self.R[r]
            nv = row.get(c, 0) - g * row[j]
            if nv:
                if c not in row:
                    self.C.setdefault(c, set()).add(r)
                row[c] = nv
            else:
                row.pop(c, None)
                self.C[c].discard(r)
                if not row:
                    del self.R[r]
        if self.track:
            _axpy(self.V[c], -g, self.V[j])

    def retire(self, i: int, j: int):
        """Record the pivot at (i, j) once row i and column j are otherwise clear."""
        p = self.R[i][j]
        if p < 0:
            self.row_scale_neg(i)
            p = -p
        del self.R[i]
        self.C[j].discard(i)
        self.pivots.append((i, j, p))

    def clear_unit_pivot(self, i: int, j: int):
        p = self.R[i][j]
        for r in list(self.C[j]):
            if r != i:
                self.row_axpy(r, self.R[r][j] * p, i)
        if self.track:
            for c in list(self.R[i]):
                if c != j:
                    self.col_axpy(c, self.R[i][c] * p, j)
        else:
            for c in self.R[i]:
                if c != j:
                    self.C[c].discard(i)
            self.R[i] = {j: p}
        self.retire(i, j)

    # strategies ------------------------------------------------------------

    def lex_unit_phase(self):
        """Pivot on units, always taking the lexicographically first (row, col)."""
        heap = list(self.R)
        heapq.heapify(heap)
        queued = set(heap)
        while heap:
            i = heapq.heappop(heap)
            queued.discard(i)
            row = self.R.get(i)
            if not row:
                continue
            units = [c for c, v in row.items() if v == 1 or v == -1]
            if not units:
                continue
            j = min(units)
            touched = [r for r in self.C[j] if r != i]
            self.clear_unit_pivot(i, j)
            for r in touched:
                if r in self.R and r not in queued:
                    heapq.heappush(heap, r)
                    queued.add(r)

    def markowitz_unit_phase(self):
        """Pivot on units in sparse columns first (diagonal-only fast path)."""
        heap = [(len(rs), c) for c, rs in self.C.items()]
        heapq.heapify(heap)
        done: set[int] = set()
        while heap:
            n, j = heapq.heappop(heap)
            if j in done:
                continue
            rows = self.C.get(j, ())
            if n != len(rows):
                heapq.heappush(heap, (len(rows), j))
                continue
            if n == 0:
                continue
            best = None
            for r in rows:
                v = self.R[r][j]
                if v == 1 or v == -1:
                    key = (len(self.R[r]), r)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            i = best[1]
            cols = [c for c in self.R[i] if c != j]
            self.clear_unit_pivot(i, j)
            done.add(j)
            for c in cols:
                heapq.heappush(heap, (len(self.C[c]), c))

    def general_phase(self):
        """Finish with min-|value| pivots (ties broken by (row, col)) and divisibility fixes."""
        while self.R:
            i, j = min(((r, c) for r, d in self.R.items() for c in d), key=lambda rc: (abs(self.R[rc[0]][rc[1]]), rc))
            p = self.R[i][j]
            if self._reduce_cross(i, j, p):
                continue
            bad = next((r for r, d in sorted(self.R.items()) if r != i and any(v % p for v in d.values())), None)
            if bad is not None:
                self.row_axpy(i, -1, bad)
                continue
            self.retire(i, j)

    def _reduce_cross(self, i: int, j: int, p: int) -> bool:
        """Euclid step on row i and column j; True if a smaller remainder appeared."""
        for r in sorted(self.C[j] - {i}):
            self.row_axpy(r, self.R[r][j] // p, i)
            if self.R.get(r, {}).get(j):
                return True
        for c in sorted(set(self.R[i]) - {j}):
            self.col_axpy(c, self.R[i][c] // p, j)
            if self.R[i].get(c):
                return True
        return False


def _axpy(target: dict[int, int], f: int, source: Mapping[int, int]):
    """target += f * source, in place, dropping zeros."""
    for k, v in source.items():
        nv = target.get(k, 0) + f * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen by minimal absolute value, ties broken by (row, col),
    so the output is deterministic.  Units are eliminated sparsely first;
    the non-unit remainder is finished with Euclidean reduction.
    """
    E = _Eliminator(A.rows, A.cols, A.row_dicts(), track=True)
    E.lex_unit_phase()
    E.general_phase()
    prow = [i for i, _, _ in E.pivots]
    pcol = [j for _, j, _ in E.pivots]
    used_r, used_c = set(prow), set(pcol)
    row_order = prow + [r for r in range(A.rows) if r not in used_r]
    col_order = pcol + [c for c in range(A.cols) if c not in used_c]
    U = IntMatrix(A.rows, A.rows, {(t, c): v for t, r in enumerate(row_order) for c, v in E.U[r].items()})
    Uinv = IntMatrix(A.rows, A.rows, {(r, t): v for t, c0 in enumerate(row_order) for r, v in E.Uinv[c0].items()})
    V = IntMatrix(A.cols, A.cols, {(r, t): v for t, c0 in enumerate(col_order) for r, v in E.V[c0].items()})
    diag = tuple(p for _, _, p in E.pivots)
    D = IntMatrix(A.rows, A.cols, {(t, t): d for t, d in enumerate(diag)})
    return SnfResult(U=U, D=D, V=V, diagonal=diag, U_inv=Uinv)


def smith_diagonal(A: IntMatrix | Sequence[Mapping[int, int]], rows: int | None = None) -> tuple[int, ...]:
    """Invariant factors only, using a fill-reducing pivot order.

    Accepts an IntMatrix or a list of sparse columns (``{row: value}``),
    the latter avoiding an intermediate copy for large boundary matrices.
    The result is the unique invariant-factor sequence, identical to
    ``smith_normal_form(A).diagonal``.
    """
    if isinstance(A, IntMatrix):
        row_data = A.row_dicts()
        m, n = A.rows, A.cols
    else:
        row_data = {}
        for j, col in enumerate(A):
            for i, v in col.items():
                v = int(v)
                if v:
                    row_data.setdefault(i, {})[j] = v
        n = len(A)
        m = rows if rows is not None else (max(row_data) + 1 if row_data else 0)
    E = _Eliminator(m, n, row_data, track=False)
    E.markowitz_unit_phase()
    E.general_phase()
    return tuple(sorted(p for _, _, p in E.pivots))


# ------------------------------------------------------------ mod-2 echelon


class GF2Echelon:
    """Incremental mod-2 echelon basis keyed by the highest nonzero index.

    Vectors are sets of indices.  Each stored pivot vector carries a tag
    (also a set) recording which inserted vectors it combines.
    """

    def __init__(self):
        self.table: dict[int, tuple[set[int], set[int]]] = {}

    def __len__(self) -> int:
        return len(self.table)

    def reduce(self, vec: Iterable[int], tag: Iterable[int] = ()) -> tuple[set[int], set[int]]:
        """Reduce ``vec`` by the stored pivots; returns (residual, tag)."""
        v = set(vec)
        t = set(tag)
        table = self.table
        while v:
            m = max(v)
            hit = table.get(m)
            if hit is None:
                break
            v ^= hit[0]
            t ^= hit[1]
        return v, t

    def reduce_fully(self, vec: Iterable[int], tag: Iterable[int] = ()) -> tuple[set[int], set[int]]:
        """Reduce every reducible position, not only the leading one."""
        v = set(vec)
        t = set(tag)
        table = self.table
        done: set[int] = set()
        while True:
            cand = [i for i in v if i in table and i not in done]
            if not cand:
                break
            m = max(cand)
            if m in v:
                pv, pt = table[m]
                v ^= pv
                t ^= pt
            done.add(m)
        return v, t

    def insert(self, vec: Iterable[int], tag: Iterable[int] = ()) -> int | None:
        """Insert a vector; returns the new pivot index, or None if dependent."""
        v, t = self.reduce(vec, tag)
        if not v:
            return None
        m = max(v)
        self.table[m] = (v, t)
        return m

    def contains(self, vec: Iterable[int]) -> bool:
        return not self.reduce(vec)[0]


# ------------------------------------------------------------ mod-4 echelon


class Z4Echelon:
    """Howell-style echelon for submodules of (Z/4)^n.

    Vectors are dicts ``index -> value in {1,2,3}``.  When a pivot has
    leading entry 2, twice the vector (which has a lower leading index) is
    inserted as well, so reduction to zero decides membership exactly.
    Tags are dicts tracking integer combinations of inserted vectors.
    """

    def __init__(self):
        self.table: dict[int, tuple[dict[int, int], dict[int, int]]] = {}

    def __len__(self) -> int:
        return len(self.table)

    def reduce(self, vec: Mapping[int, int], tag: Mapping[int, int] | None = None):
        v = {i: x % 4 for i, x in vec.items() if x % 4}
        t = {i: x % 4 for i, x in (tag or {}).items() if x % 4}
        table = self.table
        while v:
            m = max(v)
            hit = table.get(m)
            if hit is None:
                break
            pv, pt = hit
            a, b = v[m], pv[m]
            if b % 2:
                f = (a * b) % 4
            elif a % 2 == 0:
                f = 1
            else:
                break
            _sub_mod4(v, f, pv)
            _sub_mod4(t, f, pt)
        return v, t

    def insert(self, vec: Mapping[int, int], tag: Mapping[int, int] | None = None) -> int:
        """Insert a vector; returns the number of new pivots created."""
        created = 0
        stack = [(dict(vec), dict(tag or {}))]
        table = self.table
        while stack:
            v, t = stack.pop()
            v = {i: x % 4 for i, x in v.items() if x % 4}
            t = {i: x % 4 for i, x in t.items() if x % 4}
            while v:
                m = max(v)
                hit = table.get(m)
                if hit is None:
                    table[m] = (v, t)
                    created += 1
                    if v[m] == 2:
                        stack.append(({i: 2 * x for i, x in v.items()}, {i: 2 * x for i, x in t.items()}))
                    break
                pv, pt = hit
                a, b = v[m], pv[m]
                if b % 2:
                    f = (a * b) % 4
                elif a % 2 == 0:
                    f = 1
                else:
                    table[m] = (v, t)
                    v, t = dict(pv), dict(pt)
                    pv, pt = table[m]
                    a, b = v[m], pv[m]
                    f = (a * b) % 4
                _sub_mod4(v, f, pv)
                _sub_mod4(t, f, pt)
        return created

    def contains(self, vec: Mapping[int, int]) -> bool:
        return not self.reduce(vec)[0]

    def order(self) -> int:
        """Cardinality of the spanned submodule (product of pivot-entry orders)."""
        out = 1
        for m, (v, _) in self.table.items():
            out *= 4 if v[m] % 2 else 2
        return out


def _sub_mod4(v: dict[int, int], f: int, p: Mapping[int, int]):
    """v -= f * p (mod 4), in place."""
    for i, x in p.items():
        y = (v.get(i, 0) - f * x) % 4
        if y:
            v[i] = y
        else:
            v.pop(i, None)


# ------------------------------------------------------------------ solving


def _as_columns(A: IntMatrix) -> list[dict[int, int]]:
    cols = A.col_dicts()
    return [cols.get(j, {}) for j in range(A.cols)]


def solve_mod(A: IntMatrix, b: Sequence[int], n: int) -> list[int]:
    """Solve ``A x = b`` over Z (n=0), Z/2 or Z/4.

    Over Z/2 and Z/4 the solution is built from echelon tags with
    coefficients reduced into ``[0, n)``; free variables are zero.  Over Z
    the solve uses the Smith normal form.

    Raises:
        NoSolution: if b is not in the image of A.
    """
    b = [int(x) for x in b]
    if len(b) != A.rows:
        raise ValidationError("right-hand side length does not match matrix rows")
    if n == 0:
        return _solve_integer(A, b)
    if n == 2:
        E = GF2Echelon()
        for j, col in enumerate(_as_columns(A)):
            E.insert({i for i, v in col.items() if v % 2}, {j})
        res, tag = E.reduce({i for i, v in enumerate(b) if v % 2})
        if res:
            raise NoSolution("vector not in the mod-2 column span")
        x = [0] * A.cols
        for j in tag:
            x[j] = 1
        return x
    if n == 4:
        E4 = Z4Echelon()
        for j, col in enumerate(_as_columns(A)):
            E4.insert(col, {j: 1})
        res, tag = E4.reduce({i: v for i, v in enumerate(b)})
        if res:
            raise NoSolution("vector not in the mod-4 column span")
        # reduction leaves b + sum(tag_j * col_j) = 0, so x = -tag
        x = [0] * A.cols
        for j, v in tag.items():
            x[j] = (-v) % 4
        return x
    raise ValidationError(f"unsupported modulus {n}; use 0, 2 or 4")


def _solve_integer(A: IntMatrix, b: list[int]) -> list[int]:
    snf = smith_normal_form(A)
    c = snf.U @ b
    y = [0] * A.cols
    for t, d in enumerate(snf.diagonal):
        if c[t] % d:
            raise NoSolution("no integer solution")
        y[t] = c[t] // d
    if any(c[t] for t in range(len(snf.diagonal), A.rows)):
        raise NoSolution("no integer solution")
    return snf.V @ y


def rank_mod(A: IntMatrix, n: int) -> int:
    """Rank over Q (n=0) or Z/2 (n=2)."""
    if n == 0:
        return len(smith_diagonal(A))
    if n == 2:
        E = GF2Echelon()
        for col in _as_columns(A):
            E.insert({i for i, v in col.items() if v % 2})
        return len(E)
    raise ValidationError("rank is defined here only over Q and Z/2")


@dataclass(frozen=True)
class Submodule:
    """Generators of a submodule of R^n with the additive order of each.

    Attributes:
        ambient: Length of the vectors.
        modulus: 0 for Z, 2 or 4.
        generators: Tuple of dense integer vectors.
        orders: Additive order of each generator (0 meaning infinite).
    """

    ambient: int
    modulus: int
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]

    @property
    def size(self) -> int | None:
        """Number of elements, or None when infinite."""
        if any(o == 0 for o in self.orders):
            return None
        out = 1
        for o in self.orders:
            out *= o
        return out


def kernel_image_mod(A: IntMatrix, n: int) -> tuple[Submodule, Submodule]:
    """Kernel and image of A over Z (n=0), Z/2 or Z/4.

    The bases are computed from the Smith form (Z and Z/4) or a reduced
    echelon (Z/2) and are therefore deterministic.  Over Z/4 the order of
    every generator is recorded, so order-2 summands are explicit.
    """
    if n == 2:
        return _kernel_image_gf2(A)
    if n not in (0, 4):
        raise ValidationError(f"unsupported modulus {n}")
    snf = smith_normal_form(A)
    r = snf.rank
    Vd = snf.V.to_dense()
    Ud = snf.U_inv.to_dense()
    kgens, korders, igens, iorders = [], [], [], []
    for t in range(A.cols):
        col = [Vd[i][t] for i in range(A.cols)]
        d = snf.diagonal[t] if t < r else 0
        if n == 0:
            if t >= r:
                kgens.append(tuple(col))
                korders.append(0)
            continue
        g = gcd(d, 4)
        if g == 4:
            kgens.append(tuple(x % 4 for x in col))
            korders.append(4)
        elif g == 2:
            kgens.append(tuple((2 * x) % 4 for x in col))
            korders.append(2)
    for t in range(r):
        d = snf.diagonal[t]
        col = [Ud[i][t] * d for i in range(A.rows)]
        if n == 0:
            igens.append(tuple(col))
            iorders.append(0)
            continue
        g = gcd(d, 4)
        if g == 4:
            continue
        igens.append(tuple(x % 4 for x in col))
        iorders.append(4 // g)
    return (
        Submodule(A.cols, n, tuple(kgens), tuple(korders)),
        Submodule(A.rows, n, tuple(igens), tuple(iorders)),
    )


def _kernel_image_gf2(A: IntMatrix) -> tuple[Submodule, Submodule]:
    E = GF2Echelon()
    kernel: list[set[int]] = []
    for j, col in enumerate(_as_columns(A)):
        res, tag = E.reduce({i for i, x in col.items() if x % 2}, {j})
        if res:
            E.table[max(res)] = (res, tag)
        else:
            kernel.append(tag)
    reduced: dict[int, set[int]] = {}
    for m in sorted(E.table):
        v = set(E.table[m][0])
        for m2 in sorted(reduced, reverse=True):
            if m2 in v:
                v ^= reduced[m2]
        reduced[m] = v
    img_vecs = [tuple(1 if i in reduced[m] else 0 for i in range(A.rows)) for m in sorted(reduced)]
    ker_vecs = [tuple(1 if j in t else 0 for j in range(A.cols)) for t in kernel]
    return (
        Submodule(A.cols, 2, tuple(ker_vecs), tuple(2 for _ in ker_vecs)),
        Submodule(A.rows, 2, tuple(img_vecs), tuple(2 for _ in img_vecs)),
    )
