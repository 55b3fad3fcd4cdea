"""Independent reference implementations used only by the tests.

Everything here is dense, small-scale and written without the package's
sparse machinery, so agreement is a genuine cross-check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def bareiss_rank(M) -> int:
    """Rank over Q by fraction-free elimination."""
    A = [[int(v) for v in row] for row in M]
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    r, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == rows:
            break
    return r


def gf2_rank(M) -> int:
    """Rank over Z/2 using Python integers as bit rows."""
    basis: dict[int, int] = {}
    for row in M:
        v = 0
        for j, x in enumerate(row):
            if int(x) % 2:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def det(M) -> int:
    """Exact determinant via fractions."""
    n = len(M)
    A = [[Fraction(int(v)) for v in row] for row in M]
    sign, out = 1, Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        out *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            for j in range(c, n):
                A[i][j] -= f * A[c][j]
    return int(sign * out)


def determinantal_divisors(M) -> list[int]:
    """D_k = gcd of all k x k minors, for k = 1 .. rank."""
    rows, cols = len(M), len(M[0]) if M else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for R in itertools.combinations(range(rows), k):
            for C in itertools.combinations(range(cols), k):
                g = gcd(g, det([[M[i][j] for j in C] for i in R]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_by_minors(M) -> list[int]:
    D = determinantal_divisors(M)
    return [D[0]] + [D[k] // D[k - 1] for k in range(1, len(D))] if D else []


def dense_smith_diagonal(M) -> list[int]:
    """Textbook dense Smith normal form (diagonal only)."""
    A = [[int(v) for v in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    done = False
                    break
            if not done:
                continue
            for j in range(t + 1, cols):
                q = A[t][j] // A[t][t]
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if not done:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % A[t][t]),
                None,
            )
            if bad:
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                done = False
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def brute_solutions(A, b, n: int):
    """All x in (Z/n)^cols with A x = b mod n."""
    cols = len(A[0]) if A else 0
    for x in itertools.product(range(n), repeat=cols):
        if all((sum(a * v for a, v in zip(row, x)) - bi) % n == 0 for row, bi in zip(A, b)):
            yield x


def chain_complex(facets):
    """Simplices by dimension and dense integral boundary matrices, built from scratch."""
    dim = len(facets[0]) - 1
    simplices = [set() for _ in range(dim + 1)]
    for f in facets:
        f = tuple(sorted(f))
        for k in range(dim + 1):
            simplices[k].update(itertools.combinations(f, k + 1))
    simplices = [sorted(s) for s in simplices]
    index = [{s: i for i, s in enumerate(level)} for level in simplices]
    boundaries = [None]
    for k in range(1, dim + 1):
        D = [[0] * len(simplices[k]) for _ in simplices[k - 1]]
        for j, s in enumerate(simplices[k]):
            for i in range(k + 1):
                D[index[k - 1][s[:i] + s[i + 1 :]]][j] += (-1) ** i
        boundaries.append(D)
    return simplices, boundaries


def homology_oracle(facets):
    """Integral homology (rank, torsion) per degree from dense Smith forms."""
    simplices, bd = chain_complex(facets)
    dim = len(simplices) - 1
    out = []
    for k in range(dim + 1):
        n_k = len(simplices[k])
        z = n_k - (len([d for d in dense_smith_diagonal(bd[k]) if d]) if k else 0)
        if k < dim:
            diag = [d for d in dense_smith_diagonal(bd[k + 1]) if d]
        else:
            diag = []
        out.append((z - len(diag), sorted(d for d in diag if d > 1)))
    return out


def betti_mod2_oracle(facets):
    simplices, bd = chain_complex(facets)
    dim = len(simplices) - 1
    ranks = [0] + [gf2_rank(bd[k]) for k in range(1, dim + 1)] + [0]
    return [len(simplices[k]) - ranks[k] - ranks[k + 1] for k in range(dim + 1)]


# six-vertex real projective plane (hemi-icosahedron)
RP2_FACETS = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
