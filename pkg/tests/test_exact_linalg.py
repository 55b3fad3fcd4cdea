from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fivebundles.errors import NoSolution, ValidationError
from fivebundles.exact_linalg import (
    GF2Echelon,
    IntMatrix,
    Z4Echelon,
    kernel_image_mod,
    rank_mod,
    smith_diagonal,
    smith_normal_form,
    solve_mod,
)
from oracles import bareiss_rank, brute_solutions, dense_smith_diagonal, det, gf2_rank, invariant_factors_by_minors


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def check_snf(M):
    A = IntMatrix.from_dense(M)
    res = smith_normal_form(A)
    assert res.U @ A @ res.V == res.D
    assert res.D.is_diagonal()
    d = res.diagonal
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert res.U @ res.U_inv == IntMatrix.identity(A.rows)
    assert abs(det(res.U.to_dense())) == 1 and abs(det(res.V.to_dense())) == 1
    return res


@given(matrices(4, 4))
def test_snf_matches_determinantal_divisors(M):
    res = check_snf(M)
    assert list(res.diagonal) == invariant_factors_by_minors(M)


@given(matrices(8, 8, -20, 20))
def test_snf_matches_dense_oracle_and_rank(M):
    res = check_snf(M)
    assert list(res.diagonal) == [d for d in dense_smith_diagonal(M) if d]
    assert res.rank == bareiss_rank(M)
    assert smith_diagonal(IntMatrix.from_dense(M)) == res.diagonal


@given(matrices(8, 8, -1, 1))
def test_rank_mod2_against_bit_oracle(M):
    assert rank_mod(IntMatrix.from_dense(M), 2) == gf2_rank(M)
    assert rank_mod(IntMatrix.from_dense(M), 0) == bareiss_rank(M)


def test_snf_known_cases():
    assert smith_normal_form(IntMatrix.from_dense([[2, 4], [4, 8]])).diagonal == (2,)
    assert smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]])).diagonal == (1, 6)
    assert smith_normal_form(IntMatrix(3, 2)).diagonal == ()


def test_snf_sparse_column_input():
    cols = [{0: 2}, {1: 4, 0: 2}]
    assert smith_diagonal(cols, rows=2) == smith_normal_form(IntMatrix.from_columns(2, cols)).diagonal


@given(matrices(3, 3, -3, 3), st.data())
def test_solve_mod_small_moduli_brute_force(M, data):
    A = IntMatrix.from_dense(M)
    for n in (2, 4):
        b = data.draw(st.lists(st.integers(0, n - 1), min_size=len(M), max_size=len(M)))
        sols = list(brute_solutions(M, b, n))
        try:
            x = solve_mod(A, b, n)
        except NoSolution:
            assert not sols
        else:
            assert sols
            assert all((v - bi) % n == 0 for v, bi in zip(A @ x, b))


@given(matrices(4, 4, -5, 5), st.data())
def test_solve_integer_soundness(M, data):
    A = IntMatrix.from_dense(M)
    x0 = data.draw(st.lists(st.integers(-3, 3), min_size=len(M[0]), max_size=len(M[0])))
    b = A @ x0
    x = solve_mod(A, b, 0)
    assert list(A @ x) == list(b)
    # perturbing b by one unit: solvable iff the integer image criterion says so
    b2 = list(b)
    b2[0] += 1
    solvable = _in_integer_image(M, b2)
    try:
        y = solve_mod(A, b2, 0)
    except NoSolution:
        assert not solvable
    else:
        assert solvable and list(A @ y) == b2


def _in_integer_image(M, b) -> bool:
    # same rank and same gcd of maximal minors for A and [A | b]
    aug = [row + [bi] for row, bi in zip(M, b)]
    r = bareiss_rank(M)
    if bareiss_rank(aug) != r:
        return False
    if r == 0:
        return True
    from oracles import determinantal_divisors

    return determinantal_divisors(M)[r - 1] == determinantal_divisors(aug)[r - 1]


def test_solve_mod_examples():
    assert solve_mod(IntMatrix.from_dense([[2]]), [2], 4) in ([1], [3])
    assert solve_mod(IntMatrix.from_dense([[2]]), [2], 4) == [1]
    with pytest.raises(NoSolution):
        solve_mod(IntMatrix.from_dense([[2]]), [1], 0)
    with pytest.raises(NoSolution):
        solve_mod(IntMatrix.from_dense([[2]]), [1], 4)
    with pytest.raises(ValidationError):
        solve_mod(IntMatrix.from_dense([[1]]), [1, 2], 2)
    assert not issubclass(NoSolution, ValueError)


@given(matrices(4, 4, -4, 4))
def test_kernel_image_mod(M):
    A = IntMatrix.from_dense(M)
    for n in (0, 2, 4):
        ker, img = kernel_image_mod(A, n)
        for v, o in zip(ker.generators, ker.orders):
            w = A @ list(v)
            assert all((x % n if n else x) == 0 for x in w)
        if n == 2:
            assert len(ker.generators) == len(M[0]) - gf2_rank(M)
            assert len(img.generators) == gf2_rank(M)
        if n == 0:
            assert len(ker.generators) == len(M[0]) - bareiss_rank(M)
        if n == 4:
            # image size equals the number of distinct A x mod 4
            vals = {tuple(x % 4 for x in A @ list(v)) for v in np.ndindex(*([4] * len(M[0])))}
            assert img.size == len(vals)


def test_kernel_image_examples():
    ker, img = kernel_image_mod(IntMatrix.from_dense([[1, 1], [1, 1]]), 2)
    assert ker.generators == ((1, 1),)
    ker, img = kernel_image_mod(IntMatrix.from_dense([[2]]), 4)
    assert img.size == 2 and ker.size == 2


def test_gf2_echelon_membership():
    E = GF2Echelon()
    E.insert({0, 1})
    E.insert({1, 2})
    assert E.contains({0, 2}) and not E.contains({0})
    assert len(E) == 2


def test_z4_echelon_orders():
    E = Z4Echelon()
    E.insert({0: 2})
    assert E.contains({0: 2}) and not E.contains({0: 1})
    assert E.order() == 2
    E.insert({0: 1, 1: 2})
    assert E.contains({0: 1, 1: 2}) and E.contains({1: 0, 0: 2})
    # (2, 0) = 2 * (1, 2), so the submodule is cyclic of order 4
    assert E.order() == 4
    E.insert({1: 1})
    assert E.order() == 16


def test_intmatrix_basics():
    A = IntMatrix.from_dense([[1, 2], [0, 3]])
    assert A.transpose().to_dense() == [[1, 0], [2, 3]]
    assert A @ [1, 1] == [3, 3]
    assert hash(A) == hash(IntMatrix.from_dense([[1, 2], [0, 3]]))
    with pytest.raises((TypeError, AttributeError)):
        A.entries[(0, 0)] = 5
