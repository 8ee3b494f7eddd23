"""Tests for dense exact linear algebra over finite fields."""

import random

import numpy as np
import pytest

from pblocks.errors import ShapeMismatch
from pblocks.ffield import field_create, poly_eval, poly_mul, poly_sub, poly_trim
from pblocks.linalg import (
    Mat,
    _mat_mul_packed,
    _mat_mul_schoolbook,
    _rref_generic,
    _rref_packed,
    char_poly_factors,
    mat_add,
    mat_charpoly,
    mat_inv,
    mat_kron,
    mat_left_kernel,
    mat_mul,
    mat_rank,
    mat_right_kernel,
    mat_rref,
    mat_scale,
    mat_solve_left,
    mat_sub,
    mat_transpose,
)


def _random_mat(F, nrows, ncols, rng):
    """Build a random matrix over F."""
    data = [[rng.randrange(F.q) for _ in range(ncols)] for _ in range(nrows)]
    return Mat(F, data)


def _random_invertible(F, n, rng):
    """Build an invertible matrix as unit upper times unit lower triangular."""
    upper = np.zeros((n, n), dtype=np.int64)
    lower = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        upper[i, i] = 1
        lower[i, i] = 1
        for j in range(i + 1, n):
            upper[i, j] = rng.randrange(F.q)
            lower[j, i] = rng.randrange(F.q)
    return mat_mul(Mat(F, upper), Mat(F, lower))


# -- construction and guards ----------------------------------------------------

def test_matrix_is_immutable():
    A = Mat(field_create(3), [[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        A.data[0, 0] = 2


def test_entry_range_checked():
    with pytest.raises(ShapeMismatch):
        Mat(field_create(3), [[0, 3]])
    with pytest.raises(ShapeMismatch):
        Mat(field_create(3), [[0, -1]])


def test_shape_guards():
    F = field_create(5)
    A = Mat.zeros(F, 2, 3)
    B = Mat.zeros(F, 2, 3)
    with pytest.raises(ShapeMismatch):
        mat_mul(A, B)
    with pytest.raises(ShapeMismatch):
        mat_add(A, Mat.zeros(F, 3, 2))
    with pytest.raises(ShapeMismatch):
        mat_mul(A, Mat.zeros(field_create(7), 3, 2))


# -- products ----------------------------------------------------------------------

MUL_FIELDS = [(2, 1), (3, 1), (101, 1), (2, 2), (3, 2), (2, 6), (2, 17), (3, 11)]


def test_product_matches_schoolbook():
    for p, m in MUL_FIELDS:
        F = field_create(p, m)
        rng = random.Random(7)
        for _ in range(5):
            A = _random_mat(F, rng.randrange(1, 7), rng.randrange(1, 7), rng)
            B = _random_mat(F, A.ncols, rng.randrange(1, 7), rng)
            assert mat_mul(A, B) == _mat_mul_schoolbook(A, B)


def test_packed_product_matches_modular():
    F = field_create(2)
    rng = random.Random(19)
    for _ in range(10):
        A = _random_mat(F, rng.randrange(1, 40), rng.randrange(1, 40), rng)
        B = _random_mat(F, A.ncols, rng.randrange(1, 40), rng)
        packed = _mat_mul_packed(A, B)
        assert np.array_equal(packed.data, (A.data @ B.data) % 2)


def test_product_associativity_and_identity():
    for p, m in [(3, 1), (2, 3), (5, 2)]:
        F = field_create(p, m)
        rng = random.Random(23)
        A = _random_mat(F, 5, 4, rng)
        B = _random_mat(F, 4, 6, rng)
        C = _random_mat(F, 6, 3, rng)
        assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))
        assert mat_mul(Mat.identity(F, 5), A) == A
        assert mat_mul(A, Mat.identity(F, 4)) == A


def test_scale_and_arithmetic():
    F = field_create(7)
    rng = random.Random(3)
    A = _random_mat(F, 4, 5, rng)
    B = _random_mat(F, 4, 5, rng)
    assert mat_sub(mat_add(A, B), B) == A
    assert mat_scale(A, 1) == A
    assert mat_scale(A, 0) == Mat.zeros(F, 4, 5)
    two_a = mat_add(A, A)
    assert mat_scale(A, 2) == two_a


def test_transpose_of_product():
    F = field_create(3, 2)
    rng = random.Random(5)
    A = _random_mat(F, 4, 6, rng)
    B = _random_mat(F, 6, 3, rng)
    assert mat_transpose(mat_mul(A, B)) == mat_mul(mat_transpose(B), mat_transpose(A))


def test_kron_mixed_product():
    for p, m in [(2, 1), (5, 1), (2, 2)]:
        F = field_create(p, m)
        rng = random.Random(11)
        A = _random_mat(F, 3, 2, rng)
        B = _random_mat(F, 2, 3, rng)
        C = _random_mat(F, 2, 4, rng)
        D = _random_mat(F, 3, 2, rng)
        left = mat_mul(mat_kron(A, B), mat_kron(C, D))
        right = mat_kron(mat_mul(A, C), mat_mul(B, D))
        assert left == right


def test_kron_entries():
    F = field_create(5)
    A = Mat(F, [[1, 2], [3, 4]])
    B = Mat(F, [[0, 1], [2, 3]])
    K = mat_kron(A, B)
    assert K.shape == (4, 4)
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    want = F.mul(int(A.data[i1, j1]), int(B.data[i2, j2]))
                    assert int(K.data[2 * i1 + i2, 2 * j1 + j2]) == want


# -- elimination ----------------------------------------------------------------------

def test_rref_shape_properties():
    for p, m in [(2, 1), (3, 1), (2, 2), (7, 1), (3, 2)]:
        F = field_create(p, m)
        rng = random.Random(31)
        for _ in range(10):
            A = _random_mat(F, rng.randrange(1, 8), rng.randrange(1, 8), rng)
            R, pivots = mat_rref(A)
            assert list(pivots) == sorted(pivots)
            for i, j in enumerate(pivots):
                col = np.zeros(A.nrows, dtype=np.int64)
                col[i] = 1
                assert np.array_equal(R.data[:, j], col)
            assert not R.data[len(pivots):, :].any()
            # reducing again changes nothing
            R2, pivots2 = mat_rref(R)
            assert R2 == R and pivots2 == pivots


def test_rref_packed_matches_generic():
    F = field_create(2)
    rng = random.Random(43)
    for _ in range(25):
        nrows = rng.randrange(1, 12)
        ncols = rng.randrange(1, 12)
        arr = np.array(
            [[rng.randrange(2) for _ in range(ncols)] for _ in range(nrows)],
            dtype=np.int64,
        )
        packed, piv_a = _rref_packed(arr, ncols)
        generic, piv_b = _rref_generic(arr.copy(), F, ncols)
        assert piv_a == piv_b
        assert np.array_equal(packed, generic)


def test_rank_of_products():
    F = field_create(3)
    rng = random.Random(13)
    A = _random_mat(F, 6, 4, rng)
    B = _random_mat(F, 4, 6, rng)
    assert mat_rank(mat_mul(A, B)) <= min(mat_rank(A), mat_rank(B))
    assert mat_rank(Mat.identity(F, 5)) == 5
    assert mat_rank(Mat.zeros(F, 3, 4)) == 0


def test_inverse_round_trip():
    for p, m in [(2, 1), (3, 1), (2, 3), (5, 2), (3, 2)]:
        F = field_create(p, m)
        rng = random.Random(17)
        for n in (1, 2, 5, 8):
            A = _random_invertible(F, n, rng)
            Ainv = mat_inv(A)
            assert mat_mul(A, Ainv) == Mat.identity(F, n)
            assert mat_mul(Ainv, A) == Mat.identity(F, n)


def test_singular_inverse_raises():
    F = field_create(5)
    with pytest.raises(ZeroDivisionError):
        mat_inv(Mat(F, [[1, 2], [2, 4]]))
    with pytest.raises(ShapeMismatch):
        mat_inv(Mat.zeros(F, 2, 3))


def test_kernels():
    for p, m in [(2, 1), (3, 1), (2, 2), (7, 1)]:
        F = field_create(p, m)
        rng = random.Random(29)
        for _ in range(10):
            A = _random_mat(F, rng.randrange(1, 8), rng.randrange(1, 8), rng)
            K = mat_right_kernel(A)
            assert K.nrows == A.ncols - mat_rank(A)
            if K.nrows:
                assert not mat_mul(A, mat_transpose(K)).data.any()
                assert mat_rank(K) == K.nrows
            L = mat_left_kernel(A)
            assert L.nrows == A.nrows - mat_rank(A)
            if L.nrows:
                assert not mat_mul(L, A).data.any()


def test_solve_left_round_trip():
    for p, m in [(2, 1), (5, 1), (3, 2)]:
        F = field_create(p, m)
        rng = random.Random(37)
        for _ in range(10):
            A = _random_mat(F, rng.randrange(1, 6), rng.randrange(1, 6), rng)
            X = _random_mat(F, rng.randrange(1, 6), A.nrows, rng)
            B = mat_mul(X, A)
            solved = mat_solve_left(A, B)
            assert mat_mul(solved, A) == B


def test_solve_left_inconsistent_raises():
    F = field_create(3)
    A = Mat(F, [[1, 0], [0, 0]])
    B = Mat(F, [[0, 1]])
    with pytest.raises(ValueError):
        mat_solve_left(A, B)


# -- characteristic polynomial ----------------------------------------------------------

def _charpoly_cofactor(F, A):
    """Expand det(xI - A) by minors over the first column (oracle)."""
    n = A.nrows
    entries = [
        [
            poly_trim(
                [F.neg(int(A.data[i, j])), 1]
                if i == j
                else [F.neg(int(A.data[i, j]))]
            )
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = []
        for idx, i in enumerate(rows):
            e = entries[i][cols[0]]
            if not e:
                continue
            minor = det([r for r in rows if r != i], cols[1:])
            term = poly_mul(F, e, minor)
            if idx % 2:
                total = poly_sub(F, total, term)
            else:
                total = poly_trim(
                    [
                        F.add(total[k] if k < len(total) else 0,
                              term[k] if k < len(term) else 0)
                        for k in range(max(len(total), len(term)))
                    ]
                )
        return total

    return det(list(range(n)), list(range(n)))


def test_charpoly_matches_cofactor_oracle():
    for p, m in [(2, 1), (3, 1), (2, 2), (3, 2), (7, 1)]:
        F = field_create(p, m)
        rng = random.Random(41)
        for n in (1, 2, 3, 4, 5):
            A = _random_mat(F, n, n, rng)
            got = poly_trim(mat_charpoly(A))
            want = _charpoly_cofactor(F, A)
            assert got == want, (p, m, n, A.data.tolist())


def test_cayley_hamilton():
    for p, m in [(2, 2), (7, 1), (5, 2), (2, 6)]:
        F = field_create(p, m)
        rng = random.Random(53)
        for n in (3, 6, 9):
            A = _random_mat(F, n, n, rng)
            coeffs = mat_charpoly(A)
            acc = Mat.zeros(F, n, n)
            for c in reversed(coeffs):
                acc = mat_add(mat_mul(acc, A), mat_scale(Mat.identity(F, n), c))
            assert acc == Mat.zeros(F, n, n)


def test_charpoly_of_companion_matrix():
    F = field_create(3, 2)
    rng = random.Random(61)
    for n in (2, 4, 7):
        coeffs = [rng.randrange(F.q) for _ in range(n)] + [1]
        comp = np.zeros((n, n), dtype=np.int64)
        for i in range(n - 1):
            comp[i + 1, i] = 1
        for i in range(n):
            comp[i, n - 1] = F.neg(coeffs[i])
        got = mat_charpoly(Mat(F, comp))
        assert got == coeffs


def test_char_poly_factors_of_block_diagonal():
    F = field_create(5)
    A = Mat(F, [[2, 0, 0], [0, 3, 0], [0, 0, 3]])
    factors = dict(char_poly_factors(A))
    assert factors == {(3, 1): 1, (2, 1): 2}
    # eigenvalue 2 gives factor x - 2 = x + 3, eigenvalue 3 gives x + 2
    for (coeffs, _mult) in factors.items():
        root = F.neg(coeffs[0])
        assert poly_eval(F, list(coeffs), root) == 0
