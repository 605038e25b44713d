from fractions import Fraction

import pytest

from ppbarrier.fermionic import (
    IDENTITY,
    ZERO2,
    Matrix2,
    NotTriangularError,
    anticommutator,
    commutator,
    d_minus,
    d_plus,
    eigenvalues_triangular,
    fermionic_number,
    mat_add,
    mat_mul,
    mat_scale,
)
from ppbarrier.scalar import I

HALF_I = I * Fraction(1, 2)


def brute_mul(a, b):
    return Matrix2(sum((a[i, k] * b[k, j] for k in range(2)), start=0 * I)
                   for i in range(2) for j in range(2))


def test_identity_squared():
    assert mat_mul(IDENTITY, IDENTITY) == IDENTITY


def test_matmul_matches_index_formula():
    a = Matrix2((1, I, 3, Fraction(1, 2)))
    b = Matrix2((0, 2, -I, 5))
    assert mat_mul(a, b) == brute_mul(a, b)
    assert mat_add(a, b) == Matrix2((1, 2 + I, 3 - I, Fraction(11, 2)))
    assert mat_scale(a, 2) == a + a


def test_anticommutation_relations():
    dp, dm = d_plus(), d_minus()
    assert mat_mul(dp, dp) == ZERO2
    assert mat_mul(dm, dm) == ZERO2
    assert anticommutator(dp, dm) == IDENTITY
    assert anticommutator(dp, dp) == ZERO2
    assert anticommutator(dm, dm) == ZERO2
    assert mat_mul(dp, dm) + mat_mul(dm, dp) == IDENTITY


def test_commutator_is_diag():
    assert commutator(d_plus(), d_minus()) == Matrix2((1, 0, 0, -1))


def test_number_operator():
    n = fermionic_number()
    assert n == Matrix2((HALF_I, 0, 0, -HALF_I))
    assert n.trace() == 0
    assert n @ n == IDENTITY.scale(Fraction(-1, 4))
    assert set(eigenvalues_triangular(n)) == {HALF_I, -HALF_I}


def test_number_ladder_relations():
    n = fermionic_number()
    assert commutator(n, d_plus()) == d_plus().scale(I)
    assert commutator(n, d_minus()) == d_minus().scale(-I)


def test_eigenvalues_triangular():
    assert eigenvalues_triangular(Matrix2((1, 5, 0, 2))) == (1, 2)
    assert eigenvalues_triangular(Matrix2((1, 0, 7, 2))) == (1, 2)
    with pytest.raises(NotTriangularError):
        eigenvalues_triangular(Matrix2((0, 1, 1, 0)))


def test_matrix_validation_and_json():
    with pytest.raises(ValueError):
        Matrix2((1, 2, 3))
    data = d_plus().to_json()
    assert data[0][1] == {"a_re": "1/1", "a_im": "0/1", "b_re": "0/1", "b_im": "0/1"}
    assert len(data) == 2 and all(len(row) == 2 for row in data)
