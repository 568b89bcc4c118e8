"""Floating-point linear algebra wrappers."""

from __future__ import annotations

import numpy as np
import pytest

from jol.numlin import IllConditioned, cmatrix, eig, lstsq, rank_tol, weyr_partition


def jordan_block(lam, k):
    return lam * np.eye(k) + np.diag(np.ones(k - 1), 1)


def test_cmatrix_rejects_non_finite():
    with pytest.raises(ValueError):
        cmatrix([[1.0, np.inf]])


def test_lstsq_identity_and_projection():
    B = np.array([[1.0 + 2j], [3.0]])
    assert np.allclose(lstsq(np.eye(2), B), B)

    A = np.array([[1.0], [0.0]])
    b = np.array([[1.0], [1.0]])
    X = lstsq(A, b)
    assert np.allclose(X, [[1.0]])
    assert abs(np.linalg.norm(A @ X - b) - 1.0) < 1e-12


def test_lstsq_min_norm_on_rank_deficient():
    A = np.array([[1.0, 1.0], [1.0, 1.0]])
    b = np.array([[2.0], [2.0]])
    X = lstsq(A, b)
    # minimum-norm solution of x + y = 2 is (1, 1)
    assert np.allclose(X, [[1.0], [1.0]])


def test_lstsq_residual_orthogonal_to_column_space():
    rng = np.random.default_rng(0)
    A = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
    B = rng.normal(size=(6, 2)) + 1j * rng.normal(size=(6, 2))
    R = B - A @ lstsq(A, B)
    assert np.max(np.abs(A.conj().T @ R)) < 1e-10 * np.linalg.norm(B)


def test_rank_tol():
    assert rank_tol(np.diag([1.0, 1e-14]), 1e-8) == 1
    assert rank_tol(np.eye(5)) == 5
    assert rank_tol(np.zeros((3, 3))) == 0

    rng = np.random.default_rng(1)
    U = rng.normal(size=(5, 2))
    V = rng.normal(size=(2, 5))
    assert rank_tol(U @ V) == 2


def test_rank_tol_unitary_invariance():
    rng = np.random.default_rng(2)
    M = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    M[3] = M[0] + M[1]  # force rank 3
    Q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    assert rank_tol(M) == rank_tol(Q @ M) == 3


def test_eig():
    vals = sorted(eig(np.diag([1.0, 2.0, 3.0])).real)
    assert np.allclose(vals, [1, 2, 3])
    assert np.max(np.abs(eig(jordan_block(0, 3)))) < 1e-5


def test_weyr_partition_examples():
    assert weyr_partition(jordan_block(0, 3), 0.0) == (3,)

    M = np.zeros((3, 3), dtype=complex)
    M[:2, :2] = jordan_block(5.0, 2)
    M[2, 2] = 5.0
    assert weyr_partition(M, 5.0) == (2, 1)

    # eigenvalue not present -> empty partition
    assert weyr_partition(np.eye(3), 7.0) == ()


def test_weyr_partition_sums_to_multiplicity():
    rng = np.random.default_rng(3)
    S = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    J = np.zeros((5, 5), dtype=complex)
    J[:3, :3] = jordan_block(2.0, 3)
    J[3:, 3:] = jordan_block(2.0, 2)
    M = S @ J @ np.linalg.inv(S)
    p = weyr_partition(M, 2.0, 1e-6)
    assert sum(p) == 5 and p == (3, 2)


def test_weyr_partition_ill_conditioned():
    with pytest.raises(IllConditioned):
        # With a huge tolerance the decided "rank" drops by 1 then by 3,
        # which is impossible for a genuine Weyr sequence.
        weyr_partition(np.diag([1.0, 0.8, 0.8, 0.1]), 0.0, 0.5)
