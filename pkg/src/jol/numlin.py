"""Dense complex floating-point linear algebra.

Thin, deterministic wrappers around numpy used by the numerical degeneration
search and the numeric Segre-symbol pipeline.  Everything is SVD-based where
rank decisions matter: the optimizer deliberately visits near-singular
matrices and the minimum-norm convention keeps the objective well-defined.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-8


class IllConditioned(Exception):
    """Numeric rank decisions were inconsistent at the given tolerance."""


def cmatrix(entries) -> np.ndarray:
    """Validate and convert a grid to a complex128 array (finite entries)."""
    M = np.asarray(entries, dtype=complex)
    if M.ndim != 2:
        raise ValueError("expected a 2-d grid")
    if not np.all(np.isfinite(M.real)) or not np.all(np.isfinite(M.imag)):
        raise ValueError("non-finite entries")
    return M


def lstsq(A, B) -> np.ndarray:
    """Minimum-norm least squares: X minimizing ||A X - B||_F."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    X, *_ = np.linalg.lstsq(A, B, rcond=None)
    return X


def rank_tol(M, rel_tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above rel_tol times the largest one."""
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    smax = s[0]
    if smax == 0.0:
        return 0
    return int(np.count_nonzero(s > rel_tol * smax))


def eig(M) -> np.ndarray:
    """Eigenvalues with multiplicity (backward-stable, unordered)."""
    return np.linalg.eigvals(np.asarray(M, dtype=complex))


def weyr_partition(M, lam: complex, tol: float = DEFAULT_TOL):
    """Partition of Jordan block sizes of M at eigenvalue lam.

    Recovered from the rank sequence r_j of (M - lam I)^j: the Weyr sequence
    is (r_{j-1} - r_j) and the returned partition is its conjugate.  The
    matrix is normalized once and singular values of its powers are cut at
    tol directly: a per-power relative cut would report noise as rank as
    soon as some power is numerically zero.  Raises IllConditioned when the
    differences fail to be non-increasing, which signals a tolerance failure
    rather than a structural fact.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if M.shape[0] != M.shape[1]:
        raise ValueError("weyr_partition needs a square matrix")
    N = M - lam * np.eye(n)
    scale = np.linalg.norm(N)
    if scale > 0:
        N = N / scale
    ranks = [n]
    Pj = np.eye(n, dtype=complex)
    for _ in range(n):
        Pj = Pj @ N
        s = np.linalg.svd(Pj, compute_uv=False)
        r = int(np.count_nonzero(s > tol))
        ranks.append(r)
        if r == ranks[-2] or r == 0:
            break
    weyr = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    while weyr and weyr[-1] == 0:
        weyr.pop()
    for j in range(1, len(weyr)):
        if weyr[j] > weyr[j - 1]:
            raise IllConditioned(f"Weyr sequence {weyr} is not non-increasing")
    if not weyr:
        return ()
    # conjugate partition
    return tuple(sum(1 for w in weyr if w >= i) for i in range(1, weyr[0] + 1))
