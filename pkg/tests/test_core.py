"""Jordan space core tests: product, locus test, congruence, frames.

Expected matrices here are derived by hand from the definitions (for the
frame change Q_n the defining identity Q_n J_n Q_n^T = 1_n is checked
exactly for all supported sizes).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jol.core import (
    BasisTensor,
    JnMissing,
    JordanSpace,
    anti_identity,
    congruence,
    frame_change,
    generic_unit,
    in_span,
    is_jordan_space,
    jordan_product,
    kron,
    orthonormal_tensor,
    space_from_json,
    space_to_json,
    to_identity_frame,
)
from jol.exact import HALF, I, ONE, ZERO, ExactMatrix, ExactScalar

E = ExactScalar


def _sym(n, *pairs):
    """Symmetric matrix with given ((i, j), value) entries (0-indexed)."""
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in pairs:
        v = v if isinstance(v, ExactScalar) else E(v)
        rows[i][j] = rows[i][j] + v
        if i != j:
            rows[j][i] = rows[j][i] + v
    return ExactMatrix(rows)


B_MAT = ExactMatrix([[ONE, I], [I, -ONE]])
DIAG3 = JordanSpace([_sym(3, ((0, 0), 1)), _sym(3, ((1, 1), 1)),
                     _sym(3, ((2, 2), 1))])


# ---------------------------------------------------------------------------
# jordan_product


def test_product_orthogonal_idempotents():
    X = _sym(2, ((0, 0), 1))
    Y = _sym(2, ((1, 1), 1))
    assert jordan_product(X, Y, ExactMatrix.identity(2)) == \
        ExactMatrix.zeros(2, 2)


def test_product_involution_squares_to_identity():
    X = _sym(2, ((0, 1), 1))
    assert jordan_product(X, X, ExactMatrix.identity(2)) == \
        ExactMatrix.identity(2)


def test_product_square_zero_matrix():
    # B = [[1, i], [i, -1]] squares to zero in the identity frame.
    assert jordan_product(B_MAT, B_MAT, ExactMatrix.identity(2)) == \
        ExactMatrix.zeros(2, 2)


def test_product_singular_unit_raises():
    from jol.core import SingularUnit
    X = ExactMatrix.identity(2)
    with pytest.raises(SingularUnit):
        jordan_product(X, X, ExactMatrix.zeros(2, 2))


# ---------------------------------------------------------------------------
# in_span / generic_unit


def test_in_span_coordinates():
    M = _sym(3, ((0, 0), 2), ((1, 1), -3))
    coords = in_span(DIAG3, M)
    assert coords == (E(2), E(-3), ZERO)


def test_in_span_rejects_outside():
    assert in_span(DIAG3, _sym(3, ((0, 1), 1))) is None


def test_generic_unit_is_invertible():
    U = generic_unit(DIAG3)
    assert U.det()
    assert in_span(DIAG3, U) is not None


# ---------------------------------------------------------------------------
# is_jordan_space


def test_diagonal_net_is_jordan():
    assert is_jordan_space(DIAG3)


def test_full_s2_is_jordan():
    full = JordanSpace([_sym(2, ((0, 0), 1)), _sym(2, ((0, 1), 1)),
                        _sym(2, ((1, 1), 1))])
    assert is_jordan_space(full)


def test_nilpotent_style_quadric_net_is_jordan():
    # span(a^2, ab, b^2 + ac) is congruent to the C[x]/(x^3) net via
    # diag(2, 1, 1), so the locus test must accept it.
    space = JordanSpace([
        _sym(3, ((0, 0), 1)),
        _sym(3, ((0, 1), 1)),
        _sym(3, ((1, 1), 2), ((0, 2), 1)),
    ])
    assert is_jordan_space(space)


def _non_jordan_net():
    # span(a^2, b^2, ab + c^2): the self-product of the third element
    # escapes the span for every sampled unit.
    return JordanSpace([
        _sym(3, ((0, 0), 1)),
        _sym(3, ((1, 1), 1)),
        _sym(3, ((0, 1), 1), ((2, 2), 1)),
    ])


def test_quadric_net_outside_locus():
    assert not is_jordan_space(_non_jordan_net())


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(1, 3))
@settings(max_examples=15, deadline=None)
def test_is_jordan_space_congruence_invariant(p, q, r, d):
    g = ExactMatrix([[E(1), E(p), E(q)],
                     [E(0), E(d), E(r)],
                     [E(0), E(0), E(1)]])
    assert is_jordan_space(congruence(DIAG3, g))
    assert not is_jordan_space(congruence(_non_jordan_net(), g))


def test_jordan_axiom_in_diagonal_net():
    # (X*X)*(X*Y) = X*((X*X)*Y) with * taken at the generic unit.
    U = generic_unit(DIAG3)
    X = DIAG3.element([1, 2, -1])
    Y = DIAG3.element([3, -1, 5])
    XX = jordan_product(X, X, U)
    XY = jordan_product(X, Y, U)
    lhs = jordan_product(XX, XY, U)
    rhs = jordan_product(X, jordan_product(XX, Y, U), U)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# congruence and frame change


def test_congruence_identity_fixes_space():
    moved = congruence(DIAG3, ExactMatrix.identity(3))
    assert moved.basis == DIAG3.basis


def test_congruence_antidiagonal_pencil_to_identity_frame():
    # Q_2 applied to span(J_2, diag(1, 0)) gives span(1_2, B/2) pointwise.
    src = JordanSpace([anti_identity(2), _sym(2, ((0, 0), 1))])
    moved = congruence(src, frame_change(2))
    assert moved.basis[0] == ExactMatrix.identity(2)
    assert moved.basis[1] == B_MAT.scale(HALF)


def test_congruence_rejects_singular():
    with pytest.raises(ValueError):
        congruence(DIAG3, ExactMatrix.zeros(3, 3))


@pytest.mark.parametrize("n", range(2, 8))
def test_frame_change_defining_identity(n):
    Q = frame_change(n)
    assert Q @ anti_identity(n) @ Q.T == ExactMatrix.identity(n)


def test_to_identity_frame_simple():
    moved = to_identity_frame(JordanSpace([anti_identity(2)]))
    assert moved.basis[0] == ExactMatrix.identity(2)


def test_to_identity_frame_square_zero_image():
    # Q_3 sends diag(1,0,0) to a rank-1 square-zero matrix.
    src = JordanSpace([anti_identity(3), _sym(3, ((0, 0), 1))])
    moved = to_identity_frame(src)
    M = moved.basis[1]
    assert M @ M == ExactMatrix.zeros(3, 3)
    from jol.exact import ff_rank
    assert ff_rank([list(row) for row in M.entries]) == 1


def test_to_identity_frame_requires_jn():
    with pytest.raises(JnMissing):
        to_identity_frame(JordanSpace([_sym(2, ((0, 0), 1))]))


# ---------------------------------------------------------------------------
# orthonormal tensors


def test_orthonormal_tensor_normalizes_identity():
    t = orthonormal_tensor(JordanSpace([ExactMatrix.identity(2)]))
    np.testing.assert_allclose(t.layers[0], np.eye(2) / np.sqrt(2))


def test_orthonormal_tensor_diagonal_net():
    t = orthonormal_tensor(DIAG3)
    for i, L in enumerate(t.layers):
        expect = np.zeros((3, 3))
        expect[i, i] = 1.0
        np.testing.assert_allclose(L, expect, atol=1e-15)


def test_orthonormal_tensor_gram_and_span():
    space = JordanSpace([anti_identity(3), _sym(3, ((0, 0), 1)),
                         _sym(3, ((0, 1), 3), ((2, 2), -2))])
    t = orthonormal_tensor(space)
    np.testing.assert_allclose(t.gram(), np.eye(3), atol=1e-12)
    # Mutual projection: each exact basis layer lies in the float span.
    V = np.stack([L.ravel() for L in t.layers])
    for Bm in space.basis:
        v = np.array(Bm.to_complex()).ravel()
        resid = v - V.T @ (V.conj() @ v)
        assert np.linalg.norm(resid) < 1e-10


# ---------------------------------------------------------------------------
# kron


def test_kron_block_structure():
    assert kron(ExactMatrix.identity(2), B_MAT) == ExactMatrix([
        [ONE, I, ZERO, ZERO],
        [I, -ONE, ZERO, ZERO],
        [ZERO, ZERO, ONE, I],
        [ZERO, ZERO, I, -ONE],
    ])


@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
@settings(max_examples=20, deadline=None)
def test_kron_mixed_product(vals):
    mats = [ExactMatrix([[E(vals[4 * k + 0]), E(vals[4 * k + 1])],
                         [E(vals[4 * k + 2]), E(vals[4 * k + 3])]])
            for k in range(4)]
    X, Y, Z, W = mats
    assert kron(X, Y) @ kron(Z, W) == kron(X @ Z, Y @ W)


# ---------------------------------------------------------------------------
# JSON round trip


def test_space_json_round_trip():
    space = JordanSpace([anti_identity(2), B_MAT], label="pencil")
    data = space_to_json(space)
    assert data["n"] == 2 and data["m"] == 2 and data["label"] == "pencil"
    back = space_from_json(data)
    assert back.basis == space.basis
    assert back.label == "pencil"


def test_space_json_rejects_sqrt2():
    space = JordanSpace([frame_change(2) @ anti_identity(2)
                         @ frame_change(2).T,
                         ExactMatrix([[ExactScalar(0, 0, 1), ZERO],
                                      [ZERO, ONE]])])
    with pytest.raises(ValueError):
        space_to_json(space)
