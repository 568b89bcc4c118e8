"""Jordan spaces of complex symmetric matrices.

A JordanSpace is an m-dimensional subspace of n x n complex symmetric
matrices with an exact basis.  This module provides the Jordan product
X *_U Y = (X U^-1 Y + Y U^-1 X)/2, the exact Jordan-locus membership test,
the congruence action, the anti-diagonal-to-identity frame change Q_n, and
conversion to orthonormal floating-point basis tensors for the numerical
search.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exact import (
    HALF,
    ONE,
    SQRT2,
    ZERO,
    ExactMatrix,
    ExactScalar,
    ff_rank,
    _rref,
)


class SingularUnit(Exception):
    """The chosen unit U is not invertible."""


class NotRegular(Exception):
    """No invertible element was found in the space."""


class JnMissing(Exception):
    """The space does not contain the anti-diagonal matrix J_n."""


class JordanSpace:
    """An m-dimensional space of symmetric n x n matrices, exact basis."""

    __slots__ = ("n", "m", "basis", "label")

    def __init__(self, basis, label=None, check=True):
        basis = tuple(B if isinstance(B, ExactMatrix) else ExactMatrix(B)
                      for B in basis)
        if not basis:
            raise ValueError("empty basis")
        n = basis[0].rows
        if check:
            for B in basis:
                if B.rows != n or B.cols != n:
                    raise ValueError("basis matrices must share one size")
                if not B.is_symmetric():
                    raise ValueError("basis matrices must be symmetric")
            if ff_rank([list(_vec(B)) for B in basis]) != len(basis):
                raise ValueError("basis is linearly dependent")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", len(basis))
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("JordanSpace is immutable")

    def __repr__(self):
        tag = self.label or "?"
        return f"JordanSpace({tag}, n={self.n}, m={self.m})"

    def element(self, coeffs) -> ExactMatrix:
        """The combination sum coeffs[i] * basis[i]."""
        out = self.basis[0].scale(_scal(coeffs[0]))
        for c, B in zip(coeffs[1:], self.basis[1:]):
            out = out + B.scale(_scal(c))
        return out

    def with_label(self, label) -> "JordanSpace":
        return JordanSpace(self.basis, label=label, check=False)


def _scal(c):
    return c if isinstance(c, ExactScalar) else ExactScalar(c)


def _vec(M: ExactMatrix):
    return [x for row in M.entries for x in row]


def in_span(space: JordanSpace, M: ExactMatrix):
    """Exact coordinates of M in the basis, or None if M is outside."""
    vecs = [list(_vec(B)) for B in space.basis]
    target = list(_vec(M))
    # Augmented column system: solve sum c_i vec(B_i) = vec(M).
    work = [[v[k] for v in vecs] + [target[k]] for k in range(len(target))]
    pivots = _rref(work)
    ncoef = space.m
    if ncoef in pivots:
        return None  # target column is a pivot: inconsistent
    coords = [ZERO] * ncoef
    for r, pc in enumerate(pivots):
        coords[pc] = work[r][ncoef]
    return tuple(coords)


def generic_unit(space: JordanSpace) -> ExactMatrix:
    """A deterministic invertible element of the space.

    Tries the combination with coefficients 1, 3, 9, ..., 3^(m-1) first,
    then a sweep of seeded rational combinations; raises NotRegular if all
    candidates are singular.
    """
    coeffs = [ExactScalar(3 ** i) for i in range(space.m)]
    U = space.element(coeffs)
    if U.det():
        return U
    rng = np.random.default_rng(20240917)
    for _ in range(20):
        nums = rng.integers(-9, 10, size=space.m)
        dens = rng.integers(1, 5, size=space.m)
        cand = [ExactScalar(Fraction(int(a), int(b)))
                for a, b in zip(nums, dens)]
        U = space.element(cand)
        if U.det():
            return U
    raise NotRegular("no invertible combination found")


def jordan_product(X: ExactMatrix, Y: ExactMatrix, U: ExactMatrix) -> ExactMatrix:
    """(X U^-1 Y + Y U^-1 X) / 2."""
    try:
        Uinv = U.inv()
    except ZeroDivisionError as e:
        raise SingularUnit("unit is singular") from e
    P = X @ Uinv @ Y
    return (P + P.T).scale(HALF)


def is_jordan_space(space: JordanSpace) -> bool:
    """Exact Jordan-locus membership.

    Checks closure of the basis under *_U for one generic invertible U in
    the space; for regular spaces this characterizes membership in the
    Jordan locus (the products lie back in the span iff the space is a
    Jordan algebra under *_U, and the property does not depend on U).
    """
    U = generic_unit(space)
    for i in range(space.m):
        for j in range(i, space.m):
            prod = jordan_product(space.basis[i], space.basis[j], U)
            if in_span(space, prod) is None:
                return False
    return True


def congruence(space: JordanSpace, g: ExactMatrix) -> JordanSpace:
    """The space with basis g X g^T (g must be invertible)."""
    if not g.det():
        raise ValueError("congruence by a singular matrix")
    gt = g.T
    return JordanSpace([g @ B @ gt for B in space.basis], label=None,
                       check=False)


def anti_identity(n: int) -> ExactMatrix:
    """J_n, ones on the anti-diagonal."""
    return ExactMatrix([[ONE if i + j == n - 1 else ZERO for j in range(n)]
                        for i in range(n)])


def frame_change(n: int) -> ExactMatrix:
    """The matrix Q_n with Q_n J_n Q_n^T = 1_n.

    For n = 2m:   (1/sqrt2) [[1_m, J_m], [i J_m, -i 1_m]];
    for n = 2m+1: the same with a middle row/column carrying sqrt2.
    """
    m = n // 2
    inv_r2 = SQRT2 * HALF  # 1/sqrt2
    i_s = ExactScalar(0, 1)
    Z = [[ZERO] * n for _ in range(n)]
    if n % 2 == 0:
        for k in range(m):
            Z[k][k] = inv_r2
            Z[k][m + (m - 1 - k)] = inv_r2
            Z[m + k][m - 1 - k] = i_s * inv_r2
            Z[m + k][m + k] = -i_s * inv_r2
    else:
        for k in range(m):
            Z[k][k] = inv_r2
            Z[k][m + 1 + (m - 1 - k)] = inv_r2
            Z[m + 1 + k][m - 1 - k] = i_s * inv_r2
            Z[m + 1 + k][m + 1 + k] = -i_s * inv_r2
        Z[m][m] = ONE  # sqrt2 / sqrt2
    return ExactMatrix(Z)


def to_identity_frame(space: JordanSpace) -> JordanSpace:
    """Congruence by Q_n, for spaces containing J_n.

    Sends J_n to the identity; raises JnMissing when J_n is not in the
    span.
    """
    if in_span(space, anti_identity(space.n)) is None:
        raise JnMissing("space does not contain J_n")
    return congruence(space, frame_change(space.n))


class BasisTensor:
    """Orthonormal floating-point layers spanning a JordanSpace."""

    __slots__ = ("n", "m", "layers")

    def __init__(self, n, m, layers):
        self.n = n
        self.m = m
        self.layers = [np.asarray(L, dtype=complex) for L in layers]

    def gram(self) -> np.ndarray:
        V = np.stack([L.ravel() for L in self.layers])
        return V @ V.conj().T


def orthonormal_tensor(space: JordanSpace) -> BasisTensor:
    """Gram-Schmidt on the basis under <A,B> = sum A_jk conj(B_jk)."""
    layers = []
    for B in space.basis:
        V = np.array(B.to_complex())
        for L in layers:
            V = V - np.sum(V * L.conj()) * L
        nrm = np.sqrt(np.sum(V * V.conj()).real)
        layers.append(V / nrm)
    return BasisTensor(space.n, space.m, layers)


def kron(X: ExactMatrix, Y: ExactMatrix) -> ExactMatrix:
    """Kronecker product: block matrix of X_ij * Y."""
    out = []
    for i in range(X.rows):
        for k in range(Y.rows):
            row = []
            for j in range(X.cols):
                xij = X.entries[i][j]
                row.extend(xij * y for y in Y.entries[k])
            out.append(row)
    return ExactMatrix(out)


def space_to_json(space: JordanSpace) -> dict:
    """JSON form {n, m, basis, label}; entries as [re, im] rational strings.

    Only spaces over Q(i) serialize (every catalog and witness space is);
    sqrt2 entries raise ValueError.
    """
    basis = []
    for B in space.basis:
        rows = []
        for row in B.entries:
            out = []
            for x in row:
                if not x.is_gaussian():
                    raise ValueError("space JSON covers Q(i) entries only")
                out.append([str(x.a), str(x.b)])
            rows.append(out)
        basis.append(rows)
    return {"n": space.n, "m": space.m, "basis": basis, "label": space.label}


def space_from_json(data: dict) -> JordanSpace:
    basis = []
    for rows in data["basis"]:
        basis.append(ExactMatrix(
            [[ExactScalar(Fraction(re), Fraction(im)) for re, im in row]
             for row in rows]))
    sp = JordanSpace(basis, label=data.get("label"))
    if sp.n != data["n"] or sp.m != data["m"]:
        raise ValueError("inconsistent space JSON")
    return sp
