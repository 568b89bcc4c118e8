"""Exact degeneration witnesses over the Laurent polynomial ring.

A witness certifies that one congruence orbit degenerates to another.  It
consists of an invertible substitution P(t) acting on the ambient variables
and an invertible layer change Q(t) mixing the spanning forms, both with
Laurent polynomial entries.  Applying the witness to the source basis and
letting t -> 0 must produce a basis of the destination orbit; verification
is exact (no floating point anywhere).

The shipped database covers the parametric families (cites A.1 and A.2) at
every admissible parameter choice, together with fixed certificates for the
sporadic degenerations among nets on four, five and six variables and webs
on four variables.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .catalog import BadParameters, enumerate_orbits, make_orbit, parse_label
from .core import JordanSpace, frame_change
from .exact import (HALF, I, ONE, SQRT2, ZERO, ExactMatrix, ExactScalar,
                    LaurentScalar, NegativeValuation, ff_nullity, ff_rank,
                    laurent_limit)

_LETTERS = "abcdefgh"


class WitnessAssemblyError(ValueError):
    """The raw layers admit no flat limit; no witness can be assembled."""


# ---------------------------------------------------------------------------
# Quadratic form syntax
# ---------------------------------------------------------------------------

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)([a-h])(?:([a-h])|2)")


def _form(n, text) -> ExactMatrix:
    """Gram matrix of a quadratic form such as ``2ac+b2`` or ``ad-bc``.

    A term is an optional sign and integer coefficient followed by either
    two distinct variable letters or a letter and the digit 2 (its square).
    Cross terms c*x*y contribute c/2 to the two off-diagonal slots.
    """
    rows = [[ZERO] * n for _ in range(n)]
    pos = 0
    for match in _TERM.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot parse form {text!r} at {pos}")
        pos = match.end()
        sign, coef, first, second = match.groups()
        value = ExactScalar(int(coef) if coef else 1)
        if sign == "-":
            value = -value
        i = _LETTERS.index(first)
        if second is None:
            rows[i][i] = rows[i][i] + value
        else:
            j = _LETTERS.index(second)
            rows[i][j] = rows[i][j] + value * HALF
            rows[j][i] = rows[j][i] + value * HALF
    if pos != len(text.rstrip()):
        raise ValueError(f"trailing junk in form {text!r}")
    return ExactMatrix(rows)


def identification_space(label) -> JordanSpace:
    """The printed span used by the classification for a catalog orbit.

    These are the coordinates that the fixed witnesses below are written
    in; they agree with the catalog frame up to the variable relabelling
    recorded in ``_IDENTIFICATIONS``.
    """
    key = str(label)
    forms, _ = _IDENTIFICATIONS[key]
    n = parse_label(key).n
    return JordanSpace([_form(n, f) for f in forms.split("|")])


# ---------------------------------------------------------------------------
# Frames: how printed coordinates sit inside catalog coordinates
# ---------------------------------------------------------------------------

def _perm_frame(n, sigma) -> ExactMatrix:
    """g with (g X g^T)[p, q] = X[sigma p, sigma q].

    Conjugation by g relabels catalog variable sigma(p) as printed
    variable p.
    """
    rows = [[ZERO] * n for _ in range(n)]
    for p, image in enumerate(sigma):
        rows[p][image] = ONE
    return ExactMatrix(rows)


def _a2_frame(r, k1, k2) -> ExactMatrix:
    """Grouped A2 coordinates (a.. b.. c.. d..) inside the catalog frame.

    The catalog interleaves each b_j with its partner c_j; the witness
    recipes list all b's, then all c's, then the d's.
    """
    n = r + k1 + 2 * k2
    sigma = list(range(r))
    sigma += [r + 2 * j for j in range(k2)]
    sigma += [r + 2 * j + 1 for j in range(k2)]
    sigma += [r + 2 * k2 + j for j in range(k1)]
    return _perm_frame(n, sigma)


def _a3_frame(k1, k2, k3) -> ExactMatrix:
    """Grouped A3 coordinates (a.. b.. c.. d.. e.. f..) in the catalog frame."""
    n = k1 + 2 * k2 + 3 * k3
    sigma = [3 * j for j in range(k3)]
    sigma += [3 * j + 1 for j in range(k3)]
    sigma += [3 * j + 2 for j in range(k3)]
    sigma += [3 * k3 + 2 * j for j in range(k2)]
    sigma += [3 * k3 + 2 * j + 1 for j in range(k2)]
    sigma += [3 * k3 + 2 * k2 + j for j in range(k1)]
    return _perm_frame(n, sigma)


def _b1_jframe(n) -> ExactMatrix:
    """Hyperbolic B1 coordinates (forms a^T J a, b^T J b, a.b) in the catalog frame.

    The catalog stores B1 as [[x 1, z 1], [z 1, y 1]]; conjugating by
    Diag(Q, QJ) with Q J Q^T = 1 turns the J-shaped span into that form,
    so the J-frame sits inside the catalog frame via the inverse.
    """
    h = n // 2
    q = frame_change(h)
    qj = q @ ExactMatrix([[ONE if i + j == h - 1 else ZERO for j in range(h)]
                          for i in range(h)])
    rows = []
    for i in range(h):
        rows.append(list(q.entries[i]) + [ZERO] * h)
    for i in range(h):
        rows.append([ZERO] * h + list(qj.entries[i]))
    return ExactMatrix(rows).inv()


# Printed identification spans and the relabelling sigma (printed variable
# p lives at catalog position sigma[p]); None means the frames coincide.
_IDENTIFICATIONS = {
    # nets, four variables (catalog coordinates themselves)
    "A2[1,1,1]@4": ("a2|2bc+d2|b2", None),
    "A3[1,0,1]@4": ("2ac+b2+d2|2ab|a2", None),
    "B2[1,0,2]@4": ("ab|cd|ac", None),
    "C[4,1]@4": ("ad+bc|a2|b2", None),
    "C[4,2]@4": ("ad+bc|ab|a2", None),
    # nets, five variables
    "A1[2,0,1]@5": ("a2+b2+c2|d2|e2", None),
    "A1[0,1,1]@5": ("a2+b2|c2+d2|e2", None),
    "A2[1,2,1]@5": ("a2|2bc+d2+e2|b2", None),
    "A2[1,0,2]@5": ("a2|be+cd|b2+c2", (0, 1, 3, 4, 2)),
    "A2[2,1,1]@5": ("a2+b2|2cd+e2|c2", None),
    "A2[3,0,1]@5": ("a2+b2+c2|de|d2", None),
    "A3[2,0,1]@5": ("2ac+b2+d2+e2|ab|a2", None),
    "A3[0,1,1]@5": ("2ac+b2+2de|2ab+d2|a2", None),
    "B2[1,1,2]@5": ("ab|2cd+e2|ac", None),
    "C[5,1]@5": ("2ae+2bd+c2|a2|b2", None),
    "C[5,2]@5": ("2ae+2bd+c2|ab|a2", None),
    # nets, six variables
    "A1[3,0,1]@6": ("a2+b2+c2+d2|e2|f2", None),
    "A1[1,1,1]@6": ("a2+b2+c2|d2+e2|f2", None),
    "A1[0,0,2]@6": ("a2+b2|c2+d2|e2+f2", None),
    "A2[1,3,1]@6": ("a2|2bc+d2+e2+f2|b2", None),
    "A2[1,1,2]@6": ("a2|2be+2cd+f2|b2+c2", (0, 1, 3, 4, 2, 5)),
    "A2[2,2,1]@6": ("a2+b2|2cd+e2+f2|c2", None),
    "A2[2,0,2]@6": ("a2+b2|cf+de|c2+d2", (0, 1, 2, 4, 5, 3)),
    "A2[3,1,1]@6": ("a2+b2+c2|2de+f2|d2", None),
    "A2[4,0,1]@6": ("a2+b2+c2+d2|ef|e2", None),
    "B1@6": ("a2+b2+c2|d2+e2+f2|ad+be+cf", None),
    "B2[1,2,2]@6": ("ab|2cd+e2+f2|ac", None),
    "B2[1,0,3]@6": ("2ac+b2|2df+e2|ad", None),
    "A3[3,0,1]@6": ("2ac+b2+d2+e2+f2|ab|a2", None),
    "A3[1,1,1]@6": ("2ac+b2+2de+f2|2ab+d2|a2", None),
    "A3[0,0,2]@6": ("2ac+b2+2df+e2|ab+de|a2+d2", None),
    "C[6,1]@6": ("af+be+cd|a2+c2|b2+c2", None),
    "C[6,2]@6": ("af+be+cd|a2+c2|ab", None),
    "C[6,3]@6": ("af+be+cd|2ac+b2|ab", None),
    "C[6,4]@6": ("af+be+cd|a2+b2|c2", None),
    "C[6,5]@6": ("af+be+cd|2ab+c2|a2", None),
    "C[6,6]@6": ("af+be+cd|ab|ac", None),
    "C[6,7]@6": ("af+be+cd|a2|b2", None),
    "C[6,8]@6": ("af+be+cd|ab|a2", None),
    # webs, four variables
    "wA1[0,0,0,1]@4": ("a2|b2|c2|d2", None),
    "wA2[0,1,0,1]@4": ("a2|b2|cd|c2", None),
    "wA3[0,1,0,1]@4": ("ab|a2|cd|c2", None),
    "wA4[1,0,0,1]@4": ("a2|2bd+c2|bc|b2", None),
    "wA5[0,0,0,1]@4": ("ad+bc|2ac+b2|ab|a2", None),
    "wB1[2,1]@4": ("a2+b2|c2|d2|cd", None),
    "wC1@4": ("a2+b2|c2+d2|ac+bd|ad-bc", None),
    "E1[4,1]@4": ("2ac+d2|b2|ab|a2", None),
    "E1[4,2]@4": ("ac|b2+d2|ab|a2", None),
    "E2[4]@4": ("ab|cd|ac|a2", None),
    "E3[4]@4": ("2ac+b2+d2|ad|ab|a2", None),
    "F[4]@4": ("ad+bc|a2|b2|ab", None),
}


def _frame(label) -> ExactMatrix:
    key = str(label)
    n = parse_label(key).n
    entry = _IDENTIFICATIONS.get(key)
    if entry is None or entry[1] is None:
        return ExactMatrix.identity(n)
    return _perm_frame(n, entry[1])


# ---------------------------------------------------------------------------
# Witness type
# ---------------------------------------------------------------------------

def _laurent(x, exp=0) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x.shift(exp) if exp else x
    return LaurentScalar.of(x, exp)


def _laurent_matrix(mat) -> ExactMatrix:
    return mat.map(_laurent)


@dataclass(frozen=True)
class Witness:
    """An exact degeneration certificate src ~> dst.

    subst is the n x n variable substitution P(t), layer_change the m x m
    form mixing Q(t); both have Laurent entries and nonzero determinant
    (checked on construction).  src and dst are catalog label strings, or
    JordanSpace values for one-off certificates.  cite records where the
    recipe comes from.
    """

    n: int
    m: int
    subst: ExactMatrix
    layer_change: ExactMatrix
    src: object
    dst: object
    cite: str = ""

    def __post_init__(self):
        if self.subst.rows != self.n or self.subst.cols != self.n:
            raise ValueError("substitution has the wrong shape")
        if self.layer_change.rows != self.m or self.layer_change.cols != self.m:
            raise ValueError("layer change has the wrong shape")
        if not self.subst.det():
            raise ValueError("substitution is singular")
        if not self.layer_change.det():
            raise ValueError("layer change is singular")

    def to_json(self):
        def enc(mat):
            return [[_laurent(x).to_json() for x in row]
                    for row in mat.entries]

        return {
            "src": str(self.src),
            "dst": str(self.dst),
            "cite": self.cite,
            "subst": enc(self.subst),
            "layer_change": enc(self.layer_change),
        }

    @classmethod
    def from_json(cls, data) -> "Witness":
        def dec(rows):
            return ExactMatrix([[LaurentScalar.from_json(x) for x in row]
                                for row in rows])

        subst = dec(data["subst"])
        layer = dec(data["layer_change"])
        return cls(subst.rows, layer.rows, subst, layer,
                   data["src"], data["dst"], data.get("cite", ""))


def identity_witness(n, m) -> Witness:
    """The trivial certificate of any orbit to itself."""
    return Witness(n, m, ExactMatrix.identity(n, one=_laurent(ONE),
                                              zero=_laurent(ZERO)),
                   ExactMatrix.identity(m, one=_laurent(ONE),
                                        zero=_laurent(ZERO)),
                   "identity", "identity", "identity")


def _resolve(space_or_label) -> JordanSpace:
    if isinstance(space_or_label, JordanSpace):
        return space_or_label
    return make_orbit(space_or_label)


def apply_witness(space, w: Witness):
    """The m transformed layers Y_i(t) = sum_j P X_j P^T Q[j, i]."""
    space = _resolve(space)
    if space.n != w.n or space.m != w.m:
        raise ValueError("witness shape does not match the space")
    p = w.subst
    moved = [p @ X @ p.T for X in space.basis]
    out = []
    for i in range(w.m):
        acc = ExactMatrix.zeros(w.n, w.n, zero=_laurent(ZERO))
        for j in range(w.m):
            acc = acc + moved[j].scale(w.layer_change[j, i])
        out.append(acc)
    return out


def _coords(mat):
    """Upper-triangle coordinates of a symmetric matrix."""
    return [mat[i, j] for i in range(mat.rows) for j in range(i, mat.cols)]


def check_witness(src, w: Witness, dst):
    """Verify a witness; returns (ok, reason).

    The three failure modes are reported by name: an entry with a pole at
    t = 0 ("negative valuation"), limits that do not stay linearly
    independent ("dependent limits"), and limits spanning some other orbit
    ("wrong span").
    """
    src = _resolve(src)
    dst = _resolve(dst)
    moved = apply_witness(src, w)
    limits = []
    for Y in moved:
        try:
            limits.append(Y.map(laurent_limit))
        except NegativeValuation:
            return False, "negative valuation"
    rows = [_coords(L) for L in limits]
    if ff_rank(ExactMatrix(rows)) != w.m:
        return False, "dependent limits"
    stacked = rows + [_coords(B) for B in dst.basis]
    if ff_rank(ExactMatrix(stacked)) != w.m:
        return False, "wrong span"
    return True, ""


def verify_witness(src, w: Witness, dst) -> bool:
    """True when the flat limit of the moved source is exactly dst."""
    ok, _ = check_witness(src, w, dst)
    return ok


# ---------------------------------------------------------------------------
# Assembly: substitution recipes -> catalog-frame witnesses
# ---------------------------------------------------------------------------

def _subst_matrix(n, images) -> ExactMatrix:
    """P(t) for a variable substitution.

    images maps a source variable index to a list of (coefficient,
    t-exponent, destination variable index) terms; unmentioned variables
    map to themselves.  With rows of M holding the coefficients of each
    image, the Gram matrices transform as M^T X M, so P = M^T.
    """
    rows = [[_laurent(ZERO)] * n for _ in range(n)]
    for i in range(n):
        terms = images.get(i, [(ONE, 0, i)])
        for coef, exp, j in terms:
            rows[i][j] = rows[i][j] + _laurent(coef, exp)
    return ExactMatrix(rows).T


def _derive_layer_change(raw, m):
    """Flat-limit layer change for raw transformed layers.

    Repeatedly rescales every layer to valuation zero and, while the
    leading coefficients are linearly dependent, replaces the highest
    layer in a dependency by the combination (which has strictly larger
    valuation).  Column operations are mirrored into Q, which therefore
    stays invertible.  Terminates with independent limits or raises.
    """
    ys = list(raw)
    qcols = [[_laurent(ONE) if r == c else _laurent(ZERO) for r in range(m)]
             for c in range(m)]
    for _ in range(200):
        for j in range(m):
            vals = [e.valuation() for row in ys[j].entries for e in row if e]
            if not vals:
                raise WitnessAssemblyError("a layer vanished identically")
            v = min(vals)
            if v:
                ys[j] = ys[j].map(lambda e: e.shift(-v))
                qcols[j] = [x.shift(-v) for x in qcols[j]]
        leads = [[e.coeff(0) for e in _coords(y)] for y in ys]
        nullity, basis = ff_nullity(ExactMatrix(leads).T)
        if nullity == 0:
            return ExactMatrix([[qcols[c][r] for c in range(m)]
                                for r in range(m)])
        lam = basis[0]
        pivot = max(j for j in range(m) if lam[j])
        combo = ExactMatrix.zeros(ys[0].rows, ys[0].cols, zero=_laurent(ZERO))
        newcol = [_laurent(ZERO)] * m
        for j in range(m):
            if lam[j]:
                combo = combo + ys[j].scale(lam[j])
                newcol = [x + lam[j] * y for x, y in zip(newcol, qcols[j])]
        ys[pivot] = combo
        qcols[pivot] = newcol
    raise WitnessAssemblyError("flat limit did not stabilise")


def _build(src_label, dst_label, images, cite, src_frame=None, dst_frame=None):
    """Assemble a catalog-frame witness from a printed substitution recipe."""
    src = parse_label(str(src_label))
    dst = parse_label(str(dst_label))
    if src.n != dst.n:
        raise ValueError("witness endpoints live in different ambient spaces")
    n = src.n
    gs = src_frame if src_frame is not None else _frame(src)
    gd = dst_frame if dst_frame is not None else _frame(dst)
    p_id = _subst_matrix(n, images)
    p = _laurent_matrix(gd.inv()) @ p_id @ _laurent_matrix(gs)
    basis = make_orbit(src).basis
    raw = [p @ X @ p.T for X in basis]
    q = _derive_layer_change(raw, len(basis))
    return Witness(n, len(basis), p, q, str(src), str(dst), cite)


# ---------------------------------------------------------------------------
# Parametric families
# ---------------------------------------------------------------------------

def _need(cond, msg):
    if not cond:
        raise BadParameters(msg)


def _need_counts(params):
    _need(all(isinstance(k, int) and k >= 0 for k in params),
          "family parameters must be non-negative integers")


def _fam_a1(which, k1, k2, k3):
    """A1 -> A2: merge one square block into a rank-one pencil block."""
    _need_counts((k1, k2, k3))
    _need(k3 >= 1, "A1 needs k3 >= 1")
    n = k1 + 2 * k2 + 3 * k3
    n1, n2, n3 = k1 + k2 + k3, k2 + k3, k3

    def sa(j):
        return j - 1

    def sb(j):
        return n1 + j - 1

    def sc(j):
        return n1 + n2 + j - 1

    if which == "a":
        r, m1, m2 = k3, k1, k2 + k3
    elif which == "b":
        r, m1, m2 = k2 + k3, k1 + k2, k3
    else:
        r, m1, m2 = k1 + k2 + k3, k2, k3

    def da(j):
        return j - 1

    def db(j):
        return r + j - 1

    def dc(j):
        return r + m2 + j - 1

    def dd(j):
        return r + 2 * m2 + j - 1

    images = {}
    if which == "a":
        for j in range(1, n1 + 1):
            if j <= m2:
                images[sa(j)] = [(ONE, 0, db(j)), (ONE, 2, dc(j))]
            else:
                images[sa(j)] = [(ONE, 1, dd(j - m2))]
        for j in range(1, n2 + 1):
            images[sb(j)] = [(ONE, 0, db(j))]
        for j in range(1, n3 + 1):
            images[sc(j)] = [(ONE, 0, da(j))]
    elif which == "b":
        for j in range(1, n1 + 1):
            if j <= k3:
                images[sa(j)] = [(ONE, 0, db(j)), (ONE, 2, dc(j))]
            else:
                images[sa(j)] = [(ONE, 1, dd(j - k3))]
        for j in range(1, n2 + 1):
            images[sb(j)] = [(ONE, 0, da(j))]
        for j in range(1, n3 + 1):
            images[sc(j)] = [(ONE, 0, db(j))]
    else:
        for j in range(1, n1 + 1):
            images[sa(j)] = [(ONE, 0, da(j))]
        for j in range(1, n2 + 1):
            if j <= k3:
                images[sb(j)] = [(ONE, 0, db(j)), (ONE, 2, dc(j))]
            else:
                images[sb(j)] = [(ONE, 1, dd(j - k3))]
        for j in range(1, n3 + 1):
            images[sc(j)] = [(ONE, 0, db(j))]
    return _build(f"A1[{k1},{k2},{k3}]@{n}", f"A2[{r},{m1},{m2}]@{n}",
                  images, f"A.1({which})",
                  src_frame=ExactMatrix.identity(n),
                  dst_frame=_a2_frame(r, m1, m2))


def _fam_a2(which, r, k1, k2):
    """A2 -> A2 or A2 -> A3 moves inside the rank-one pencil family."""
    _need_counts((r, k1, k2))
    _need(r >= 1 and k2 >= 1, "A2 needs r >= 1 and k2 >= 1")
    n = r + k1 + 2 * k2

    def sa(j):
        return j - 1

    def sb(j):
        return r + j - 1

    def sc(j):
        return r + k2 + j - 1

    def sd(j):
        return r + 2 * k2 + j - 1

    images = {}
    if which == "d":
        _need(k2 >= 2, "A.1(d) needs k2 >= 2")
        m2 = k2 - 1

        def db(j):
            return r + j - 1

        def dc(j):
            return r + m2 + j - 1

        def dd(j):
            return r + 2 * m2 + j - 1

        for j in range(1, r + 1):
            images[sa(j)] = [(ONE, 0, j - 1)]
        for j in range(1, k2):
            images[sb(j)] = [(ONE, 0, db(j))]
            images[sc(j)] = [(ONE, 2, dc(j))]
        images[sb(k2)] = [(ONE, 1, dd(k1 + 1)), (I, 1, dd(k1 + 2))]
        images[sc(k2)] = [(HALF, 1, dd(k1 + 1)), (-(I * HALF), 1, dd(k1 + 2))]
        for j in range(1, k1 + 1):
            images[sd(j)] = [(ONE, 1, dd(j))]
        dst = f"A2[{r},{k1 + 2},{k2 - 1}]@{n}"
        dframe = _a2_frame(r, k1 + 2, k2 - 1)
    elif which == "e":
        _need(r <= k2, "A.1(e) needs r <= k2")
        p1, p2, p3 = k1, k2 - r, r

        def da(j):
            return j - 1

        def db(j):
            return p3 + j - 1

        def dc(j):
            return 2 * p3 + j - 1

        def dd(j):
            return 3 * p3 + j - 1

        def de(j):
            return 3 * p3 + p2 + j - 1

        def df(j):
            return 3 * p3 + 2 * p2 + j - 1

        for j in range(1, r + 1):
            images[sa(j)] = [(ONE, 0, da(j))]
        for j in range(1, k2 + 1):
            if j <= r:
                images[sb(j)] = [(ONE, 0, da(j)), (ONE, 2, db(j))]
                images[sc(j)] = [(ONE, 0, db(j)), (ONE, 2, dc(j))]
            else:
                images[sb(j)] = [(ONE, 1, dd(j - r))]
                images[sc(j)] = [(HALF, -1, dd(j - r)), (ONE, 1, de(j - r))]
        for j in range(1, k1 + 1):
            images[sd(j)] = [(ONE, 1, df(j))]
        dst = f"A3[{p1},{p2},{p3}]@{n}"
        dframe = _a3_frame(p1, p2, p3)
    elif which == "f":
        _need(k2 <= r <= k1 + k2, "A.1(f) needs k2 <= r <= k1 + k2")
        p1, p2, p3 = k1 + k2 - r, r - k2, k2

        def da(j):
            return j - 1

        def db(j):
            return p3 + j - 1

        def dc(j):
            return 2 * p3 + j - 1

        def dd(j):
            return 3 * p3 + j - 1

        def de(j):
            return 3 * p3 + p2 + j - 1

        def df(j):
            return 3 * p3 + 2 * p2 + j - 1

        for j in range(1, r + 1):
            if j <= k2:
                images[sa(j)] = [(ONE, 0, da(j)), (-ONE, 2, db(j))]
            else:
                images[sa(j)] = [(I, 1, dd(j - k2))]
        for j in range(1, k2 + 1):
            images[sb(j)] = [(ONE, 0, da(j))]
            images[sc(j)] = [(ONE, 0, db(j)), (ONE, 2, dc(j))]
        for j in range(1, k1 + 1):
            if j <= r - k2:
                images[sd(j)] = [(ONE, 0, dd(j)), (ONE, 2, de(j))]
            else:
                images[sd(j)] = [(ONE, 1, df(j - (r - k2)))]
        dst = f"A3[{p1},{p2},{p3}]@{n}"
        dframe = _a3_frame(p1, p2, p3)
    else:
        _need(r >= k1 + k2, "A.1(g) needs r >= k1 + k2")
        p1, p2, p3 = r - k1 - k2, k1, k2

        def da(j):
            return j - 1

        def db(j):
            return p3 + j - 1

        def dc(j):
            return 2 * p3 + j - 1

        def dd(j):
            return 3 * p3 + j - 1

        def de(j):
            return 3 * p3 + p2 + j - 1

        def df(j):
            return 3 * p3 + 2 * p2 + j - 1

        for j in range(1, r + 1):
            if j <= k2:
                images[sa(j)] = [(ONE, 0, da(j)), (ONE, 2, db(j)),
                                 (ONE, 4, dc(j))]
            elif j <= k1 + k2:
                images[sa(j)] = [(ONE, 1, dd(j - k2)), (ONE, 3, de(j - k2))]
            else:
                images[sa(j)] = [(ONE, 2, df(j - k1 - k2))]
        for j in range(1, k2 + 1):
            images[sb(j)] = [(ONE, 0, da(j))]
            images[sc(j)] = [(ONE, 0, db(j))]
        for j in range(1, k1 + 1):
            images[sd(j)] = [(ONE, 0, dd(j))]
        dst = f"A3[{p1},{p2},{p3}]@{n}"
        dframe = _a3_frame(p1, p2, p3)
    return _build(f"A2[{r},{k1},{k2}]@{n}", dst, images, f"A.1({which})",
                  src_frame=_a2_frame(r, k1, k2), dst_frame=dframe)


def _fam_a3(which, k1, k2, k3):
    """A3 -> A3 moves between Jordan-block shape parameters."""
    _need_counts((k1, k2, k3))
    _need(k3 >= 1, "A3 needs k3 >= 1")
    n = k1 + 2 * k2 + 3 * k3

    def sa(j):
        return j - 1

    def sb(j):
        return k3 + j - 1

    def sc(j):
        return 2 * k3 + j - 1

    def sd(j):
        return 3 * k3 + j - 1

    def se(j):
        return 3 * k3 + k2 + j - 1

    def sf(j):
        return 3 * k3 + 2 * k2 + j - 1

    images = {}
    if which == "h":
        _need(k3 >= 2, "A.1(h) needs k3 >= 2")
        p1, p2, p3 = k1 + 1, k2 + 1, k3 - 1
    elif which == "i":
        _need(k2 >= 1, "A.1(i) needs k2 >= 1")
        p1, p2, p3 = k1 + 2, k2 - 1, k3
    else:
        _need(k1 >= 1 and k3 >= 2, "A.1(j) needs k1 >= 1 and k3 >= 2")
        p1, p2, p3 = k1 - 1, k2 + 2, k3 - 1

    def da(j):
        return j - 1

    def db(j):
        return p3 + j - 1

    def dc(j):
        return 2 * p3 + j - 1

    def dd(j):
        return 3 * p3 + j - 1

    def de(j):
        return 3 * p3 + p2 + j - 1

    def df(j):
        return 3 * p3 + 2 * p2 + j - 1

    if which == "h":
        for j in range(1, k3):
            images[sa(j)] = [(ONE, 0, da(j))]
            images[sb(j)] = [(ONE, 0, db(j))]
            images[sc(j)] = [(ONE, 0, dc(j))]
        images[sa(k3)] = [(ONE, 1, dd(k2 + 1))]
        images[sb(k3)] = [(HALF, -1, dd(k2 + 1)), (ONE, 0, df(k1 + 1))]
        images[sc(k3)] = [(ExactScalar(Fraction(-1, 8)), -3, dd(k2 + 1)),
                          (-HALF, -2, df(k1 + 1)), (ONE, -1, de(k2 + 1))]
        for j in range(1, k2 + 1):
            images[sd(j)] = [(ONE, 0, dd(j))]
            images[se(j)] = [(ONE, 0, de(j))]
        for j in range(1, k1 + 1):
            images[sf(j)] = [(ONE, 0, df(j))]
    elif which == "i":
        for j in range(1, k3 + 1):
            images[sa(j)] = [(ONE, 0, da(j))]
            images[sb(j)] = [(ONE, 0, db(j))]
            images[sc(j)] = [(ONE, 0, dc(j))]
        for j in range(1, k2):
            images[sd(j)] = [(ONE, 0, dd(j))]
            images[se(j)] = [(ONE, 0, de(j))]
        images[sd(k2)] = [(ONE, 1, df(k1 + 1)), (I, 1, df(k1 + 2))]
        images[se(k2)] = [(HALF, -1, df(k1 + 1)), (-(I * HALF), -1,
                                                   df(k1 + 2))]
        for j in range(1, k1 + 1):
            images[sf(j)] = [(ONE, 0, df(j))]
    else:
        for j in range(1, k3):
            images[sa(j)] = [(ONE, 0, da(j))]
            images[sb(j)] = [(ONE, 0, db(j))]
            images[sc(j)] = [(ONE, 0, dc(j))]
        images[sa(k3)] = [(ONE, 1, dd(k2 + 1)), (I, 1, dd(k2 + 2))]
        images[sb(k3)] = [(HALF, -1, dd(k2 + 1)), (-(I * HALF), -1,
                                                   dd(k2 + 2))]
        images[sc(k3)] = [(HALF, -1, de(k2 + 1)), (-(I * HALF), -1,
                                                   de(k2 + 2))]
        for j in range(1, k2 + 1):
            images[sd(j)] = [(ONE, 0, dd(j))]
            images[se(j)] = [(ONE, 0, de(j))]
        for j in range(1, k1):
            images[sf(j)] = [(ONE, 0, df(j))]
        images[sf(k1)] = [(I * HALF, -1, dd(k2 + 1)),
                          (HALF, -1, dd(k2 + 2)),
                          (-I, 1, de(k2 + 1)), (ONE, 1, de(k2 + 2))]
    return _build(f"A3[{k1},{k2},{k3}]@{n}", f"A3[{p1},{p2},{p3}]@{n}",
                  images, f"A.1({which})",
                  src_frame=_a3_frame(k1, k2, k3),
                  dst_frame=_a3_frame(p1, p2, p3))


def _fam_b1_to_b2(n, k):
    """A.2(a): scale hyperbolic coordinates to cut the pairing down to rank k."""
    _need(isinstance(n, int) and isinstance(k, int), "parameters must be ints")
    _need(n >= 4 and n % 2 == 0, "A.2(a) needs even n >= 4")
    h = n // 2
    _need(1 <= k <= h // 2, "A.2(a) needs 1 <= k <= n/4")
    images = {}
    for i in range(1, h + 1):
        exp = 0 if i <= k else (1 if i <= h - k else 2)
        images[i - 1] = [(ONE, exp, i - 1)]
    return _build(f"B1@{n}", f"B2[{k},0,{h}]@{n}", images, "A.2(a)",
                  src_frame=_b1_jframe(n))


def _fam_b2_drop(k, l1, l2):
    """A.2(b): decrease the pairing rank of a B2 space by one.

    The published scaling window is off by one at its right edge; the
    middle band here runs through l2 - k + 1 so that every hyperbolic
    pair scales uniformly by t^2.
    """
    _need_counts((k, l1, l2))
    _need(l2 >= 2 and 1 <= k <= l2 // 2, "B2 needs l2 >= 2, 1 <= k <= l2/2")
    _need(k >= 2, "A.2(b) needs k >= 2")
    n = l1 + 2 * l2
    images = {}
    for i in range(1, l2 + 1):
        exp = 0 if i < k else (1 if i <= l2 - k + 1 else 2)
        images[i - 1] = [(ONE, exp, i - 1)]
    return _build(f"B2[{k},{l1},{l2}]@{n}", f"B2[{k - 1},{l1},{l2}]@{n}",
                  images, "A.2(b)")


_FAMILY_BUILDERS = {
    "A.1(a)": lambda *p: _fam_a1("a", *p),
    "A.1(b)": lambda *p: _fam_a1("b", *p),
    "A.1(c)": lambda *p: _fam_a1("c", *p),
    "A.1(d)": lambda *p: _fam_a2("d", *p),
    "A.1(e)": lambda *p: _fam_a2("e", *p),
    "A.1(f)": lambda *p: _fam_a2("f", *p),
    "A.1(g)": lambda *p: _fam_a2("g", *p),
    "A.1(h)": lambda *p: _fam_a3("h", *p),
    "A.1(i)": lambda *p: _fam_a3("i", *p),
    "A.1(j)": lambda *p: _fam_a3("j", *p),
    "A.2(a)": lambda *p: _fam_b1_to_b2(*p),
    "A.2(b)": lambda *p: _fam_b2_drop(*p),
}


def family_witness(cite, *params) -> Witness:
    """Instantiate a parametric witness; BadParameters when inadmissible."""
    builder = _FAMILY_BUILDERS.get(cite)
    if builder is None:
        raise BadParameters(f"unknown family witness {cite!r}")
    try:
        return builder(*params)
    except TypeError as exc:
        raise BadParameters(str(exc)) from None



# ---------------------------------------------------------------------------
# Fixed certificates
# ---------------------------------------------------------------------------

_IH = I * HALF
_RT = SQRT2 * HALF          # 1/sqrt(2)
_IRT = I * _RT

# Each record: (cite, src, dst, printed substitution, source-frame flag).
# The substitution maps printed source variables to combinations
# (coefficient, power of t, printed destination variable); unlisted
# variables map to themselves.  Flag "J" marks a hyperbolic-frame source.
_FIXED = (
    # nets on four variables
    ("S4(a)", "A2[1,1,1]@4", "C[4,1]@4",
     {"d": [(1, -1, "a"), (1, 1, "d")]}, ""),
    ("S4(b)", "B2[1,0,2]@4", "C[4,2]@4",
     {"a": [(1, 0, "a"), (-1, 2, "c")], "b": [(1, 0, "b"), (-1, 2, "d")],
      "c": [(1, 0, "a")], "d": [(1, 0, "b")]}, ""),
    ("S4(c)", "A3[1,0,1]@4", "C[4,2]@4",
     {"c": [(1, 2, "d")], "d": [(I, 0, "b"), (-I, 2, "c")]}, ""),
    ("S4(d)", "C[4,1]@4", "C[4,2]@4",
     {"b": [(1, 0, "a"), (1, 2, "b")], "d": [(-1, 0, "c"), (1, 2, "d")]}, ""),
    ("S4(e)", "B1@4", "C[4,1]@4",
     {"a": [(1, 0, "a")], "b": [(1, 0, "a"), (I, 2, "c")],
      "c": [(I, 0, "b"), (HALF, 2, "d")],
      "d": [(-I, 0, "b"), (HALF, 2, "d")]}, "J"),
    # nets on five variables
    ("A.3(a)", "A2[1,2,1]@5", "C[5,1]@5",
     {"c": [(1, 0, "d")], "d": [(1, 0, "c")],
      "e": [(1, -1, "a"), (1, 1, "e")]}, ""),
    ("A.3(b)", "A3[2,0,1]@5", "C[5,2]@5",
     {"c": [(1, 2, "e")], "d": [(1, 1, "c")],
      "e": [(I, 0, "b"), (-I, 2, "d")]}, ""),
    ("A.3(c)", "A3[0,1,1]@5", "C[5,1]@5",
     {"b": [(1, 1, "c")], "c": [(1, 2, "e")], "d": [(1, 0, "b")],
      "e": [(1, 2, "d")]}, ""),
    ("A.3(d)", "B2[1,1,2]@5", "C[5,2]@5",
     {"a": [(1, 0, "a"), (-1, 2, "d")], "b": [(1, 0, "b"), (-1, 2, "e")],
      "c": [(1, 0, "a")], "d": [(1, 0, "b")], "e": [(1, 1, "c")]}, ""),
    ("A.3(e)", "C[5,1]@5", "C[5,2]@5",
     {"b": [(1, 0, "a"), (1, 2, "b")], "c": [(1, 1, "c")],
      "e": [(-1, 0, "d"), (1, 2, "e")]}, ""),
    # nets on six variables
    ("A.4(a)", "A1[0,0,2]@6", "C[6,1]@6",
     {"a": [(1, 0, "c")], "c": [(1, 0, "a")],
      "d": [(1, 0, "c"), (1, 1, "d")], "e": [(1, 0, "b"), (1, 1, "e")],
      "f": [(I, 0, "a"), (-I, 1, "f")]}, ""),
    ("A.4(b)", "A2[1,3,1]@6", "C[6,7]@6",
     {"c": [(1, 0, "e")], "d": [(1, -1, "a"), (1, 1, "f")],
      "e": [(I, -1, "c")], "f": [(1, -1, "c"), (1, 1, "d")]}, ""),
    ("A.4(c)", "A2[1,1,2]@6", "C[6,4]@6",
     {"a": [(1, 0, "c")], "c": [(1, 0, "a")], "d": [(1, 0, "f")],
      "e": [(1, 0, "e")], "f": [(1, -1, "c"), (1, 1, "d")]}, ""),
    ("A.4(d)", "A2[2,2,1]@6", "C[6,4]@6",
     {"e": [(1, -1, "b"), (1, 1, "e")],
      "f": [(1, -1, "a"), (1, 1, "f")]}, ""),
    ("A.4(e)", "A2[2,0,2]@6", "C[6,2]@6",
     {"a": [(1, 0, "a"), (1, 0, "b"), (1, 1, "e"), (1, 1, "f")],
      "b": [(I, 0, "a"), (-I, 0, "b"), (I, 1, "e"), (-I, 1, "f")],
      "c": [(1, 0, "a")], "d": [(1, 0, "c")], "e": [(-1, 1, "d")],
      "f": [(1, 0, "b")]}, ""),
    ("A.4(f)", "B2[1,2,2]@6", "C[6,6]@6",
     {"d": [(1, 1, "d")],
      "e": [(1, 0, "a"), (1, 0, "b"), (HALF, 1, "f"), (HALF, 1, "e")],
      "f": [(I, 0, "a"), (-I, 0, "b"), (-_IH, 1, "f"),
            (_IH, 1, "e")]}, ""),
    ("A.4(g)", "B2[1,0,3]@6", "C[6,4]@6",
     {"a": [(1, 0, "a"), (I, 0, "b")], "b": [(1, 0, "c"), (1, 1, "d")],
      "c": [(HALF, 1, "f"), (-_IH, 1, "e")],
      "d": [(1, 0, "a"), (-I, 0, "b")], "e": [(1, 0, "c")],
      "f": [(-HALF, 1, "f"), (-_IH, 1, "e")]}, ""),
    ("A.4(h)", "A3[3,0,1]@6", "C[6,8]@6",
     {"c": [(1, 2, "f")], "d": [(I, 0, "b"), (-I, 2, "e")],
      "e": [(_RT, 1, "d"), (_RT, 1, "c")],
      "f": [(_IRT, 1, "d"), (-_IRT, 1, "c")]}, ""),
    ("A.4(i)", "A3[1,1,1]@6", "C[6,5]@6",
     {"c": [(1, 1, "f")], "d": [(1, 0, "c")], "e": [(1, 1, "d")],
      "f": [(I, 0, "b"), (-I, 1, "e")]}, ""),
    ("A.4(j)", "A3[0,0,2]@6", "C[6,3]@6",
     {"a": [(1, 0, "b")],
      "b": [(I * (-2), 0, "c"), (1, 1, "b"), (_IH, 2, "d")],
      "c": [(I * 2, 1, "c"), (-I, 1, "f"), (1, 2, "e"), (-HALF, 2, "b")],
      "d": [(I, 0, "b"), (1, 1, "a")], "e": [(2, 0, "c")],
      "f": [(1, 1, "f")]}, ""),
    ("A.4(k)", "C[6,1]@6", "C[6,2]@6",
     {"a": [(1, 0, "a"), (1, 1, "b")], "b": [(1, 0, "a")],
      "d": [(1, 1, "d")], "e": [(-1, 0, "e"), (1, 1, "f")],
      "f": [(1, 0, "e")]}, ""),
    ("A.4(l)", "C[6,2]@6", "C[6,3]@6",
     {"c": [(I, 0, "a"), (I, 1, "b"), (I, 2, "c")], "d": [(-I, 0, "d")],
      "e": [(-1, 1, "d"), (1, 2, "e")],
      "f": [(-1, 0, "d"), (1, 2, "f")]}, ""),
    ("A.4(m)", "C[6,2]@6", "C[6,4]@6",
     {"a": [(1, 1, "a"), (-I, 1, "b")], "b": [(1, 0, "a"), (I, 0, "b")],
      "d": [(1, 2, "d")], "e": [(HALF, 2, "f"), (-_IH, 2, "e")],
      "f": [(HALF, 1, "f"), (_IH, 1, "e")]}, ""),
    ("A.4(n)", "C[6,3]@6", "C[6,5]@6",
     {"b": [(1, 0, "a"), (1, 1, "c")], "c": [(-HALF, 1, "c"), (1, 2, "b")],
      "d": [(1, 0, "e")], "e": [(HALF, 0, "e"), (1, 1, "d")],
      "f": [(-HALF, 0, "e"), (-1, 1, "d"), (1, 2, "f")]}, ""),
    ("A.4(o)", "C[6,3]@6", "C[6,6]@6",
     {"b": [(1, 1, "b")], "d": [(1, 1, "d")], "f": [(1, 1, "f")]}, ""),
    ("A.4(p)", "C[6,4]@6", "C[6,5]@6",
     {"a": [(1, 0, "a"), (1, 2, "b")], "b": [(1, 1, "c")],
      "c": [(1, 0, "a")], "d": [(-1, 0, "e"), (1, 2, "f")],
      "e": [(1, 1, "d")], "f": [(1, 0, "e")]}, ""),
    ("A.4(q)", "C[6,5]@6", "C[6,7]@6",
     {"a": [(1, 1, "a")], "b": [(1, 0, "c")], "c": [(1, 0, "b")],
      "d": [(1, 1, "e")], "e": [(1, 1, "d")]}, ""),
    ("A.4(r)", "C[6,6]@6", "C[6,8]@6",
     {"b": [(1, 0, "a"), (1, 1, "c")], "c": [(1, 0, "b")],
      "d": [(1, 1, "e")], "e": [(1, 0, "d")],
      "f": [(-1, 0, "d"), (1, 1, "f")]}, ""),
    ("A.4(s)", "C[6,7]@6", "C[6,8]@6",
     {"b": [(1, 0, "a"), (1, 1, "b")], "d": [(1, 1, "d")],
      "f": [(-1, 0, "e"), (1, 1, "f")]}, ""),
    # webs on four variables
    ("A.5(a)", "wA1[0,0,0,1]@4", "wA2[0,1,0,1]@4",
     {"d": [(1, 0, "c"), (1, 1, "d")]}, ""),
    ("A.5(b)", "wA2[0,1,0,1]@4", "wA3[0,1,0,1]@4",
     {"b": [(1, 0, "a"), (1, 1, "b")]}, ""),
    ("A.5(c)", "wA2[0,1,0,1]@4", "wA4[1,0,0,1]@4",
     {"b": [(1, 0, "b"), (1, 1, "c"), (1, 2, "d")], "c": [(1, 0, "b")],
      "d": [(1, 0, "c")]}, ""),
    ("A.5(d)", "wA3[0,1,0,1]@4", "wA5[0,0,0,1]@4",
     {"c": [(1, 0, "a"), (1, 1, "b"), (1, 2, "c")],
      "d": [(1, 0, "b"), (2, 1, "c"), (1, 2, "d")]}, ""),
    ("A.5(e)", "wA4[1,0,0,1]@4", "wA5[0,0,0,1]@4",
     {"a": [(1, 0, "a"), (1, 1, "b"), (1, 2, "c"), (1, 3, "d")],
      "b": [(1, 0, "a")], "c": [(1, 0, "b")], "d": [(1, 0, "c")]}, ""),
    ("A.5(f)", "wA5[0,0,0,1]@4", "E3[4]@4",
     {"b": [(1, 1, "b"), (I, 1, "d")], "c": [(1, 0, "b"), (-I, 0, "d")],
      "d": [(2, 1, "c")]}, ""),
    ("A.5(g)", "wA5[0,0,0,1]@4", "F[4]@4",
     {"c": [(1, 1, "c")], "d": [(1, 1, "d")]}, ""),
    ("A.5(h)", "wB1[2,1]@4", "E1[4,1]@4",
     {"a": [(1, 0, "a"), (1, 2, "c")], "b": [(1, 1, "d")],
      "c": [(1, 0, "a")], "d": [(1, 0, "b")]}, ""),
    ("A.5(i)", "wC1@4", "F[4]@4",
     {"b": [(-1, 1, "c")], "c": [(1, 0, "b")], "d": [(1, 1, "d")]}, ""),
    ("A.5(j)", "E1[4,1]@4", "F[4]@4",
     {"c": [(1, 1, "d")], "d": [(1, 0, "b"), (1, 1, "c")]}, ""),
    ("A.5(k)", "E1[4,2]@4", "E2[4]@4",
     {"b": [(I, 0, "c")], "c": [(1, 0, "b")],
      "d": [(1, 0, "c"), (1, 1, "d")]}, ""),
    ("A.5(l)", "E2[4]@4", "E3[4]@4",
     {"b": [(1, 0, "b"), (I, 0, "d")],
      "c": [(1, 0, "a"), (1, 1, "b"), (-I, 1, "d")],
      "d": [(1, 0, "b"), (I, 0, "d"), (2, 1, "c")]}, ""),
)


def _fixed_witness(record) -> Witness:
    cite, src, dst, table, flag = record
    n = parse_label(src).n
    images = {}
    for letter, terms in table.items():
        images[_LETTERS.index(letter)] = [(coef, exp, _LETTERS.index(var))
                                          for coef, exp, var in terms]
    src_frame = _b1_jframe(n) if flag == "J" else None
    return _build(src, dst, images, cite, src_frame=src_frame)


def fixed_witnesses():
    """All sporadic certificates (nets n = 4, 5, 6 and webs n = 4)."""
    return [_fixed_witness(rec) for rec in _FIXED]


def witness_db(max_n: int = 7):
    """Every shipped witness between catalog orbits with n <= max_n.

    Parametric families are instantiated at every admissible parameter
    choice; the fixed certificates cover the sporadic degenerations.  The
    pair relation these witnesses generate is closed transitively when
    diagrams are assembled; compositions are recorded as paths rather
    than multiplied out.
    """
    out = []
    for n in range(2, max_n + 1):
        for label in enumerate_orbits(n, 3):
            fam, params = label.family, label.params
            if fam == "NetA1":
                for cite in ("A.1(a)", "A.1(b)", "A.1(c)"):
                    out.append(family_witness(cite, *params))
            elif fam == "NetA2":
                r, k1, k2 = params
                if k2 >= 2:
                    out.append(family_witness("A.1(d)", r, k1, k2))
                if r <= k2:
                    out.append(family_witness("A.1(e)", r, k1, k2))
                if k2 <= r <= k1 + k2:
                    out.append(family_witness("A.1(f)", r, k1, k2))
                if r >= k1 + k2:
                    out.append(family_witness("A.1(g)", r, k1, k2))
            elif fam == "NetA3":
                k1, k2, k3 = params
                if k3 >= 2:
                    out.append(family_witness("A.1(h)", k1, k2, k3))
                if k2 >= 1:
                    out.append(family_witness("A.1(i)", k1, k2, k3))
                if k1 >= 1 and k3 >= 2:
                    out.append(family_witness("A.1(j)", k1, k2, k3))
            elif fam == "NetB1":
                for k in range(1, n // 4 + 1):
                    out.append(family_witness("A.2(a)", n, k))
            elif fam == "NetB2":
                k, l1, l2 = params
                if k >= 2:
                    out.append(family_witness("A.2(b)", k, l1, l2))
    for record in _FIXED:
        if parse_label(record[1]).n <= max_n:
            out.append(_fixed_witness(record))
    return out
