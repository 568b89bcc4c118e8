"""Canonical catalog of Jordan net and web orbits.

Every congruence orbit of Jordan nets in S^n (2 <= n <= 7) and Jordan webs
in S^n (3 <= n <= 5) has a canonical representative built here bit-exactly
from its classified normal form.  Labels follow the grammar
FAMILY[params]@n, e.g. "A2[1,2,1]@5", "C[5,2]@5", "B1@6", "wA4[1,0,0,1]@4".
Closed-form invariants (determinant, minimal ranks, Segre symbol) are
attached where tables provide them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import JordanSpace
from .exact import I, ONE, ZERO, ExactMatrix, ExactScalar
from .invariants import DetProfile, Poly, SegreSymbol, det_profile


class LabelError(ValueError):
    """The label string does not match the grammar."""


class BadParameters(LabelError):
    """The parameters violate the family's constraints."""


class Unsupported(ValueError):
    """No classification is available for this (n, m)."""


class NotTabulated(LookupError):
    """No closed-form invariants are tabulated for this label."""


NET_FAMILIES = ("NetA1", "NetA2", "NetA3", "NetB1", "NetB2", "NetC")
WEB_FAMILIES = ("WebA1", "WebA2", "WebA3", "WebA4", "WebA5", "WebB1",
                "WebB2", "WebC1", "WebC2", "WebD", "WebE1", "WebE2",
                "WebE3", "WebE4", "WebF")

FAMILY_TOKEN = {
    "NetA1": "A1", "NetA2": "A2", "NetA3": "A3",
    "NetB1": "B1", "NetB2": "B2", "NetC": "C",
    "WebA1": "wA1", "WebA2": "wA2", "WebA3": "wA3", "WebA4": "wA4",
    "WebA5": "wA5", "WebB1": "wB1", "WebB2": "wB2", "WebC1": "wC1",
    "WebC2": "wC2", "WebD": "D", "WebE1": "E1", "WebE2": "E2",
    "WebE3": "E3", "WebE4": "E4", "WebF": "F",
}
TOKEN_FAMILY = {v: k for k, v in FAMILY_TOKEN.items()}

# Families rendered without a parameter bracket.
_BARE = ("NetB1", "WebC1")


@dataclass(frozen=True)
class OrbitLabel:
    """A classified orbit: family name, parameter tuple, ambient size n."""

    family: str
    params: tuple
    n: int

    def __str__(self):
        token = FAMILY_TOKEN[self.family]
        if self.family in _BARE:
            return f"{token}@{self.n}"
        inner = ",".join(str(p) for p in self.params)
        return f"{token}[{inner}]@{self.n}"

    def dim(self):
        """3 for nets, 4 for webs."""
        return 3 if self.family in NET_FAMILIES else 4


_LABEL_RE = re.compile(
    r"^([A-Za-z][A-Za-z0-9]*?)(?:\[(\d+(?:,\d+)*)\])?@(\d+)$")


def parse_label(text: str) -> OrbitLabel:
    """Parse FAMILY[params]@n; validates the family's constraints."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise LabelError(f"malformed label {text!r}; expected FAMILY[p,..]@n")
    token, inner, n = m.group(1), m.group(2), int(m.group(3))
    family = TOKEN_FAMILY.get(token)
    if family is None:
        raise LabelError(f"unknown family token {token!r}")
    params = tuple(int(p) for p in inner.split(",")) if inner else ()
    label = OrbitLabel(family, params, n)
    validate_label(label)
    return label


def _expect(cond, label, message):
    if not cond:
        raise BadParameters(f"{label.family}{label.params}@{label.n}: "
                            f"{message}")


def validate_label(label: OrbitLabel) -> None:
    """Raise BadParameters naming the violated constraint."""
    fam, p, n = label.family, label.params, label.n
    if fam not in FAMILY_TOKEN:
        raise LabelError(f"unknown family {fam!r}")
    _expect(all(isinstance(x, int) and x >= 0 for x in p), label,
            "parameters must be non-negative integers")
    if fam in ("NetA1", "NetA3"):
        _expect(len(p) == 3, label, "needs (k1, k2, k3)")
        _expect(p[2] >= 1, label, "k3 >= 1")
        _expect(p[0] + 2 * p[1] + 3 * p[2] == n, label, "k1+2k2+3k3 = n")
    elif fam == "NetA2":
        _expect(len(p) == 3, label, "needs (r, k1, k2)")
        _expect(p[0] >= 1 and p[2] >= 1, label, "r >= 1 and k2 >= 1")
        _expect(p[0] + p[1] + 2 * p[2] == n, label, "r+k1+2k2 = n")
    elif fam == "NetB1":
        _expect(len(p) == 0, label, "takes no parameters")
        _expect(n >= 2 and n % 2 == 0, label, "n must be even")
    elif fam == "NetB2":
        _expect(len(p) == 3, label, "needs (k, l1, l2)")
        _expect(p[2] >= 2, label, "l2 >= 2")
        _expect(1 <= p[0] and 2 * p[0] <= p[2], label, "1 <= k <= l2/2")
        _expect(p[1] + 2 * p[2] == n, label, "l1+2l2 = n")
    elif fam == "NetC":
        _expect(len(p) == 2 and p[0] == n, label, "needs (n, i)")
        _expect(4 <= n <= 7, label, "4 <= n <= 7")
        top = 2 if n <= 5 else 8
        _expect(1 <= p[1] <= top, label, f"i in 1..{top} for n={n}")
    elif fam in ("WebA1", "WebA5"):
        _expect(len(p) == 4, label, "needs (k1, k2, k3, k4)")
        _expect(p[3] >= 1, label, "k4 >= 1")
        _expect(p[0] + 2 * p[1] + 3 * p[2] + 4 * p[3] == n, label,
                "k1+2k2+3k3+4k4 = n")
    elif fam in ("WebA2", "WebA3"):
        _expect(len(p) == 4, label, "needs (k1, k2, l1, l2)")
        _expect(p[1] >= 1 and p[3] >= 1, label, "k2 >= 1 and l2 >= 1")
        _expect(p[0] + 2 * p[1] + p[2] + 2 * p[3] == n, label,
                "k1+2k2+l1+2l2 = n")
        if fam == "WebA3":
            _expect(p[:2] >= p[2:], label,
                    "use the representative with (k1,k2) >= (l1,l2)")
    elif fam == "WebA4":
        _expect(len(p) == 4, label, "needs (r, k1, k2, k3)")
        _expect(p[0] >= 1 and p[3] >= 1, label, "r >= 1 and k3 >= 1")
        _expect(p[0] + p[1] + 2 * p[2] + 3 * p[3] == n, label,
                "r+k1+2k2+3k3 = n")
    elif fam == "WebB1":
        _expect(len(p) == 2, label, "needs (k1, k2)")
        _expect(p[0] >= 1 and p[1] >= 1, label, "k1 >= 1 and k2 >= 1")
        _expect(p[0] + 2 * p[1] == n, label, "k1+2k2 = n")
    elif fam == "WebB2":
        _expect(len(p) == 4, label, "needs (r, k, l1, l2)")
        _expect(p[0] >= 1, label, "r >= 1")
        _expect(p[3] >= 2, label, "l2 >= 2")
        _expect(1 <= p[1] and 2 * p[1] <= p[3], label, "1 <= k <= l2/2")
        _expect(p[0] + p[2] + 2 * p[3] == n, label, "r+l1+2l2 = n")
    elif fam == "WebC1":
        _expect(len(p) == 0, label, "takes no parameters")
        _expect(n >= 4 and n % 4 == 0, label, "n must be divisible by 4")
    elif fam == "WebC2":
        _expect(len(p) == 1, label, "needs (k,)")
        _expect(n % 2 == 0, label, "n must be even")
        _expect(1 <= p[0] and 8 * p[0] <= n, label, "1 <= k <= n/8")
    elif fam == "WebD":
        _expect(len(p) == 2 and p[0] == n, label, "needs (n, i)")
        _expect(n == 5, label, "classified for n = 5 only")
        _expect(p[1] in (1, 2), label, "i in {1, 2}")
    elif fam == "WebE1":
        _expect(p and p[0] == n, label, "first parameter must equal n")
        if n == 3:
            _expect(len(p) == 1, label, "needs (n,) for n = 3")
        elif n == 4:
            _expect(len(p) == 2 and p[1] in (1, 2), label,
                    "needs (n, i) with i in {1, 2}")
        elif n == 5:
            _expect(len(p) == 2 and p[1] in (1, 2, 3), label,
                    "needs (n, i) with i in {1, 2, 3}")
        else:
            _expect(False, label, "classified for 3 <= n <= 5 only")
    elif fam == "WebE2":
        _expect(p and p[0] == n, label, "first parameter must equal n")
        if n == 4:
            _expect(len(p) == 1, label, "needs (n,) for n = 4")
        elif n == 5:
            _expect(len(p) == 2 and p[1] in (1, 2), label,
                    "needs (n, i) with i in {1, 2}")
        else:
            _expect(False, label, "classified for n in {4, 5} only")
    elif fam == "WebE3":
        _expect(p and p[0] == n, label, "first parameter must equal n")
        if n == 4:
            _expect(len(p) == 1, label, "needs (n,) for n = 4")
        elif n == 5:
            _expect(len(p) == 2 and p[1] == 1, label,
                    "needs (n, 1); the E3 algebra has a single orbit at n = 5")
        else:
            _expect(False, label, "classified for n in {4, 5} only")
    elif fam == "WebE4":
        _expect(len(p) == 2 and p[0] == n, label, "needs (n, i)")
        _expect(n == 5, label, "no embeddings for n <= 4")
        _expect(p[1] in (1, 2), label, "i in {1, 2}")
    elif fam == "WebF":
        _expect(len(p) == 1 and p[0] == n, label, "needs (n,)")
        _expect(n in (4, 5), label, "classified for n in {4, 5} only")


# ---------------------------------------------------------------------------
# canonical form builders


class _Builder:
    def __init__(self, n, nvars):
        self.n = n
        self.layers = [[[ZERO] * n for _ in range(n)] for _ in range(nvars)]

    def put(self, var, i, j, c=ONE):
        g = self.layers[var]
        g[i][j] = g[i][j] + c
        if i != j:
            g[j][i] = g[j][i] + c

    def ones(self, var, start, count):
        for t in range(count):
            self.put(var, start + t, start + t)

    def anti(self, var, start, size, c=ONE):
        """Anti-diagonal block J_size at offset start."""
        for t in range(size):
            i, j = start + t, start + size - 1 - t
            if i <= j:
                self.put(var, i, j, c)

    def space(self, label):
        basis = [ExactMatrix(g) for g in self.layers]
        text = str(label) if label is not None else None
        return JordanSpace(basis, label=text)


# Square-zero pencils P_{m,i} in S^m: entry lists (var, i, j) with
# var 0 = x, var 1 = y.
PENCILS = {
    (2, 1): ((0, 0, 0), (1, 1, 1)),
    (2, 2): ((1, 0, 0), (0, 0, 1)),
    (3, 1): ((0, 0, 0), (1, 1, 1), (0, 2, 2), (1, 2, 2)),
    (3, 2): ((0, 0, 0), (1, 0, 1), (0, 2, 2)),
    (3, 3): ((1, 0, 1), (0, 0, 2), (0, 1, 1)),
    (3, 4): ((0, 0, 0), (0, 1, 1), (1, 2, 2)),
    (3, 5): ((1, 0, 0), (0, 0, 1), (0, 2, 2)),
    (3, 6): ((0, 0, 1), (1, 0, 2)),
    (3, 7): ((0, 0, 0), (1, 1, 1)),
    (3, 8): ((1, 0, 0), (0, 0, 1)),
}

# Special web forms: (family, n, i) -> entry list (var, i, j) in the
# alphabetical variable order of the displayed form.
SPECIAL_FORMS = {
    # variables (v, w, x, y)
    ("WebE1", 3, None): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1)),
    ("WebE1", 4, 1): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1),
                      (2, 3, 3)),
    ("WebE1", 4, 2): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1),
                      (3, 3, 3)),
    ("WebE1", 5, 1): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1),
                      (2, 3, 3), (2, 4, 4)),
    ("WebE1", 5, 2): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1),
                      (2, 3, 3), (3, 4, 4)),
    ("WebE1", 5, 3): ((0, 0, 0), (1, 0, 1), (2, 0, 2), (3, 1, 1),
                      (3, 3, 3), (3, 4, 4)),
    ("WebE2", 4, None): ((0, 0, 0), (2, 0, 1), (1, 0, 2), (3, 2, 3)),
    ("WebE2", 5, 1): ((0, 0, 0), (2, 0, 1), (1, 0, 2), (3, 2, 3),
                      (2, 4, 4)),
    ("WebE2", 5, 2): ((0, 0, 0), (2, 0, 1), (1, 0, 2), (3, 2, 3),
                      (3, 4, 4)),
    ("WebD", 5, 1): ((2, 0, 0), (0, 1, 1), (1, 2, 2), (3, 1, 4),
                     (3, 2, 3)),
    ("WebD", 5, 2): ((2, 0, 0), (0, 1, 1), (1, 1, 2), (3, 1, 4),
                     (3, 2, 3)),
    # variables (u, x, y, z)
    ("WebE3", 4, None): ((2, 0, 0), (1, 0, 1), (0, 0, 2), (0, 1, 1),
                         (0, 3, 3), (3, 0, 3)),
    ("WebE3", 5, 1): ((2, 0, 0), (1, 0, 1), (0, 0, 2), (0, 1, 1),
                      (0, 3, 3), (3, 0, 3), (0, 4, 4)),
    ("WebE4", 5, 1): ((2, 0, 0), (1, 0, 1), (0, 0, 2), (0, 1, 1),
                      (0, 3, 4), (3, 3, 3)),
    ("WebE4", 5, 2): ((2, 0, 0), (1, 0, 1), (0, 0, 2), (0, 1, 1),
                      (0, 3, 4), (3, 0, 3)),
    ("WebF", 4, None): ((1, 0, 0), (2, 0, 1), (3, 1, 1), (0, 0, 3),
                        (0, 1, 2)),
    ("WebF", 5, None): ((1, 0, 0), (2, 0, 1), (3, 1, 1), (0, 0, 4),
                        (0, 1, 3), (0, 2, 2)),
}


def make_orbit(label) -> JordanSpace:
    """The canonical representative of a classified orbit."""
    if isinstance(label, str):
        label = parse_label(label)
    else:
        validate_label(label)
    fam, p, n = label.family, label.params, label.n
    if fam == "NetA1":
        k1, k2, k3 = p
        b = _Builder(n, 3)
        n1, n2, n3 = k1 + k2 + k3, k2 + k3, k3
        b.ones(0, 0, n1)
        b.ones(1, n1, n2)
        b.ones(2, n1 + n2, n3)
        return b.space(label)
    if fam == "NetA2":
        r, k1, k2 = p
        b = _Builder(n, 3)
        b.ones(0, 0, r)
        for t in range(k2):
            o = r + 2 * t
            b.put(2, o, o)
            b.put(1, o, o + 1)
        b.ones(1, r + 2 * k2, k1)
        return b.space(label)
    if fam == "NetA3":
        k1, k2, k3 = p
        b = _Builder(n, 3)
        for t in range(k3):
            o = 3 * t
            b.put(2, o, o)
            b.put(1, o, o + 1)
            b.put(0, o, o + 2)
            b.put(0, o + 1, o + 1)
        for t in range(k2):
            o = 3 * k3 + 2 * t
            b.put(1, o, o)
            b.put(0, o, o + 1)
        b.ones(0, 3 * k3 + 2 * k2, k1)
        return b.space(label)
    if fam == "NetB1":
        m = n // 2
        b = _Builder(n, 3)
        b.ones(0, 0, m)
        b.ones(1, m, m)
        for t in range(m):
            b.put(2, t, m + t)
        return b.space(label)
    if fam == "NetB2":
        k, l1, l2 = p
        b = _Builder(n, 3)
        b.anti(0, 0, l2)
        b.anti(1, l2, l2)
        b.ones(1, 2 * l2, l1)
        for t in range(k):
            b.put(2, t, l2 + t)
        return b.space(label)
    if fam == "NetC":
        _, i = p
        m = n // 2
        b = _Builder(n, 3)
        for var, r, c in PENCILS[(m, i)]:
            b.put(var, r, c)
        b.anti(2, 0, n)
        return b.space(label)
    if fam == "WebA1":
        k1, k2, k3, k4 = p
        b = _Builder(n, 4)
        sizes = (k1 + k2 + k3 + k4, k2 + k3 + k4, k3 + k4, k4)
        o = 0
        for var, size in enumerate(sizes):
            b.ones(var, o, size)
            o += size
        return b.space(label)
    if fam == "WebA2":
        k1, k2, l1, l2 = p
        b = _Builder(n, 4)
        b.ones(0, 0, k1 + k2)
        b.ones(1, k1 + k2, k2)
        for t in range(l2):
            o = k1 + 2 * k2 + 2 * t
            b.put(3, o, o)
            b.put(2, o, o + 1)
        b.ones(2, k1 + 2 * k2 + 2 * l2, l1)
        return b.space(label)
    if fam == "WebA3":
        k1, k2, l1, l2 = p
        b = _Builder(n, 4)
        for t in range(k2):
            o = 2 * t
            b.put(1, o, o)
            b.put(0, o, o + 1)
        b.ones(0, 2 * k2, k1)
        for t in range(l2):
            o = 2 * k2 + k1 + 2 * t
            b.put(3, o, o)
            b.put(2, o, o + 1)
        b.ones(2, 2 * k2 + k1 + 2 * l2, l1)
        return b.space(label)
    if fam == "WebA4":
        r, k1, k2, k3 = p
        b = _Builder(n, 4)
        b.ones(3, 0, r)
        for t in range(k3):
            o = r + 3 * t
            b.put(2, o, o)
            b.put(1, o, o + 1)
            b.put(0, o, o + 2)
            b.put(0, o + 1, o + 1)
        for t in range(k2):
            o = r + 3 * k3 + 2 * t
            b.put(1, o, o)
            b.put(0, o, o + 1)
        b.ones(0, r + 3 * k3 + 2 * k2, k1)
        return b.space(label)
    if fam == "WebA5":
        k1, k2, k3, k4 = p
        b = _Builder(n, 4)
        o = 0
        for _ in range(k4):
            b.put(3, o, o)
            b.put(2, o, o + 1)
            b.put(1, o, o + 2)
            b.put(1, o + 1, o + 1)
            b.put(0, o, o + 3)
            b.put(0, o + 1, o + 2)
            o += 4
        for _ in range(k3):
            b.put(2, o, o)
            b.put(1, o, o + 1)
            b.put(0, o, o + 2)
            b.put(0, o + 1, o + 1)
            o += 3
        for _ in range(k2):
            b.put(1, o, o)
            b.put(0, o, o + 1)
            o += 2
        b.ones(0, o, k1)
        return b.space(label)
    if fam == "WebB1":
        k1, k2 = p
        b = _Builder(n, 4)
        b.ones(3, 0, k1)
        for t in range(k2):
            b.put(0, k1 + t, k1 + t)
            b.put(1, k1 + t, k1 + k2 + t)
            b.put(2, k1 + k2 + t, k1 + k2 + t)
        return b.space(label)
    if fam == "WebB2":
        r, k, l1, l2 = p
        b = _Builder(n, 4)
        b.ones(3, 0, r)
        b.anti(0, r, l2)
        b.anti(1, r + l2, l2)
        b.ones(1, r + 2 * l2, l1)
        for t in range(k):
            b.put(2, r + t, r + l2 + t)
        return b.space(label)
    if fam == "WebC1":
        h = n // 2
        b = _Builder(n, 4)
        b.ones(0, 0, h)
        b.ones(1, h, h)
        for t in range(h):
            b.put(2, t, h + t)
        for q in range(n // 4):
            b.put(3, 2 * q, h + 2 * q + 1)
            b.put(3, 2 * q + 1, h + 2 * q, -ONE)
        return b.space(label)
    if fam == "WebC2":
        (k,) = p
        h = n // 2
        b = _Builder(n, 4)
        b.anti(0, 0, h)
        b.anti(1, h, h)
        for t in range(h):
            b.put(2, t, h + (h - 1 - t))
        for q in range(k):
            b.put(3, 2 * q, h + 2 * q + 1)
            b.put(3, 2 * q + 1, h + 2 * q, -ONE)
        return b.space(label)
    # special web forms
    key = (fam, n, p[1] if len(p) > 1 else None)
    entries = SPECIAL_FORMS[key]
    b = _Builder(n, 4)
    for var, r, c in entries:
        b.put(var, r, c)
    return b.space(label)


def square_zero_n8() -> JordanSpace:
    """An n=8 square-zero pencil that no tensor-with-B pencil matches.

    With the identity as unit, X = sum_k v_k v_k^T over the isotropic
    vectors v_k = e_k + i e_{k+4} and Y = anti-diag(B, -B, -B, B) satisfy
    X.X = X.Y = Y.Y = 0, so span(1, X, Y) embeds the two-generator
    square-zero algebra.  The matrix product XY is nonzero, which is
    impossible for pencils assembled from B-blocks (those multiply to
    zero outright), so this pencil exists only for n >= 8.
    """
    b = _Builder(8, 3)
    b.ones(0, 0, 8)
    for k in range(4):
        b.put(1, k, k, ONE)
        b.put(1, k, k + 4, I)
        b.put(1, k + 4, k + 4, -ONE)
    signs = (ONE, -ONE, -ONE, ONE)
    for blk in range(4):
        r0, c0 = 2 * blk, 2 * (3 - blk)
        s = signs[blk]
        # B = [[1, i], [i, -1]] placed at block (blk, 3-blk)
        for (di, dj), val in (((0, 0), ONE), ((0, 1), I),
                              ((1, 0), I), ((1, 1), -ONE)):
            i, j = r0 + di, c0 + dj
            if i <= j:
                b.put(2, i, j, val * s)
    return b.space(None)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_orbits(n: int, m: int):
    """All orbit labels for dimension-m Jordan spaces in S^n."""
    if m == 3:
        if not 2 <= n <= 7:
            raise Unsupported(f"nets are classified for 2 <= n <= 7, not {n}")
        return _enumerate_nets(n)
    if m == 4:
        if not 3 <= n <= 5:
            raise Unsupported(f"webs are classified for 3 <= n <= 5, not {n}")
        return _enumerate_webs(n)
    raise Unsupported(f"no classification for m = {m}")


def _a_params(n, depth):
    """Sorted tuples (k1, .., k_depth) with sum i*k_i = n and k_depth >= 1."""
    out = []

    def rec(i, left, prefix):
        if i == depth:
            if left % depth == 0 and left // depth >= 1:
                out.append(tuple(prefix + [left // depth]))
            return
        for k in range(left // i + 1):
            rec(i + 1, left - i * k, prefix + [k])

    rec(1, n, [])
    return sorted(out)


def _enumerate_nets(n):
    labels = []
    for p in _a_params(n, 3):
        labels.append(OrbitLabel("NetA1", p, n))
    a2 = sorted((r, k1, k2)
                for k2 in range(1, n // 2 + 1)
                for r in range(1, n - 2 * k2 + 1)
                for k1 in (n - r - 2 * k2,) if k1 >= 0)
    labels.extend(OrbitLabel("NetA2", p, n) for p in a2)
    for p in _a_params(n, 3):
        labels.append(OrbitLabel("NetA3", p, n))
    if n % 2 == 0:
        labels.append(OrbitLabel("NetB1", (), n))
    b2 = sorted((k, l1, l2)
                for l2 in range(2, n // 2 + 1)
                for l1 in (n - 2 * l2,) if l1 >= 0
                for k in range(1, l2 // 2 + 1))
    labels.extend(OrbitLabel("NetB2", p, n) for p in b2)
    if 4 <= n <= 7:
        top = 2 if n <= 5 else 8
        labels.extend(OrbitLabel("NetC", (n, i), n)
                      for i in range(1, top + 1))
    return labels


def _enumerate_webs(n):
    labels = []
    for p in _a_params(n, 4):
        labels.append(OrbitLabel("WebA1", p, n))
    a2 = sorted((k1, k2, l1, l2)
                for k2 in range(1, n // 2 + 1)
                for l2 in range(1, n // 2 + 1)
                for k1 in range(n + 1)
                for l1 in (n - k1 - 2 * k2 - 2 * l2,) if l1 >= 0)
    labels.extend(OrbitLabel("WebA2", p, n) for p in a2)
    a3 = sorted(p for p in a2 if p[:2] >= p[2:])
    labels.extend(OrbitLabel("WebA3", p, n) for p in a3)
    a4 = sorted((r, k1, k2, k3)
                for r in range(1, n + 1)
                for p in _a_params(n - r, 3)
                for (k1, k2, k3) in (p,))
    labels.extend(OrbitLabel("WebA4", p, n) for p in a4)
    for p in _a_params(n, 4):
        labels.append(OrbitLabel("WebA5", p, n))
    b1 = sorted((k1, k2)
                for k2 in range(1, n // 2 + 1)
                for k1 in (n - 2 * k2,) if k1 >= 1)
    labels.extend(OrbitLabel("WebB1", p, n) for p in b1)
    b2 = sorted((r, k, l1, l2)
                for l2 in range(2, n // 2 + 1)
                for r in range(1, n - 2 * l2 + 1)
                for l1 in (n - r - 2 * l2,) if l1 >= 0
                for k in range(1, l2 // 2 + 1))
    labels.extend(OrbitLabel("WebB2", p, n) for p in b2)
    if n % 4 == 0:
        labels.append(OrbitLabel("WebC1", (), n))
    if n % 2 == 0:
        labels.extend(OrbitLabel("WebC2", (k,), n)
                      for k in range(1, n // 8 + 1))
    if n == 5:
        labels.extend(OrbitLabel("WebD", (5, i), 5) for i in (1, 2))
    if n == 3:
        labels.append(OrbitLabel("WebE1", (3,), 3))
    elif n == 4:
        labels.extend(OrbitLabel("WebE1", (4, i), 4) for i in (1, 2))
        labels.append(OrbitLabel("WebE2", (4,), 4))
        labels.append(OrbitLabel("WebE3", (4,), 4))
        labels.append(OrbitLabel("WebF", (4,), 4))
    elif n == 5:
        labels.extend(OrbitLabel("WebE1", (5, i), 5) for i in (1, 2, 3))
        labels.extend(OrbitLabel("WebE2", (5, i), 5) for i in (1, 2))
        labels.append(OrbitLabel("WebE3", (5, 1), 5))
        labels.extend(OrbitLabel("WebE4", (5, i), 5) for i in (1, 2))
        labels.append(OrbitLabel("WebF", (5,), 5))
    return labels


# ---------------------------------------------------------------------------
# tabulated invariants


ABSTRACT_TYPE = {
    "NetA1": "CxCxC", "NetA2": "CxJ1_0", "NetA3": "C[x]/(x^3)",
    "NetB1": "J2_2", "NetB2": "J2_1", "NetC": "J2_0",
    "WebA1": "CxCxCxC", "WebA2": "CxCxJ1_0", "WebA3": "J1_0xJ1_0",
    "WebA4": "CxC[x]/(x^3)", "WebA5": "C[x]/(x^4)",
    "WebB1": "CxJ2_2", "WebB2": "CxJ2_1", "WebC1": "J3_3",
    "WebC2": "J3_2", "WebD": "CxJ2_0", "WebE1": "E_1", "WebE2": "E_2",
    "WebE3": "E_3", "WebE4": "E_4", "WebF": "J3_0",
}


def abstract_type(label) -> str:
    """The abstract Jordan algebra tag of the orbit's family."""
    if isinstance(label, str):
        label = parse_label(label)
    else:
        validate_label(label)
    return ABSTRACT_TYPE[label.family]


@dataclass(frozen=True)
class KnownInvariants:
    """Closed-form invariants instantiated at the label's parameters."""

    det_profile: DetProfile
    tau1: int
    tau2: int
    segre: SegreSymbol
    abstract: str


# Minimal rank / minimal pencil rank of the square-zero-pencil nets,
# indexed by i in the order of the P lists.
C_TAU1 = {4: (1, 1), 5: (1, 1),
          6: (2, 2, 2, 1, 1, 2, 1, 1), 7: (2, 2, 2, 1, 1, 2, 1, 1)}
C_TAU2 = {4: (2, 2), 5: (2, 2),
          6: (3, 3, 3, 3, 3, 2, 2, 2), 7: (3, 3, 3, 3, 3, 2, 2, 2)}


def _mono(ex, ey, ez):
    return Poly(3, {(ex, ey, ez): ONE})


def known_invariants(label) -> KnownInvariants:
    """Tabulated det/tau/segre values; nets only."""
    if isinstance(label, str):
        label = parse_label(label)
    else:
        validate_label(label)
    fam, p, n = label.family, label.params, label.n
    if fam not in NET_FAMILIES:
        raise NotTabulated(f"no invariant table covers {label}")
    if fam == "NetA1":
        k1, k2, k3 = p
        n1, n2, n3 = k1 + k2 + k3, k2 + k3, k3
        det = _mono(n1, n2, n3)
        tau1, tau2 = k3, k2 + 2 * k3
        segre = SegreSymbol.of((1,) * n1, (1,) * n2, (1,) * n3)
    elif fam == "NetA2":
        r, k1, k2 = p
        det = _mono(r, k1 + 2 * k2, 0)
        tau1, tau2 = min(r, k2), min(r + k2, k1 + 2 * k2)
        segre = SegreSymbol.of((1,) * r, (2,) * k2 + (1,) * k1)
    elif fam == "NetA3":
        k1, k2, k3 = p
        det = _mono(n, 0, 0)
        tau1, tau2 = k3, k2 + 2 * k3
        segre = SegreSymbol.of((3,) * k3 + (2,) * k2 + (1,) * k1)
    elif fam == "NetB1":
        base = Poly(3, {(1, 1, 0): ONE, (0, 0, 2): -ONE})
        det = base ** (n // 2)
        tau1, tau2 = n // 2, n
        segre = None
    elif fam == "NetB2":
        k, l1, l2 = p
        det = _mono(l2, l1 + l2, 0)
        tau1, tau2 = 2 * k, l2
        segre = None
    else:  # NetC
        _, i = p
        det = _mono(0, 0, n)
        tau1 = C_TAU1[n][i - 1]
        tau2 = C_TAU2[n][i - 1]
        segre = SegreSymbol.of((2,) * tau2 + (1,) * (n - 2 * tau2))
    return KnownInvariants(det_profile(det), tau1, tau2, segre,
                           ABSTRACT_TYPE[fam])
