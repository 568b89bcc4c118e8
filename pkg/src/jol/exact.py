"""Exact arithmetic over Q(i, sqrt2) and Laurent polynomials in t.

Every canonical orbit basis, witness substitution and exact obstruction in
this package is computed over the field Q(i, sqrt2).  A scalar is stored as
four arbitrary-precision rationals (a, b, c, d) meaning

    a + b*i + c*sqrt2 + d*i*sqrt2,

so Q(i) sits inside as the scalars with c = d = 0.  Laurent polynomials in a
single deformation parameter t are stored sparsely by integer exponent.

All types here are immutable values; sharing across threads is safe.
"""

from __future__ import annotations

from fractions import Fraction


class NegativeValuation(Exception):
    """A Laurent scalar with negative valuation has no limit at t = 0."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected rational, got {type(x).__name__}")


class ExactScalar:
    """An element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(self.a - other.a, self.b - other.b,
                           self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        # i^2 = -1, sqrt2^2 = 2, (i*sqrt2)^2 = -2
        return ExactScalar(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inv(self) -> "ExactScalar":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero ExactScalar")
        # Write self = p + q*sqrt2 with p, q in Q(i).  Then
        # self * (p - q*sqrt2) = p^2 - 2 q^2 lies in Q(i) and is nonzero
        # because sqrt2 is not in Q(i).
        pa, pb = self.a, self.b
        qa, qb = self.c, self.d
        ua = pa * pa - pb * pb - 2 * (qa * qa - qb * qb)
        ub = 2 * pa * pb - 4 * qa * qb
        norm = ua * ua + ub * ub
        # (p - q*sqrt2) * conj(u) / |u|^2
        wa, wb, wc, wd = pa, pb, -qa, -qb
        return ExactScalar(
            (wa * ua + wb * ub) / norm,
            (wb * ua - wa * ub) / norm,
            (wc * ua + wd * ub) / norm,
            (wd * ua - wc * ub) / norm,
        )

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ------------------------------------------------------

    def conj(self) -> "ExactScalar":
        """Complex conjugation i -> -i (fixes sqrt2)."""
        return ExactScalar(self.a, -self.b, self.c, -self.d)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_gaussian(self) -> bool:
        """True when the scalar lies in Q(i)."""
        return not (self.c or self.d)

    def to_complex(self) -> complex:
        s = 2 ** 0.5
        return complex(float(self.a) + s * float(self.c),
                       float(self.b) + s * float(self.d))

    # -- presentation ---------------------------------------------------

    def __repr__(self):
        parts = []
        for coeff, unit in ((self.a, ""), (self.b, "i"),
                            (self.c, "r2"), (self.d, "i*r2")):
            if coeff:
                if unit and coeff == 1:
                    parts.append(unit)
                elif unit and coeff == -1:
                    parts.append(f"-{unit}")
                else:
                    parts.append(f"{coeff}{'*' + unit if unit else ''}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def to_json(self):
        """Four rational strings [a, b, c, d] ('p' or 'p/q')."""
        return [str(self.a), str(self.b), str(self.c), str(self.d)]

    @classmethod
    def from_json(cls, parts) -> "ExactScalar":
        if len(parts) != 4:
            raise ValueError("ExactScalar JSON needs exactly 4 rational strings")
        return cls(*(Fraction(p) for p in parts))


def _coerce(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar(x)
    return NotImplemented


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
SQRT2 = ExactScalar(0, 0, 1)
HALF = ExactScalar(Fraction(1, 2))


class LaurentScalar:
    """A Laurent polynomial in t with ExactScalar coefficients.

    Stored sparsely as {exponent: coefficient} with no zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in terms.items():
                v = v if isinstance(v, ExactScalar) else ExactScalar(v)
                if v:
                    clean[int(k)] = v
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentScalar is immutable")

    @classmethod
    def of(cls, x, exp: int = 0) -> "LaurentScalar":
        """The monomial x * t^exp."""
        x = x if isinstance(x, ExactScalar) else ExactScalar(x)
        return cls({exp: x})

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k, ZERO) + v
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return LaurentScalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                p = v1 * v2
                s = terms.get(k, ZERO) + p
                if s:
                    terms[k] = s
                elif k in terms:
                    del terms[k]
        return LaurentScalar(terms)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by t^k."""
        return LaurentScalar({e + k: v for e, v in self.terms.items()})

    # -- structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def valuation(self) -> int:
        """Minimum exponent; undefined (ValueError) for the zero element."""
        if not self.terms:
            raise ValueError("valuation of zero Laurent scalar")
        return min(self.terms)

    def coeff(self, k: int) -> ExactScalar:
        return self.terms.get(k, ZERO)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def eval_at(self, t: complex) -> complex:
        return sum((v.to_complex() * t ** k for k, v in self.terms.items()),
                   0j)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                bits.append(f"({c!r})")
            else:
                bits.append(f"({c!r})*t^{k}")
        return " + ".join(bits)

    def to_json(self):
        """{exponent-string: 4 rational strings} map."""
        return {str(k): v.to_json() for k, v in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data) -> "LaurentScalar":
        return cls({int(k): ExactScalar.from_json(v) for k, v in data.items()})


def _coerce_laurent(x):
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, (int, Fraction, ExactScalar)):
        return LaurentScalar.of(x)
    return NotImplemented


L_ZERO = LaurentScalar()
L_ONE = LaurentScalar.of(1)
T = LaurentScalar.of(1, 1)
T_INV = LaurentScalar.of(1, -1)


def laurent_limit(x) -> ExactScalar:
    """Limit of x at t -> 0.

    Positive valuation gives 0, valuation 0 gives the constant coefficient,
    negative valuation raises NegativeValuation (the witness left the
    polynomial ring).
    """
    if isinstance(x, ExactScalar):
        return x
    if not x:
        return ZERO
    if x.valuation() < 0:
        raise NegativeValuation(f"valuation {x.valuation()} < 0")
    return x.coeff(0)


class ExactMatrix:
    """A rectangular matrix of ExactScalar or LaurentScalar entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int, one=ONE, zero=ZERO) -> "ExactMatrix":
        return cls([[one if i == j else zero for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=ZERO) -> "ExactMatrix":
        return cls([[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.entries))) if self.entries else self

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def __add__(self, other):
        return ExactMatrix([[x + y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return ExactMatrix([[x - y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix([[-x for x in row] for row in self.entries])

    def scale(self, s) -> "ExactMatrix":
        return ExactMatrix([[s * x for x in row] for row in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().entries
        out = []
        for row in self.entries:
            out.append([_dot(row, col) for col in bt])
        return ExactMatrix(out)

    def map(self, f) -> "ExactMatrix":
        return ExactMatrix([[f(x) for x in row] for row in self.entries])

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i))

    def det(self):
        """Determinant by division-free expansion (works over any ring)."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of non-square matrix")
        if n == 0:
            return ONE
        # Column-subset dynamic programming over the rows.
        zero = self.entries[0][0] - self.entries[0][0]
        prev = {(): _one_like(zero)}
        full = tuple(range(n))
        for i in range(n):
            cur = {}
            for subset, val in prev.items():
                used = set(subset)
                seen = 0  # used columns below the current one
                for j in full:
                    if j in used:
                        seen += 1
                        continue
                    a = self.entries[i][j]
                    if not a:
                        continue
                    term = val * a
                    # parity of new inversions: used columns above j
                    if (len(subset) - seen) % 2:
                        term = -term
                    key = tuple(sorted(subset + (j,)))
                    if key in cur:
                        cur[key] = cur[key] + term
                    else:
                        cur[key] = term
            prev = cur
        return prev.get(full, zero)

    def inv(self) -> "ExactMatrix":
        """Inverse over the field of ExactScalar entries."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(self.entries[i]) + [ONE if i == j else ZERO
                                        for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = aug[col][col].inv()
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug])

    def to_complex(self):
        return [[x.to_complex() for x in row] for row in self.entries]

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.rows, self.cols)


def _dot(xs, ys):
    it = [x * y for x, y in zip(xs, ys) if x and y]
    if not it:
        return xs[0] * ys[0]  # a zero of the right type
    s = it[0]
    for v in it[1:]:
        s = s + v
    return s


def _one_like(zero):
    if isinstance(zero, LaurentScalar):
        return L_ONE
    return ONE


def _as_rows(M):
    if isinstance(M, ExactMatrix):
        return [list(r) for r in M.entries]
    return [list(r) for r in M]


def _rref(rows):
    """In-place reduced row echelon form; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_p = rows[r][col].inv()
        rows[r] = [x * inv_p for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def ff_rank(M) -> int:
    """Exact rank of a matrix with ExactScalar entries.

    Deterministic exact elimination; accepts an ExactMatrix or a plain
    list-of-lists grid.
    """
    rows = _as_rows(M)
    return len(_rref(rows))


def ff_nullity(M):
    """Exact nullity and a kernel basis.

    Returns (nullity, basis) where each basis vector v satisfies M @ v = 0
    exactly.  Vectors are tuples of ExactScalar.
    """
    rows = _as_rows(M)
    ncols = len(rows[0]) if rows else 0
    pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return len(free), basis
