"""Degeneration invariants of Jordan spaces.

For a Jordan space L = span(X_1, ..., X_m) in S^n this module computes the
invariants that control degenerations of congruence orbits: the determinant
form det(x_1 X_1 + ... + x_m X_m) and its multiplicative structure, the
minimal-rank numbers tau_k, the Segre symbol together with its partial
order, and the dimension/codimension of the congruence orbit.  All verdicts
that feed obstruction checks are exact; floating point only ever guides a
candidate that is then verified over Q(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import JordanSpace, generic_unit
from .exact import ONE, ZERO, ExactMatrix, ExactScalar, ff_nullity
from .numlin import IllConditioned, eig, rank_tol, weyr_partition

DEFAULT_SEED = 20240917


class MismatchedTotal(ValueError):
    """Segre symbols with different totals are never comparable."""


class IncomparableSamples(RuntimeError):
    """The sampled Segre symbols admit no maximum; tolerances failed."""


# ---------------------------------------------------------------------------
# sparse exact polynomials


class Poly:
    """Sparse polynomial over the exact scalar field in nvars variables.

    Terms map exponent tuples to nonzero ExactScalar coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        object.__setattr__(self, "nvars", nvars)
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            e = tuple(e)
            s = acc.get(e, ZERO) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, nvars, c):
        c = c if isinstance(c, ExactScalar) else ExactScalar(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, c=ONE):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {e: c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactScalar):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly(self.nvars, out)

    def scale(self, c):
        if not c:
            return Poly(self.nvars)
        return Poly(self.nvars, {e: x * c for e, x in self.terms.items()})

    def __pow__(self, k):
        out = Poly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def lex_lead(self):
        """(exponent, coefficient) of the lexicographically largest term."""
        if not self.terms:
            return None
        e = max(self.terms)
        return e, self.terms[e]

    def deriv(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = tuple(x - 1 if j == i else x for j, x in enumerate(e))
                out[e2] = out.get(e2, ZERO) + c * ExactScalar(e[i])
        return Poly(self.nvars, {e: c for e, c in out.items() if c})

    def eval_complex(self, point):
        total = 0j
        for e, c in self.terms.items():
            term = complex(c.to_complex())
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def eval_exact(self, point):
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                for _ in range(k):
                    term = term * x
            total = total + term
        return total

    def compose(self, images):
        """Substitute variable i by the polynomial images[i]."""
        nv = images[0].nvars
        out = Poly(nv)
        for e, c in self.terms.items():
            term = Poly.const(nv, 1).scale(c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * images[i]
            out = out + term
        return out

    def __repr__(self):
        return f"Poly({poly_str(self)})"


VAR_NAMES = ("x", "y", "z", "w")


def poly_str(f: Poly, names=VAR_NAMES) -> str:
    """Human-readable form like 'x^2*y - 2*z^3'."""
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}"
            for i, k in enumerate(e) if k)
        cs = _scalar_str(c)
        if mono:
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        else:
            parts.append(cs)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _scalar_str(c: ExactScalar) -> str:
    if c.is_rational():
        return str(c.a)
    if not c.a and not c.c and not c.d:
        return f"{c.b}i" if c.b != 1 else "i"
    return f"({c.a}+{c.b}i+{c.c}r2+{c.d}ir2)"


# ---------------------------------------------------------------------------
# determinant form and profile


def det_form(space: JordanSpace) -> Poly:
    """det(x_1 X_1 + ... + x_m X_m), exact, fraction free."""
    n, m = space.n, space.m
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            for k, B in enumerate(space.basis):
                c = B.entries[i][j]
                if c:
                    e = tuple(1 if t == k else 0 for t in range(m))
                    terms[e] = c
            row.append(Poly(m, terms))
        grid.append(row)
    return _det_poly(grid, m)


def _det_poly(grid, nvars) -> Poly:
    """Division-free determinant over the polynomial ring.

    Same column-subset dynamic program as ExactMatrix.det.
    """
    n = len(grid)
    if n == 0:
        return Poly.const(nvars, 1)
    prev = {frozenset(): Poly.const(nvars, 1)}
    for i in range(n):
        cur = {}
        for used, val in prev.items():
            if val.is_zero():
                continue
            for j in range(n):
                if j in used:
                    continue
                a = grid[i][j]
                if a.is_zero():
                    continue
                seen = sum(1 for u in used if u > j)
                term = val * a
                if seen % 2:
                    term = -term
                key = used | {j}
                cur[key] = cur.get(key, Poly(nvars)) + term
        prev = cur
    full = frozenset(range(n))
    return prev.get(full, Poly(nvars))


@dataclass(frozen=True)
class DetProfile:
    """Multiplicative shape of a determinant form.

    kind is one of "split" (product of pairwise independent linear forms,
    with exponent multiset and the forms themselves), "power" (a perfect
    k-th power with k maximal, k >= 2, and base not split), or "raw".
    The kind is always certified by exact re-multiplication.
    """

    kind: str
    poly: Poly
    exponents: tuple = ()
    forms: tuple = ()
    base: Poly = None
    power: int = 0


def det_profile(f: Poly, seed=DEFAULT_SEED) -> DetProfile:
    """Classify a nonzero homogeneous form as split/power/raw."""
    if f.is_zero():
        raise ValueError("zero form has no profile")
    split = _try_split(f, seed)
    if split is not None:
        forms, exps = split
        return DetProfile("split", f, exponents=tuple(exps),
                          forms=tuple(forms))
    power = _try_power(f)
    if power is not None:
        base, k = power
        return DetProfile("power", f, base=base, power=k)
    return DetProfile("raw", f)


def _rand_point(rng, nvars):
    return [ExactScalar(Fraction(int(a), int(b)))
            for a, b in zip(rng.integers(-9, 10, nvars),
                            rng.integers(1, 6, nvars))]


def _try_split(f: Poly, seed):
    """Full factorization into linear forms, or None.

    Floating point locates candidate hyperplanes on a planar slice; each
    candidate is rationalized and verified by exact division, so a
    successful return is a proof.
    """
    rng = np.random.default_rng(seed)
    for _ in range(4):
        res = _try_split_once(f, rng)
        if res is not None:
            return res
    return None


def _try_split_once(f: Poly, rng):
    nv = f.nvars
    work = f
    factors = []
    guard = 0
    while work.degree() > 0:
        guard += 1
        if guard > work.degree() + f.degree() + 4:
            return None
        a = [complex(x.to_complex()) for x in _rand_point(rng, nv)]
        b = [complex(x.to_complex()) for x in _rand_point(rng, nv)]
        deg = work.degree()
        coeffs = _slice_coeffs(work, a, b, deg)
        if abs(coeffs[0]) < 1e-9 * max(abs(c) for c in coeffs):
            continue  # slice lost degree; re-draw the plane
        roots = np.roots(coeffs)
        if len(roots) == 0:
            return None
        rho, mult = _dominant_cluster(roots)
        p = [rho * ai + bi for ai, bi in zip(a, b)]
        ell = _lift_linear(work, p, mult)
        if ell is None:
            return None
        quot, count = _divide_out(work, ell)
        if count == 0:
            return None
        factors.append((ell, count))
        work = quot
    lead = work.lex_lead()
    if lead is None or any(lead[0]):
        return None
    forms = [ell for ell, _ in factors]
    exps = [k for _, k in factors]
    order = sorted(range(len(exps)), key=lambda i: -exps[i])
    return [forms[i] for i in order], [exps[i] for i in order]


def _slice_coeffs(f: Poly, a, b, deg):
    """Coefficients of s^deg ... s^0 for f(s*a + b)."""
    out = [0j] * (deg + 1)
    for e, c in f.terms.items():
        poly = np.array([complex(c.to_complex())])
        for i, k in enumerate(e):
            for _ in range(k):
                poly = np.convolve(poly, [a[i], b[i]])
        d = len(poly) - 1
        for j, v in enumerate(poly):
            out[deg - d + j] += v
    return out


def _dominant_cluster(roots):
    """A root together with the size of its numeric multiplicity cluster."""
    scale = max(1.0, max(abs(r) for r in roots))
    tol = 1e-4 * scale
    best = None
    for r in roots:
        members = [s for s in roots if abs(s - r) <= tol]
        if best is None or len(members) > best[1]:
            best = (np.mean(members), len(members))
    return best


def _lift_linear(work: Poly, p, mult):
    """Rational linear form vanishing to order mult at the numeric point."""
    nv = work.nvars
    # order-mult partials: d^mult / dx_i dx_j^(mult-1) recovers the form.
    pures = []
    for j in range(nv):
        g = work
        for _ in range(mult):
            g = g.deriv(j)
        pures.append(g.eval_complex(p))
    j0 = int(np.argmax([abs(v) for v in pures]))
    if abs(pures[j0]) < 1e-9:
        return None
    coeffs = []
    for i in range(nv):
        if i == j0:
            coeffs.append(1 + 0j)
            continue
        g = work.deriv(i)
        for _ in range(mult - 1):
            g = g.deriv(j0)
        coeffs.append(g.eval_complex(p) / pures[j0])
    terms = {}
    for i, v in enumerate(coeffs):
        c = _rationalize(v)
        if c is None:
            return None
        if c:
            e = tuple(1 if t == i else 0 for t in range(nv))
            terms[e] = c
    ell = Poly(nv, terms)
    return ell if not ell.is_zero() else None


def _rationalize(v, den=1000, tol=1e-6):
    re = Fraction(v.real).limit_denominator(den)
    im = Fraction(v.imag).limit_denominator(den)
    if abs(float(re) - v.real) > tol or abs(float(im) - v.imag) > tol:
        return None
    return ExactScalar(re, im)


def _divide_out(f: Poly, ell: Poly):
    """(quotient, k) with f = ell^k * quotient and ell not dividing quotient."""
    count = 0
    while True:
        q = _div_linear(f, ell)
        if q is None:
            return f, count
        f = q
        count += 1


def _div_linear(f: Poly, ell: Poly):
    """Exact quotient f / ell for a linear form ell, or None."""
    lead = ell.lex_lead()
    if lead is None:
        return None
    le, lc = lead
    i0 = le.index(1)
    rest = ell - Poly(ell.nvars, {le: lc})
    # Synthetic division viewing f in the variable x_{i0}.
    by_deg = {}
    for e, c in f.terms.items():
        d = e[i0]
        e0 = tuple(0 if j == i0 else x for j, x in enumerate(e))
        by_deg.setdefault(d, {})[e0] = c
    if not by_deg:
        return Poly(f.nvars)
    top = max(by_deg)
    quot = {}
    carry = Poly(f.nvars)
    inv = ONE / lc
    for d in range(top, -1, -1):
        cur = Poly(f.nvars, by_deg.get(d, {})) + carry
        if d == 0:
            if not cur.is_zero():
                return None
            break
        qd = cur.scale(inv)
        for e, c in qd.terms.items():
            e2 = tuple(x + (d - 1 if j == i0 else 0)
                       for j, x in enumerate(e))
            quot[e2] = quot.get(e2, ZERO) + c
        carry = -(qd * rest)
    return Poly(f.nvars, quot)


def _try_power(f: Poly):
    """(base, k) with f = base^k, k >= 2 maximal, or None."""
    n = f.degree()
    for k in range(n, 1, -1):
        if n % k:
            continue
        g = _kth_root(f, k)
        if g is not None:
            return g, k
    return None


def _kth_root(f: Poly, k: int):
    lead = f.lex_lead()
    le, lc = lead
    if any(x % k for x in le):
        return None
    if not lc.is_rational():
        return None
    root = _fraction_root(lc.a, k)
    if root is None:
        return None
    ge = tuple(x // k for x in le)
    gc = ExactScalar(root)
    g = Poly(f.nvars, {ge: gc})
    denom = gc
    for _ in range(k - 1):
        denom = denom * gc
    denom = denom * ExactScalar(k)
    for _ in range(len(f.terms) * k + 8):
        r = f - g ** k
        if r.is_zero():
            return g
        re, rc = r.lex_lead()
        be = tuple(x - (k - 1) * y for x, y in zip(re, ge))
        if any(x < 0 for x in be) or be >= ge:
            return None
        g = g + Poly(f.nvars, {be: rc / denom})
    return None


def _fraction_root(q: Fraction, k: int):
    """Exact k-th root of a rational, or None."""
    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    num = _int_root(q.numerator, k)
    den = _int_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(sign * num, den)


def _int_root(v: int, k: int):
    r = round(v ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == v:
            return cand
    return None


# ---------------------------------------------------------------------------
# Segre symbols


@dataclass(frozen=True)
class SegreSymbol:
    """A multiset of partitions, stored sorted descending."""

    partitions: tuple

    @classmethod
    def of(cls, *parts):
        canon = tuple(sorted((tuple(sorted(p, reverse=True)) for p in parts),
                             reverse=True))
        for p in canon:
            if any(x <= 0 for x in p):
                raise ValueError("partition parts must be positive")
        return cls(canon)

    def total(self):
        return sum(sum(p) for p in self.partitions)

    def to_lists(self):
        return [list(p) for p in self.partitions]

    def __str__(self):
        return "".join("(" + ",".join(map(str, p)) + ")"
                       for p in self.partitions)


def _merge_moves(sym):
    out = set()
    parts = list(sym)
    for i, j in itertools.combinations(range(len(parts)), 2):
        a, b = parts[i], parts[j]
        width = max(len(a), len(b))
        summed = tuple(
            (a[t] if t < len(a) else 0) + (b[t] if t < len(b) else 0)
            for t in range(width))
        rest = [p for t, p in enumerate(parts) if t not in (i, j)]
        out.add(tuple(sorted(rest + [summed], reverse=True)))
    return out


@lru_cache(maxsize=None)
def _partitions_of(t):
    if t == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(t, t, [])
    return tuple(out)


def _dominated_by(mu):
    """All partitions of |mu| strictly below mu in dominance order."""
    total = sum(mu)
    out = []
    for cand in _partitions_of(total):
        if cand == mu:
            continue
        ok = True
        acc_c = acc_m = 0
        for t in range(max(len(cand), len(mu))):
            acc_c += cand[t] if t < len(cand) else 0
            acc_m += mu[t] if t < len(mu) else 0
            if acc_c > acc_m:
                ok = False
                break
        if ok:
            out.append(cand)
    return out


def _dominance_moves(sym):
    out = set()
    parts = list(sym)
    for i, mu in enumerate(parts):
        for mu2 in _dominated_by(mu):
            rest = parts[:i] + parts[i + 1:]
            out.add(tuple(sorted(rest + [mu2], reverse=True)))
    return out


@lru_cache(maxsize=None)
def _reachable(sym):
    """All symbols reachable downward from sym, including sym."""
    seen = {sym}
    frontier = [sym]
    while frontier:
        cur = frontier.pop()
        for nxt in _merge_moves(cur) | _dominance_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def segre_leq(small: SegreSymbol, big: SegreSymbol) -> bool:
    """True iff small is below big in the degeneration order.

    The order is generated by merging two partitions into their
    coordinatewise sum and by lowering one partition in dominance order.
    """
    if small.total() != big.total():
        raise MismatchedTotal(
            f"totals differ: {small.total()} vs {big.total()}")
    return small.partitions in _reachable(big.partitions)


def segre_symbol(space: JordanSpace, seed=DEFAULT_SEED,
                 samples=5) -> SegreSymbol:
    """Maximal Segre symbol of X U^-1 over sampled X in the space.

    U is the deterministic invertible element; each sample contributes the
    eigenvalue-cluster Weyr data of one exact product X U^-1, and the
    maximum under segre_leq is returned.
    """
    U = generic_unit(space)
    Uinv = U.inv()
    rng = np.random.default_rng(seed)
    symbols = []
    for _ in range(samples):
        coeffs = _rand_point(rng, space.m)
        X = space.element(coeffs)
        M = X @ Uinv
        Mc = np.array(M.to_complex(), dtype=complex)
        symbols.append(_symbol_of_matrix(Mc, space.n))
    for cand in symbols:
        if all(segre_leq(other, cand) for other in symbols):
            return cand
    raise IncomparableSamples(
        "sampled symbols have no maximum: " +
        ", ".join(str(s) for s in symbols))


def _symbol_of_matrix(M: np.ndarray, n: int) -> SegreSymbol:
    vals = eig(M)
    clusters = _cluster(vals)
    parts = []
    for lam, _size in clusters:
        part = weyr_partition(M, lam)
        parts.append(part)
    total = sum(sum(p) for p in parts)
    if total != n:
        raise IllConditioned(
            f"cluster partitions sum to {total}, expected {n}")
    return SegreSymbol.of(*parts)


def _cluster(vals):
    """Union-find eigenvalue clustering at a relative gap."""
    vals = list(vals)
    k = len(vals)
    rho = max(abs(v) for v in vals)
    tol = 1e-6 * (rho + 1.0)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(vals[i] - vals[j]) <= tol:
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    groups = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(vals[i])
    return [(np.mean(g), len(g)) for g in groups.values()]


# ---------------------------------------------------------------------------
# tau


def tau(space: JordanSpace, k: int, seed=DEFAULT_SEED, tries=30):
    """(tau_k, mode): smallest max-rank over k-dimensional subspaces.

    Labeled catalog spaces with tabulated values report mode "exact";
    otherwise a randomized upper-bound search reports mode "heuristic".
    Obstruction checks must only consume exact values.
    """
    if not 1 <= k <= space.m:
        raise ValueError("k out of range")
    if space.label:
        exact = _table_tau(space.label, k, space)
        if exact is not None:
            return exact, "exact"
    return _heuristic_tau(space, k, seed, tries), "heuristic"


def _table_tau(label: str, k: int, space: JordanSpace):
    from . import catalog

    try:
        lab = catalog.parse_label(label)
    except catalog.LabelError:
        return None
    if k == space.m:
        return space.n  # regular catalog spaces attain full rank
    try:
        known = catalog.known_invariants(lab)
    except catalog.NotTabulated:
        return None
    if k == 1:
        return known.tau1
    if k == 2:
        return known.tau2
    return None


def _heuristic_tau(space: JordanSpace, k: int, seed, tries):
    layers = np.stack([np.array(B.to_complex(), dtype=complex)
                       for B in space.basis])
    rng = np.random.default_rng(seed)

    def max_rank(C):
        worst = 0
        for _ in range(3):
            w = rng.standard_normal(k) + 1j * rng.standard_normal(k)
            X = np.tensordot(w @ C, layers, axes=(0, 0))
            worst = max(worst, rank_tol(X))
        return worst

    best = space.n
    for _ in range(tries):
        C = rng.standard_normal((k, space.m)) \
            + 1j * rng.standard_normal((k, space.m))
        val = max_rank(C)
        for _ in range(20):
            C2 = C + 0.3 * (rng.standard_normal((k, space.m))
                            + 1j * rng.standard_normal((k, space.m)))
            v2 = max_rank(C2)
            if v2 <= val:
                C, val = C2, v2
        best = min(best, val)
    return best


# ---------------------------------------------------------------------------
# orbit dimension


def orbit_dimension(space: JordanSpace):
    """(d, codim) for the congruence orbit of the space.

    Solves exactly for pairs (A, Q) with A X_i + X_i A^T = sum_j Q_ji X_j;
    with solution dimension s, the pair variety has dimension
    d = n^2 + m^2 - s and the orbit closure has codimension
    m(n(n+1)/2 - m) - (n^2 - s) inside the Grassmannian.
    """
    n, m = space.n, space.m
    ncols = n * n + m * m
    rows = []
    for i, Xi in enumerate(space.basis):
        for r in range(n):
            for s_ in range(n):
                row = [ZERO] * ncols
                for q in range(n):
                    # d/dA_pq of (A X_i)_(r,s): p == r
                    row[r * n + q] = row[r * n + q] + Xi.entries[q][s_]
                    # d/dA_pq of (X_i A^T)_(r,s): p == s
                    row[s_ * n + q] = row[s_ * n + q] + Xi.entries[r][q]
                for j in range(m):
                    row[n * n + j * m + i] = -space.basis[j].entries[r][s_]
                rows.append(row)
    s, _basis = ff_nullity(rows)
    d = n * n + m * m - s
    gr_dim = m * (n * (n + 1) // 2 - m)
    codim = gr_dim - (n * n - s)
    return d, codim


# ---------------------------------------------------------------------------
# report


def report(space: JordanSpace, seed=DEFAULT_SEED) -> dict:
    """Invariant summary as plain JSON-ready data."""
    f = det_form(space)
    prof = det_profile(f, seed=seed)
    taus = []
    for k in range(1, space.m + 1):
        val, mode = tau(space, k, seed=seed)
        taus.append({"k": k, "value": int(val), "mode": mode})
    sym = segre_symbol(space, seed=seed)
    d, codim = orbit_dimension(space)
    out = {
        "label": space.label,
        "det": poly_str(f),
        "det_profile": _profile_json(prof),
        "tau": taus,
        "segre": sym.to_lists(),
        "dim": int(d),
        "codim": int(codim),
    }
    return out


def _profile_json(prof: DetProfile) -> dict:
    if prof.kind == "split":
        return {"kind": "split",
                "exponents": [int(e) for e in prof.exponents],
                "forms": [poly_str(g) for g in prof.forms]}
    if prof.kind == "power":
        return {"kind": "power", "base": poly_str(prof.base),
                "base_degree": int(prof.base.degree()),
                "power": int(prof.power)}
    return {"kind": "raw"}
