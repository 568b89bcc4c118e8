"""Invariant computation tests: determinant forms, tau, Segre, dimensions.

Every concrete value asserted below was frozen from an exact oracle run
(fraction-free arithmetic over Q(i, sqrt 2)) and cross-checked against the
closed-form tables attached to the catalog.
"""

from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jol.catalog import make_orbit
from jol.exact import ONE, ExactScalar
from jol.invariants import (
    DEFAULT_SEED,
    MismatchedTotal,
    Poly,
    SegreSymbol,
    det_form,
    det_profile,
    orbit_dimension,
    report,
    segre_leq,
    segre_symbol,
    tau,
)

E = ExactScalar


def _poly(nvars, *terms):
    return Poly(nvars, {e: E(c) for e, c in terms})


def _eq_up_to_scalar(p, q):
    if set(p.terms) != set(q.terms):
        return False
    e0 = next(iter(p.terms))
    r = p.terms[e0] / q.terms[e0]
    return all(c == r * q.terms[e] for e, c in p.terms.items())


# ---------------------------------------------------------------------------
# det_form


def test_det_form_b1():
    # det of [[x 1, z 1], [z 1, y 1]] is (xy - z^2)^(n/2)
    base = _poly(3, ((1, 1, 0), 1), ((0, 0, 2), -1))
    assert _eq_up_to_scalar(det_form(make_orbit("B1@4")), base ** 2)
    assert _eq_up_to_scalar(det_form(make_orbit("B1@6")), base ** 3)


def test_det_form_monomials():
    assert _eq_up_to_scalar(det_form(make_orbit("A3[0,0,1]@3")),
                            _poly(3, ((3, 0, 0), 1)))
    assert _eq_up_to_scalar(det_form(make_orbit("A1[1,0,1]@4")),
                            _poly(3, ((2, 1, 1), 1)))


def test_det_form_degree_and_homogeneity():
    for text in ("A2[1,2,1]@5", "C[5,2]@5", "wA5[0,0,0,1]@4", "F[4]@4"):
        space = make_orbit(text)
        f = det_form(space)
        assert all(sum(e) == space.n for e in f.terms), text


# ---------------------------------------------------------------------------
# det_profile


def test_profile_split_monomial():
    prof = det_profile(_poly(3, ((2, 3, 0), 1)))
    assert prof.kind == "split"
    assert tuple(sorted(prof.exponents, reverse=True)) == (3, 2)


def test_profile_power():
    base = _poly(3, ((1, 1, 0), 1), ((0, 0, 2), -1))
    prof = det_profile(base ** 3)
    assert prof.kind == "power"
    assert prof.power == 3
    assert _eq_up_to_scalar(prof.base, base)


def test_profile_split_beats_power():
    prof = det_profile(_poly(3, ((6, 0, 0), 1)))
    assert prof.kind == "split"
    assert tuple(prof.exponents) == (6,)


def test_profile_split_distinct_forms():
    # (x + y)^2 * y * z: three pairwise independent linear factors
    f = (_poly(3, ((1, 0, 0), 1), ((0, 1, 0), 1)) ** 2
         * _poly(3, ((0, 1, 1), 1)))
    prof = det_profile(f)
    assert prof.kind == "split"
    assert tuple(sorted(prof.exponents, reverse=True)) == (2, 1, 1)


def test_profile_raw_irreducible():
    f = _poly(3, ((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1))
    assert det_profile(f).kind == "raw"
    g = _poly(3, ((2, 1, 0), 1), ((0, 0, 3), 1))
    assert det_profile(g).kind == "raw"


# ---------------------------------------------------------------------------
# tau


@pytest.mark.parametrize("text,k,value", [
    ("B2[1,1,3]@7", 1, 2),     # 2k for the B2 family
    ("B2[2,0,4]@8", 1, 4),
    ("A1[3,0,1]@6", 2, 2),     # k2 + 2 k3
    ("C[6,6]@6", 1, 2),
    ("C[6,5]@6", 2, 3),
    ("A3[2,0,1]@5", 1, 1),
])
def test_tau_values(text, k, value):
    assert tau(make_orbit(text), k) == (value, "exact")


def test_tau_full_space_is_generic_rank():
    # k = m asks for the whole space, whose generic member is invertible
    space = make_orbit("A2[1,2,1]@5")
    assert tau(space, 3) == (5, "exact")


# ---------------------------------------------------------------------------
# segre_symbol


@pytest.mark.parametrize("text,parts", [
    ("A3[2,0,1]@5", [(3, 1, 1)]),
    ("A2[3,1,1]@6", [(1, 1, 1), (2, 1)]),
    ("C[6,4]@6", [(2, 2, 2)]),
    ("A1[0,1,1]@5", [(1, 1), (1, 1), (1,)]),
])
def test_segre_values(text, parts):
    assert segre_symbol(make_orbit(text)) == SegreSymbol.of(*parts)


def test_segre_deterministic():
    space = make_orbit("A2[2,1,1]@5")
    assert segre_symbol(space) == segre_symbol(space)
    assert segre_symbol(space, seed=DEFAULT_SEED) == segre_symbol(space)


# ---------------------------------------------------------------------------
# segre_leq


def test_segre_leq_reflexive():
    s = SegreSymbol.of((2, 1), (1,))
    assert segre_leq(s, s)


def test_segre_leq_merge_and_dominance():
    # merging (1,1) and (1) gives (2,1); lowering (3,3) in dominance
    # reaches (2,2,2)
    assert segre_leq(SegreSymbol.of((2, 1)), SegreSymbol.of((1, 1), (1,)))
    assert segre_leq(SegreSymbol.of((2, 2, 2)), SegreSymbol.of((3, 3)))
    assert not segre_leq(SegreSymbol.of((3, 3)), SegreSymbol.of((2, 2, 2)))


def test_segre_leq_mismatched_total():
    with pytest.raises(MismatchedTotal):
        segre_leq(SegreSymbol.of((1,)), SegreSymbol.of((1, 1)))


def _all_symbols(n):
    """Every Segre symbol of total n (multisets of partitions)."""
    def partitions(k, cap):
        if k == 0:
            yield ()
            return
        for first in range(min(k, cap), 0, -1):
            for rest in partitions(k - first, first):
                yield (first,) + rest

    parts = [tuple(p) for k in range(1, n + 1) for p in partitions(k, k)]

    def multisets(total, pool_idx):
        if total == 0:
            yield ()
            return
        for idx in range(pool_idx, len(parts)):
            p = parts[idx]
            if sum(p) <= total:
                for rest in multisets(total - sum(p), idx):
                    yield (p,) + rest

    seen = set()
    for combo in multisets(n, 0):
        sym = SegreSymbol.of(*combo)
        if sym not in seen:
            seen.add(sym)
            yield sym


def test_segre_leq_partial_order_small():
    # exhaustive axioms check at total 4 (14 symbols)
    syms = list(_all_symbols(4))
    assert len(syms) == 14
    for a in syms:
        assert segre_leq(a, a)
    for a, b in itertools.permutations(syms, 2):
        if segre_leq(a, b) and segre_leq(b, a):
            assert a == b
    for a, b, c in itertools.product(syms, repeat=3):
        if segre_leq(a, b) and segre_leq(b, c):
            assert segre_leq(a, c)


@given(st.integers(1, 5))
@settings(max_examples=5, deadline=None)
def test_segre_leq_has_top_and_bottom(n):
    # n separate singletons sit on top; the single all-ones partition is
    # reached from anywhere by merging everything and lowering in dominance
    top = SegreSymbol.of(*[(1,)] * n)
    bottom = SegreSymbol.of((1,) * n)
    for sym in _all_symbols(n):
        assert segre_leq(sym, top)
        assert segre_leq(bottom, sym)


# ---------------------------------------------------------------------------
# orbit_dimension


@pytest.mark.parametrize("text,d,codim", [
    ("A1[0,0,1]@3", 15, 3),
    ("B1@4", 20, 10),
    ("A3[2,0,1]@5", 26, 19),
    ("C[6,4]@6", 36, 27),
])
def test_orbit_dimension_values(text, d, codim):
    assert orbit_dimension(make_orbit(text)) == (d, codim)


def test_orbit_dimension_b1_closed_form():
    for n in (2, 4, 6):
        codim = orbit_dimension(make_orbit(f"B1@{n}"))[1]
        assert codim == 5 * (n * n + 2 * n - 8) // 8


# ---------------------------------------------------------------------------
# report


def test_report_shape_and_consistency():
    space = make_orbit("A2[2,0,1]@4")
    out = report(space)
    assert set(out) == {"label", "det", "det_profile", "tau", "segre",
                        "dim", "codim"}
    assert out["label"] == "A2[2,0,1]@4"
    assert out["codim"] == 10
    assert [t["k"] for t in out["tau"]] == [1, 2, 3]
    assert all(t["mode"] == "exact" for t in out["tau"][:2])
    json.dumps(out)  # JSON-ready throughout
