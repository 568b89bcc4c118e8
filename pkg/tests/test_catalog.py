"""Catalog tests: label grammar, enumeration, canonical representatives.

Orbit counts, codimensions and invariant values asserted here were frozen
from exact recomputation (fraction-free stabilizer solves over Q(i, sqrt 2))
and cross-checked against the closed-form tables in the catalog itself.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jol.catalog import (
    BadParameters,
    LabelError,
    NotTabulated,
    OrbitLabel,
    Unsupported,
    abstract_type,
    enumerate_orbits,
    known_invariants,
    make_orbit,
    parse_label,
    square_zero_n8,
    validate_label,
)
from jol.core import generic_unit, is_jordan_space, jordan_product
from jol.invariants import det_form, orbit_dimension, segre_symbol, tau

NET_COUNTS = {2: 1, 3: 3, 4: 8, 5: 11, 6: 23, 7: 27}
WEB_COUNTS = {3: 2, 4: 12, 5: 21}


# ---------------------------------------------------------------------------
# label grammar


@pytest.mark.parametrize("text,family,params,n", [
    ("A2[1,2,1]@5", "NetA2", (1, 2, 1), 5),
    ("C[5,2]@5", "NetC", (5, 2), 5),
    ("B1@6", "NetB1", (), 6),
    ("wC1@4", "WebC1", (), 4),
    ("wA4[1,0,0,1]@4", "WebA4", (1, 0, 0, 1), 4),
    ("wB1[2,1]@4", "WebB1", (2, 1), 4),
    ("wB2[1,1,0,2]@5", "WebB2", (1, 1, 0, 2), 5),
    ("E1[4,2]@4", "WebE1", (4, 2), 4),
    ("E3[5,1]@5", "WebE3", (5, 1), 5),
    ("D[5,1]@5", "WebD", (5, 1), 5),
    ("F[5]@5", "WebF", (5,), 5),
])
def test_parse_examples(text, family, params, n):
    lab = parse_label(text)
    assert (lab.family, lab.params, lab.n) == (family, params, n)
    assert str(lab) == text


def test_round_trip_everything():
    for n, count in NET_COUNTS.items():
        labels = enumerate_orbits(n, 3)
        assert len(labels) == count
        for lab in labels:
            assert parse_label(str(lab)) == lab
    for n, count in WEB_COUNTS.items():
        labels = enumerate_orbits(n, 4)
        assert len(labels) == count
        for lab in labels:
            assert parse_label(str(lab)) == lab


def test_enumeration_duplicate_free():
    for m, counts in ((3, NET_COUNTS), (4, WEB_COUNTS)):
        for n in counts:
            labels = enumerate_orbits(n, m)
            assert len({str(lab) for lab in labels}) == len(labels)
            assert all(lab.dim() == m for lab in labels)


@pytest.mark.parametrize("text", [
    "A2[1,2,1]",            # missing @n
    "A2[1,2,1]@",           # empty n
    "Q7[1]@3",              # unknown family
    "A2(1,2,1)@5",          # wrong bracket style
    "A2[1,2,1@5",           # unbalanced bracket
    "A2[1,-2,1]@5",         # negative parameter
    "@4",
])
def test_label_errors(text):
    with pytest.raises(LabelError):
        parse_label(text)


@pytest.mark.parametrize("text", [
    "A2[1,2,1]@6",          # r+k1+2k2 != n
    "A2[1,2]@5",            # wrong arity
    "A1[1,1,0]@3",          # k3 = 0
    "A2[0,3,1]@5",          # r = 0
    "B1@5",                 # odd n
    "B1[1]@4",              # B1 takes no parameters
    "B2[2,0,3]@6",          # k > l2/2
    "C[6,9]@6",             # pencil index out of range
    "C[4,1]@5",             # first parameter must equal n
    "wA3[0,1,1,1]@5",       # non-canonical side order
    "wB2[1,0,0,2]@5",       # k = 0
    "wC1@6",                # 4 | n fails
    "wC2[2]@8",             # k > n/8
    "E1[5,4]@5",            # index out of range
    "E3[5,2]@5",            # single orbit at n = 5
    "E4[4,1]@4",            # no embeddings below n = 5
    "D[4,1]@4",             # classified for n = 5 only
    "F[6]@6",               # outside classified range
])
def test_bad_parameters(text):
    with pytest.raises(BadParameters):
        parse_label(text)


def test_unsupported_sizes():
    with pytest.raises(Unsupported):
        enumerate_orbits(8, 3)
    with pytest.raises(Unsupported):
        enumerate_orbits(6, 4)
    with pytest.raises(Unsupported):
        enumerate_orbits(4, 5)


# ---------------------------------------------------------------------------
# canonical representatives


def test_all_small_orbits_are_jordan():
    for m, ns in ((3, (2, 3, 4, 5)), (4, (3, 4))):
        for n in ns:
            for lab in enumerate_orbits(n, m):
                space = make_orbit(lab)
                assert space.n == n and len(space.basis) == m
                assert is_jordan_space(space), str(lab)


def test_spot_larger_orbits_are_jordan():
    for text in ("C[7,5]@7", "A3[1,0,2]@7", "B2[1,1,3]@7",
                 "E1[5,3]@5", "E3[5,1]@5", "E4[5,2]@5", "F[5]@5",
                 "wC2[1]@8"):
        assert is_jordan_space(make_orbit(text)), text


WEB4_CODIMS = {
    "wA1[0,0,0,1]@4": 12, "wA2[0,1,0,1]@4": 13, "wA3[0,1,0,1]@4": 14,
    "wA4[1,0,0,1]@4": 14, "wA5[0,0,0,1]@4": 15, "wB1[2,1]@4": 14,
    "wC1@4": 16, "E1[4,1]@4": 15, "E1[4,2]@4": 14, "E2[4]@4": 15,
    "E3[4]@4": 16, "F[4]@4": 17,
}

WEB5_SPECIAL_CODIMS = {
    "D[5,1]@5": 26, "D[5,2]@5": 27,
    "E1[5,1]@5": 28, "E1[5,2]@5": 26, "E1[5,3]@5": 26,
    "E2[5,1]@5": 27, "E2[5,2]@5": 27, "E3[5,1]@5": 28,
    "E4[5,1]@5": 27, "E4[5,2]@5": 29, "F[5]@5": 30,
}


def test_web4_codimensions():
    assert {str(lab) for lab in enumerate_orbits(4, 4)} == set(WEB4_CODIMS)
    for text, codim in WEB4_CODIMS.items():
        assert orbit_dimension(make_orbit(text))[1] == codim, text


def test_web5_special_codimensions():
    for text, codim in WEB5_SPECIAL_CODIMS.items():
        assert orbit_dimension(make_orbit(text))[1] == codim, text


# ---------------------------------------------------------------------------
# tabulated invariants vs. recomputation


def _poly_eq_up_to_scalar(p, q):
    if set(p.terms) != set(q.terms):
        return False
    e0 = next(iter(p.terms))
    r = p.terms[e0] / q.terms[e0]
    return all(c == r * q.terms[e] for e, c in p.terms.items())


def test_known_invariants_agree_with_computation():
    for text in ("A1[0,1,1]@5", "A2[2,1,1]@5", "A3[1,0,1]@4",
                 "B1@4", "B2[1,0,2]@4", "C[4,2]@4", "C[6,5]@6"):
        space = make_orbit(text)
        ki = known_invariants(text)
        assert _poly_eq_up_to_scalar(det_form(space), ki.det_profile.poly)
        assert tau(space, 1) == (ki.tau1, "exact")
        assert tau(space, 2) == (ki.tau2, "exact")
        if ki.segre is not None:
            assert segre_symbol(space) == ki.segre


def test_known_invariants_webs_not_tabulated():
    with pytest.raises(NotTabulated):
        known_invariants("wA1[0,0,0,1]@4")


def test_netc_rank_columns():
    # spec example: the fifth n=6 square-zero pencil has tau_2 = 3
    assert known_invariants("C[6,5]@6").tau2 == 3
    assert known_invariants("C[6,6]@6").tau1 == 2


# ---------------------------------------------------------------------------
# abstract type tags


@pytest.mark.parametrize("text,tag", [
    ("A1[0,0,1]@3", "CxCxC"),
    ("A2[1,0,1]@3", "CxJ1_0"),
    ("A3[0,0,1]@3", "C[x]/(x^3)"),
    ("B1@4", "J2_2"),
    ("B2[1,0,2]@4", "J2_1"),
    ("C[4,1]@4", "J2_0"),
    ("wA1[0,0,0,1]@4", "CxCxCxC"),
    ("wA4[1,0,0,1]@4", "CxC[x]/(x^3)"),
    ("wA5[0,0,0,1]@4", "C[x]/(x^4)"),
    ("wB1[2,1]@4", "CxJ2_2"),
    ("wC1@4", "J3_3"),
    ("D[5,1]@5", "CxJ2_0"),
    ("E3[5,1]@5", "E_3"),
    ("F[4]@4", "J3_0"),
])
def test_abstract_type(text, tag):
    assert abstract_type(text) == tag


# ---------------------------------------------------------------------------
# the n = 8 square-zero fixture


def test_square_zero_n8_fixture():
    space = square_zero_n8()
    assert space.n == 8 and len(space.basis) == 3
    assert is_jordan_space(space)
    u, x, y = space.basis
    assert u.det()

    def _zero(m):
        return all(not v for row in m.entries for v in row)

    # both generators (and hence the whole pencil) square to zero ...
    for a in (x, y):
        for b in (x, y):
            assert _zero(jordan_product(a, b, u))
    # ... yet the plain matrix product does not vanish, which rules out
    # any orthogonal congruence onto a B-block tensor pencil.
    assert not _zero(x @ u.inv() @ y)


# ---------------------------------------------------------------------------
# properties


@st.composite
def _a_family_label(draw):
    fam = draw(st.sampled_from(["NetA1", "NetA2", "NetA3"]))
    if fam == "NetA2":
        r = draw(st.integers(1, 3))
        k1 = draw(st.integers(0, 2))
        k2 = draw(st.integers(1, 2))
        params, n = (r, k1, k2), r + k1 + 2 * k2
    else:
        k1 = draw(st.integers(0, 2))
        k2 = draw(st.integers(0, 2))
        k3 = draw(st.integers(1, 2))
        params, n = (k1, k2, k3), k1 + 2 * k2 + 3 * k3
    return OrbitLabel(fam, params, n)


@given(_a_family_label())
@settings(max_examples=25, deadline=None)
def test_a_family_constructions_are_jordan(lab):
    validate_label(lab)
    assert parse_label(str(lab)) == lab
    assert is_jordan_space(make_orbit(lab))


@given(st.integers(2, 7), st.integers(3, 4))
@settings(max_examples=20, deadline=None)
def test_enumerated_labels_validate(n, m):
    if m == 4 and not 3 <= n <= 5:
        return
    for lab in enumerate_orbits(n, m):
        validate_label(lab)
        assert abstract_type(lab)
