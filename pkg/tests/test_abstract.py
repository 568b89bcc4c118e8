"""Abstract Jordan algebra tests: structure constants, rank, posets.

Multiplication tables asserted here were derived by hand from the matrix
forms (products under X * Y = (X U^-1 Y + Y U^-1 X)/2); expected ranks
follow from minimal polynomials of generic elements.
"""

from __future__ import annotations

import pytest

from jol.abstract import (
    DIM3_EDGES,
    DIM3_TYPES,
    DIM4_EDGES,
    DIM4_TYPES,
    NotClosed,
    UnsupportedDimension,
    abstract_degenerates,
    algebra_rank,
    structure_constants,
)
from jol.catalog import abstract_type, enumerate_orbits, make_orbit
from jol.core import JordanSpace, generic_unit
from jol.exact import ONE, ZERO, ExactMatrix, ExactScalar

E = ExactScalar


def _sym(n, *pairs):
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in pairs:
        v = v if isinstance(v, ExactScalar) else E(v)
        rows[i][j] = rows[i][j] + v
        if i != j:
            rows[j][i] = rows[j][i] + v
    return ExactMatrix(rows)


# ---------------------------------------------------------------------------
# structure constants


def test_structure_constants_c_cross_c():
    # span(1, diag(1,-1)) with unit 1: the split two-idempotent algebra
    space = JordanSpace([ExactMatrix.identity(2),
                         _sym(2, ((0, 0), 1), ((1, 1), -1))])
    sc = structure_constants(space, ExactMatrix.identity(2))
    assert sc.dim == 2
    assert sc.unit == (ONE, ZERO)
    # x * x = 1
    assert tuple(sc.c[i][1][1] for i in range(2)) == (ONE, ZERO)
    assert sc.multiply((ZERO, ONE), (ZERO, ONE)) == (ONE, ZERO)


def test_structure_constants_truncated_polynomials():
    # the 3-block net: with unit x, products are y*y = z, y*z = z*z = 0,
    # i.e. C[y]/(y^3) written on basis (x, y, z = y^2)
    space = make_orbit("A3[0,0,1]@3")
    x = space.basis[0]
    assert x.det()
    sc = structure_constants(space, x)
    assert sc.unit == (ONE, ZERO, ZERO)
    assert tuple(sc.c[i][1][1] for i in range(3)) == (ZERO, ZERO, ONE)
    for j1, j2 in ((1, 2), (2, 2)):
        assert all(not sc.c[i][j1][j2] for i in range(3))


def test_structure_constants_square_zero_pencil():
    # C nets: both non-unit generators multiply to zero in every pairing
    space = make_orbit("C[4,1]@4")
    unit = space.basis[2]
    assert unit.det()
    sc = structure_constants(space, unit)
    for j1 in (0, 1):
        for j2 in (0, 1):
            assert all(not sc.c[i][j1][j2] for i in range(3))


def test_structure_constants_symmetric_and_unital():
    space = make_orbit("E3[4]@4")
    sc = structure_constants(space, generic_unit(space))
    for i in range(4):
        for j1 in range(4):
            for j2 in range(4):
                assert sc.c[i][j1][j2] == sc.c[i][j2][j1]
    vec = (E(3), E(-1), E(2), E(0, 1))
    assert sc.multiply(sc.unit, vec) == vec


def test_structure_constants_requires_unit_in_span():
    space = make_orbit("A1[0,0,1]@3")
    with pytest.raises(ValueError):
        structure_constants(space, _sym(3, ((0, 1), 1)))


def test_structure_constants_not_closed():
    # span(a^2, b^2, ab + c^2) is not a Jordan space
    space = JordanSpace([_sym(3, ((0, 0), 1)), _sym(3, ((1, 1), 1)),
                         _sym(3, ((0, 1), 1), ((2, 2), 1))])
    unit = _sym(3, ((0, 0), 2), ((1, 1), 1), ((0, 1), 1), ((2, 2), 1))
    assert unit.det()
    with pytest.raises(NotClosed):
        structure_constants(space, unit)


# ---------------------------------------------------------------------------
# rank

EXPECTED_RANK = {
    "CxCxC": 3, "CxJ1_0": 3, "C[x]/(x^3)": 3,
    "J2_2": 2, "J2_1": 2, "J2_0": 2,
    "CxCxCxC": 4, "CxCxJ1_0": 4, "J1_0xJ1_0": 4, "CxC[x]/(x^3)": 4,
    "C[x]/(x^4)": 4, "CxJ2_2": 3, "CxJ2_1": 3, "CxJ2_0": 3,
    "J3_3": 2, "J3_2": 2, "J3_1": 2, "J3_0": 2,
    "E_1": 3, "E_2": 3, "E_3": 3, "E_4": 3,
}

RANK_EXEMPLARS = (
    "A1[0,0,1]@3", "A2[1,0,1]@3", "A3[0,0,1]@3", "B1@4", "B2[1,0,2]@4",
    "C[4,1]@4", "wA1[0,0,0,1]@4", "wA2[0,1,0,1]@4", "wA3[0,1,0,1]@4",
    "wA4[1,0,0,1]@4", "wA5[0,0,0,1]@4", "wB1[2,1]@4", "wB2[1,1,0,2]@5",
    "wC1@4", "wC2[1]@8", "D[5,1]@5", "E1[3]@3", "E2[4]@4", "E3[4]@4",
    "E4[5,1]@5", "F[4]@4",
)


@pytest.mark.parametrize("text", RANK_EXEMPLARS)
def test_algebra_rank_matches_type(text):
    space = make_orbit(text)
    sc = structure_constants(space, generic_unit(space))
    assert algebra_rank(sc) == EXPECTED_RANK[abstract_type(text)]


def test_algebra_rank_unit_independent():
    space = make_orbit("A2[1,0,1]@3")
    units = [b for b in space.basis if b.det()]
    units.append(generic_unit(space))
    ranks = {algebra_rank(structure_constants(space, u)) for u in units}
    assert ranks == {3}


def test_rank_two_across_every_square_zero_family():
    for n in (4, 5, 6):
        for lab in enumerate_orbits(n, 3):
            if lab.family not in ("NetB1", "NetB2", "NetC"):
                continue
            space = make_orbit(lab)
            sc = structure_constants(space, generic_unit(space))
            assert algebra_rank(sc) == 2, str(lab)


# ---------------------------------------------------------------------------
# degeneration posets


@pytest.mark.parametrize("a,b,expected", [
    ("CxCxC", "CxCxC", True),
    ("CxCxC", "J2_0", True),
    ("CxCxC", "CxJ1_0", True),
    ("CxCxC", "J2_1", False),
    ("J2_2", "C[x]/(x^3)", False),
    ("J2_2", "J2_0", True),
    ("CxJ1_0", "J2_0", True),
    ("CxCxCxC", "E_4", True),
    ("CxCxCxC", "J3_0", True),
    ("CxJ2_2", "J3_0", True),
    ("J3_3", "C[x]/(x^4)", False),
    ("C[x]/(x^4)", "E_4", True),
    ("E_1", "J3_1", False),
    ("E_2", "CxJ2_0", False),
])
def test_abstract_degenerates(a, b, expected):
    assert abstract_degenerates(a, b) is expected


def test_abstract_degenerates_errors():
    with pytest.raises(UnsupportedDimension):
        abstract_degenerates("CxCxC", "E_4")
    with pytest.raises(ValueError):
        abstract_degenerates("CxCxC", "nonsense")


def test_poset_is_antisymmetric():
    for types in (DIM3_TYPES, DIM4_TYPES):
        for a in types:
            for b in types:
                if a != b and abstract_degenerates(a, b):
                    assert not abstract_degenerates(b, a)


def test_poset_is_transitive():
    for types in (DIM3_TYPES, DIM4_TYPES):
        for a in types:
            for b in types:
                if not abstract_degenerates(a, b):
                    continue
                for c in types:
                    if abstract_degenerates(b, c):
                        assert abstract_degenerates(a, c)


def test_rank_monotone_along_edges():
    for edges in (DIM3_EDGES, DIM4_EDGES):
        for a, b in edges:
            assert EXPECTED_RANK[a] >= EXPECTED_RANK[b], (a, b)


def test_catalog_types_cover_both_posets():
    seen = set()
    for m, ns in ((3, (2, 3, 4, 5, 6, 7)), (4, (3, 4, 5))):
        for n in ns:
            for lab in enumerate_orbits(n, m):
                seen.add(abstract_type(lab))
    assert set(DIM3_TYPES) <= seen
    # every dim-4 type except the spin factors with no embedding at n <= 5
    assert set(DIM4_TYPES) - seen == {"J3_1", "J3_2"}
