"""Abstract unital Jordan algebras behind the matrix spaces.

A Jordan space carries the product X * Y = (X U^-1 Y + Y U^-1 X)/2 for an
invertible U in the space, making it a unital Jordan algebra with unit U.
This module extracts exact structure constants, computes the algebra rank
(maximal degree of a minimal polynomial), and stores the known degeneration
posets of abstract Jordan algebras in dimensions 3 and 4 as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import JordanSpace, in_span, jordan_product
from .exact import ONE, ZERO, ExactScalar, ff_rank

RANK_SEED = 20240917


class NotClosed(Exception):
    """A product of basis elements left the span."""


class UnsupportedDimension(ValueError):
    """Degeneration posets are only known in dimensions 3 and 4."""


# ---------------------------------------------------------------------------
# structure constants and rank


@dataclass(frozen=True)
class StructureConstants:
    """Exact multiplication table c[i][j1][j2] and unit coordinates.

    c[i][j1][j2] is the coefficient of basis element i in the product of
    basis elements j1 and j2; the table is symmetric in (j1, j2).
    """

    dim: int
    c: tuple
    unit: tuple

    def multiply(self, a, b):
        """Product of two coordinate vectors."""
        out = []
        for i in range(self.dim):
            acc = ZERO
            for j1 in range(self.dim):
                if not a[j1]:
                    continue
                for j2 in range(self.dim):
                    if b[j2] and self.c[i][j1][j2]:
                        acc = acc + self.c[i][j1][j2] * a[j1] * b[j2]
            out.append(acc)
        return tuple(out)


def structure_constants(space: JordanSpace, U) -> StructureConstants:
    """Multiplication table of the space under the product with unit U."""
    m = space.m
    unit = in_span(space, U)
    if unit is None:
        raise ValueError("unit must lie in the space")
    table = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for j1 in range(m):
        for j2 in range(j1, m):
            prod = jordan_product(space.basis[j1], space.basis[j2], U)
            coords = in_span(space, prod)
            if coords is None:
                raise NotClosed(
                    f"product of basis elements {j1}, {j2} leaves the span")
            for i in range(m):
                table[i][j1][j2] = coords[i]
                table[i][j2][j1] = coords[i]
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
    return StructureConstants(m, frozen, tuple(unit))


def _min_poly_degree(sc: StructureConstants, x) -> int:
    """Smallest k >= 1 with unit, x, ..., x^k linearly dependent."""
    rows = [list(sc.unit)]
    power = tuple(x)
    for k in range(1, sc.dim + 2):
        rows.append(list(power))
        if ff_rank(rows) < len(rows):
            return k
        power = sc.multiply(power, x)
    raise RuntimeError("minimal polynomial not found")  # unreachable


def algebra_rank(sc: StructureConstants, seed=RANK_SEED) -> int:
    """Max over sampled elements of the minimal-polynomial degree."""
    best = 1
    for coords in itertools.product((0, 1, 2), repeat=sc.dim):
        if not any(coords):
            continue
        x = tuple(ExactScalar(c) for c in coords)
        best = max(best, _min_poly_degree(sc, x))
        if best == sc.dim:
            return best
    rng = np.random.default_rng(seed)
    for _ in range(20):
        x = tuple(ExactScalar(Fraction(int(a), int(b)))
                  for a, b in zip(rng.integers(-9, 10, sc.dim),
                                  rng.integers(1, 6, sc.dim)))
        best = max(best, _min_poly_degree(sc, x))
        if best == sc.dim:
            return best
    return best


# ---------------------------------------------------------------------------
# abstract types and their degeneration posets

# Dimension 3 (products of C, J^1_0 and the indecomposables J^2_r,
# C[x]/(x^3)); dimension 4 adds the E-series and J^3_r.

DIM3_TYPES = ("CxCxC", "CxJ1_0", "C[x]/(x^3)", "J2_2", "J2_1", "J2_0")
DIM4_TYPES = ("CxCxCxC", "CxCxJ1_0", "J1_0xJ1_0", "CxJ2_2", "CxJ2_1",
              "CxJ2_0", "CxC[x]/(x^3)", "J3_3", "J3_2", "J3_1", "J3_0",
              "C[x]/(x^4)", "E_1", "E_2", "E_3", "E_4")

TYPE_DIMENSION = {t: 3 for t in DIM3_TYPES}
TYPE_DIMENSION.update({t: 4 for t in DIM4_TYPES})

# Edge lists transcribed from the two classification diagrams.
DIM3_EDGES = (
    ("CxCxC", "CxJ1_0"),
    ("CxJ1_0", "C[x]/(x^3)"),
    ("C[x]/(x^3)", "J2_0"),
    ("J2_2", "J2_1"),
    ("J2_1", "J2_0"),
)

DIM4_EDGES = (
    ("CxCxCxC", "CxCxJ1_0"),
    ("CxCxJ1_0", "J1_0xJ1_0"),
    ("CxCxJ1_0", "CxC[x]/(x^3)"),
    ("J1_0xJ1_0", "C[x]/(x^4)"),
    ("CxJ2_2", "CxJ2_1"),
    ("CxJ2_2", "E_1"),
    ("CxJ2_1", "CxJ2_0"),
    ("CxJ2_1", "E_2"),
    ("CxJ2_0", "E_4"),
    ("CxC[x]/(x^3)", "CxJ2_0"),
    ("CxC[x]/(x^3)", "C[x]/(x^4)"),
    ("J3_3", "J3_2"),
    ("J3_2", "J3_1"),
    ("J3_1", "J3_0"),
    ("C[x]/(x^4)", "E_3"),
    ("E_1", "E_2"),
    ("E_2", "E_3"),
    ("E_3", "E_4"),
    ("E_4", "J3_0"),
)


@lru_cache(maxsize=None)
def _closure(dim: int) -> frozenset:
    edges = DIM3_EDGES if dim == 3 else DIM4_EDGES
    types = DIM3_TYPES if dim == 3 else DIM4_TYPES
    reach = {t: {t} for t in types}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            add = reach[b] - reach[a]
            if add:
                reach[a] |= add
                changed = True
    return frozenset((a, b) for a, s in reach.items() for b in s)


def abstract_degenerates(a: str, b: str) -> bool:
    """Reachability in the known degeneration diagrams (reflexive)."""
    if a not in TYPE_DIMENSION or b not in TYPE_DIMENSION:
        raise ValueError(f"unknown abstract type: {a if a not in TYPE_DIMENSION else b}")
    da, db = TYPE_DIMENSION[a], TYPE_DIMENSION[b]
    if da != db or da not in (3, 4):
        raise UnsupportedDimension(
            f"no degeneration diagram for {a} ({da}) vs {b} ({db})")
    return (a, b) in _closure(da)
