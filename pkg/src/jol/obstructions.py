"""Exact obstructions to degenerations between catalog orbits.

Five independent checks can prove that no congruence degeneration
src -> dst exists: comparison of the abstract Jordan algebras, of the
determinant factorization patterns, of the minimal-rank numbers tau_k,
of the Segre symbols, and of the orbit dimensions.  A small registry
carries impossibility facts proved by ad hoc arguments that none of the
five checks reproduces.  The overall verdict is "ProvedImpossible" as
soon as one source blocks, and "NotBlocked" otherwise; NotBlocked is
not a proof of existence.

Only exact data may block: tau and Segre comparisons use the tabulated
closed-form values and are inconclusive where no table applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abstract import abstract_degenerates
from .catalog import (
    NotTabulated,
    OrbitLabel,
    abstract_type,
    known_invariants,
    make_orbit,
    parse_label,
    validate_label,
)
from .invariants import det_form, det_profile, orbit_dimension, segre_leq

BLOCKS = "blocks"
PASSES = "passes"
INCONCLUSIVE = "inconclusive"

CHECK_NAMES = ("abstract", "determinant", "tau", "segre", "dimension")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single obstruction check."""

    status: str
    evidence: str = ""

    @property
    def blocks(self):
        return self.status == BLOCKS


@dataclass(frozen=True)
class ObstructionVerdict:
    """Combined outcome of all checks plus the registry lookup."""

    src: str
    dst: str
    checks: dict
    registry: str | None
    overall: str

    def to_json(self):
        return {
            "src": self.src,
            "dst": self.dst,
            "overall": self.overall,
            "registry": self.registry,
            "checks": {name: {"status": r.status, "evidence": r.evidence}
                       for name, r in self.checks.items()},
        }


def _pair(src, dst):
    src = parse_label(src) if isinstance(src, str) else src
    dst = parse_label(dst) if isinstance(dst, str) else dst
    validate_label(src)
    validate_label(dst)
    if src.n != dst.n or src.dim() != dst.dim():
        raise ValueError(f"{src} and {dst} live in different ambient spaces")
    return src, dst


@lru_cache(maxsize=None)
def _known(text):
    try:
        return known_invariants(text)
    except NotTabulated:
        return None


@lru_cache(maxsize=None)
def _profile(text):
    known = _known(text)
    if known is not None:
        return known.det_profile
    return det_profile(det_form(make_orbit(text)))


@lru_cache(maxsize=None)
def _dims(text):
    return orbit_dimension(make_orbit(text))


def check_abstract(src, dst) -> CheckResult:
    """Blocks when the abstract algebra poset forbids the step."""
    src, dst = _pair(src, dst)
    ta, tb = abstract_type(src), abstract_type(dst)
    if abstract_degenerates(ta, tb):
        return CheckResult(PASSES, f"{ta} -> {tb}")
    return CheckResult(BLOCKS, f"{ta} does not degenerate to {tb}")


def _merges_to(src_parts, dst_parts):
    """dst multiset obtained from src by grouping parts and summing."""
    src_parts = tuple(sorted(src_parts, reverse=True))
    dst_parts = tuple(sorted(dst_parts, reverse=True))
    if sum(src_parts) != sum(dst_parts):
        return False

    def solve(remaining, targets):
        if not targets:
            return not remaining
        goal, rest = targets[0], targets[1:]

        def pick(idx, total, used):
            if total == goal:
                left = tuple(v for i, v in enumerate(remaining)
                             if i not in used)
                if solve(left, rest):
                    return True
            if total > goal or idx >= len(remaining):
                return False
            if pick(idx + 1, total + remaining[idx], used | {idx}):
                return True
            # skip equal values wholesale to avoid duplicate branches
            j = idx
            while j < len(remaining) and remaining[j] == remaining[idx]:
                j += 1
            return pick(j, total, used)

        return pick(0, 0, frozenset())

    return solve(src_parts, dst_parts)


def _power_exponent(profile):
    """Largest k with det = (something)^k, from the profile."""
    if profile.kind == "split":
        from math import gcd
        k = 0
        for e in profile.exponents:
            k = gcd(k, e)
        return max(k, 1)
    if profile.kind == "power":
        return profile.power
    return 1


def check_determinant(src, dst) -> CheckResult:
    """Blocks when the determinant cannot specialize as required.

    A split determinant stays split with exponents merging (linear forms
    may collide in the limit, adding their exponents); a perfect k-th
    power stays a perfect k-th power.
    """
    src, dst = _pair(src, dst)
    ps, pd = _profile(str(src)), _profile(str(dst))
    if ps.kind == "split" and pd.kind == "split":
        if _merges_to(ps.exponents, pd.exponents):
            return CheckResult(
                PASSES, f"{list(ps.exponents)} merges to {list(pd.exponents)}")
        return CheckResult(
            BLOCKS,
            f"exponents {list(ps.exponents)} cannot merge to"
            f" {list(pd.exponents)}")
    if ps.kind == "power":
        k = ps.power
        if _power_exponent(pd) % k == 0:
            return CheckResult(PASSES, f"both are perfect {k}-th powers")
        return CheckResult(
            BLOCKS, f"target determinant is not a perfect {k}-th power")
    return CheckResult(INCONCLUSIVE, "no comparable factorization pattern")


def check_tau(src, dst) -> CheckResult:
    """Blocks when some exact tau_k would have to increase.

    Degeneration can only shrink the minimal rank of a k-dimensional
    subspace, so tau_k(dst) <= tau_k(src) is necessary.  Only tabulated
    (exact) values are consulted; tau_m equals n on both sides for
    regular spaces and never decides.
    """
    src, dst = _pair(src, dst)
    ks, kd = _known(str(src)), _known(str(dst))
    if ks is None or kd is None:
        return CheckResult(INCONCLUSIVE, "no exact tau values tabulated")
    for k, vs, vd in ((1, ks.tau1, kd.tau1), (2, ks.tau2, kd.tau2)):
        if vd > vs:
            return CheckResult(BLOCKS, f"tau_{k}: {vs} < {vd}")
    return CheckResult(PASSES, "tau_1 and tau_2 are monotone")


def check_segre(src, dst) -> CheckResult:
    """Blocks when the Segre symbols fail sigma(dst) <= sigma(src).

    Consults tabulated symbols only; pairs without a tabulated symbol
    on both sides are inconclusive.
    """
    src, dst = _pair(src, dst)
    ks, kd = _known(str(src)), _known(str(dst))
    if ks is None or kd is None or ks.segre is None or kd.segre is None:
        return CheckResult(INCONCLUSIVE, "no exact Segre symbols tabulated")
    if segre_leq(kd.segre, ks.segre):
        return CheckResult(PASSES, f"{kd.segre} <= {ks.segre}")
    return CheckResult(BLOCKS, f"{kd.segre} is not below {ks.segre}")


def check_dimension(src, dst) -> CheckResult:
    """Blocks when the orbit dimensions forbid a proper degeneration.

    A strict degeneration lands in a strictly smaller orbit; equal
    dimensions are only possible for the orbit itself.
    """
    src, dst = _pair(src, dst)
    if src == dst:
        return CheckResult(BLOCKS, "identity: strict degenerations only")
    ds, dd = _dims(str(src))[0], _dims(str(dst))[0]
    if ds < dd:
        return CheckResult(BLOCKS, f"orbit dimension {ds} < {dd}")
    if ds == dd:
        return CheckResult(BLOCKS, f"equal orbit dimension {ds}")
    return CheckResult(PASSES, f"orbit dimension {ds} > {dd}")


# ---------------------------------------------------------------------------
# registry of impossibility facts proved by ad hoc arguments

_SYMBOL_CITE = ("Segre symbols {} and {} are incomparable in the strict "
                "symbol order")

REGISTRY = {
    ("A2[2,0,1]@4", "C[4,1]@4"):
        "ad hoc closure argument in the n = 4 net classification",
    ("A2[3,0,1]@5", "C[5,1]@5"):
        "ad hoc closure argument in the n = 5 net classification",
    ("B2[1,1,2]@5", "C[5,1]@5"):
        "ad hoc closure argument in the n = 5 net classification",
    ("B2[1,0,3]@6", "C[6,6]@6"):
        "ad hoc rank argument in the n = 6 net classification",
    ("B2[1,0,3]@6", "C[6,3]@6"):
        "follows from the C[6,6] rank argument by composition, since"
        " C[6,3] degenerates to C[6,6]",
    ("A2[3,1,1]@6", "C[6,4]@6"):
        _SYMBOL_CITE.format("(111)(21)", "(222)"),
    ("A2[4,0,1]@6", "C[6,7]@6"):
        _SYMBOL_CITE.format("(1111)(2)", "(2211)"),
    ("A3[0,0,2]@6", "C[6,4]@6"):
        _SYMBOL_CITE.format("(33)", "(222)"),
    ("B2[1,2,2]@6", "C[6,7]@6"):
        "non-edge of the n = 6 net classification",
}


def verdict(src, dst) -> ObstructionVerdict:
    """Run every check plus the registry and combine the results."""
    src, dst = _pair(src, dst)
    checks = {
        "abstract": check_abstract(src, dst),
        "determinant": check_determinant(src, dst),
        "tau": check_tau(src, dst),
        "segre": check_segre(src, dst),
        "dimension": check_dimension(src, dst),
    }
    cite = REGISTRY.get((str(src), str(dst)))
    blocked = cite is not None or any(r.blocks for r in checks.values())
    return ObstructionVerdict(
        str(src), str(dst), checks, cite,
        "ProvedImpossible" if blocked else "NotBlocked")
