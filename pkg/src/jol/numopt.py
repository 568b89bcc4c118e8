"""Numerical degeneration search by orbit-distance minimization.

A degeneration of congruence orbits survives passing to orthonormal layer
bases: the orbit of Y meets the closure of the orbit of X exactly when

    F(P) = min_Q  || Y - [[X; P, P, Q]] ||^2

has infimum zero over invertible P.  The inner minimum over the layer-mixing
matrix Q is a linear least-squares problem, so we optimize F over the 2n^2
real coordinates of P with a quasi-Newton method and many random starts.
A small best value is numerical evidence for a degeneration; a large one,
combined with the exact obstructions, is evidence against.  Neither is a
proof on its own, which is why the final classification keeps the numeric
and the proved sources apart.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .catalog import enumerate_orbits, make_orbit, parse_label
from .core import BasisTensor, orthonormal_tensor
from .invariants import DEFAULT_SEED, orbit_dimension
from .obstructions import verdict as obstruction_verdict
from .witness import witness_db

YES_THRESHOLD = 1e-6
NO_THRESHOLD = 0.1
GRAD_TOL = 1e-10
VALUE_TOL = 1e-14
MAX_ITERATIONS = 2000
EARLY_STOP = 1e-7
CONSISTENCY_EPS = 1e-3


# ---------------------------------------------------------------------------
# distance and gradient


def _stack(tensor):
    """Layers of a BasisTensor (or raw stack) as one (m, n, n) array."""
    if isinstance(tensor, BasisTensor):
        return np.stack(tensor.layers)
    arr = np.asarray(tensor, dtype=complex)
    if arr.ndim != 3:
        raise ValueError("expected a BasisTensor or an (m, n, n) stack")
    return arr


def distance_f(X, Y, P, Q) -> float:
    """Squared Frobenius distance || Y - [[X; P, P, Q]] ||^2.

    Layer k of the moved tensor is sum_j Q[j, k] * P X_j P^T, the same
    convention the exact witnesses use.
    """
    Xl, Yl = _stack(X), _stack(Y)
    P = np.asarray(P, dtype=complex)
    Q = np.asarray(Q, dtype=complex)
    moved = np.einsum("jk,jab->kab", Q, P @ Xl @ P.T)
    return float(np.sum(np.abs(Yl - moved) ** 2))


def _design(Xl, Yl, P):
    """Least-squares data: columns vec(P X_j P^T) against columns vec(Y_k)."""
    m = Xl.shape[0]
    A = (P @ Xl @ P.T).reshape(m, -1).T
    B = Yl.reshape(m, -1).T
    return A, B


def distance_F(X, Y, P):
    """Inner minimum over Q: returns (value, minimizing Q).

    f is quadratic and convex in Q, so the minimizer solves a linear
    least-squares problem; on rank deficiency the minimum-norm Q is
    returned.
    """
    Xl, Yl = _stack(X), _stack(Y)
    A, B = _design(Xl, Yl, np.asarray(P, dtype=complex))
    Q, *_ = np.linalg.lstsq(A, B, rcond=None)
    value = float(np.sum(np.abs(A @ Q - B) ** 2))
    return value, Q


def _solve_layers(A, B):
    """Layer mixing minimizing ||A Q - B||; returns (Q, residual B - A Q).

    Normal equations when the moved basis has full rank, minimum-norm least
    squares otherwise.  Near a degeneration the moved basis turns
    rank-deficient and the normal equations lose half the working precision,
    which would stall the search around 1e-6; whenever the residual comes
    out small the solve is redone with the accurate SVD path.
    """
    G = A.conj().T @ A
    try:
        Q = np.linalg.solve(G, A.conj().T @ B)
    except np.linalg.LinAlgError:
        Q = None
    if Q is not None and np.isfinite(Q.sum()):
        R = B - A @ Q
        if np.vdot(R, R).real >= 1e-4:
            return Q, R
    Q, *_ = np.linalg.lstsq(A, B, rcond=None)
    return Q, B - A @ Q


def _pack(P):
    return np.concatenate([P.real.ravel(), P.imag.ravel()])


def _unpack(x, n):
    half = n * n
    return (x[:half] + 1j * x[half:]).reshape(n, n)


def _value_and_grad(Xl, Yl, P):
    """F(P) and its gradient over the 2n^2 real coordinates of P.

    With Q* the inner minimizer, Z_k = sum_j Q*[j, k] X_j and residuals
    R_k = Y_k - P Z_k P^T, the packed complex gradient is

        G = -2 sum_k ( R_k conj(P Z_k) + R_k^T conj(P Z_k^T) )

    and the real gradient is (Re G, Im G).  At rank-deficient P this is the
    selection of the Clarke set induced by the minimum-norm Q*.
    """
    m, n = Xl.shape[0], Xl.shape[1]
    A = (P @ Xl @ P.T).reshape(m, -1).T
    B = Yl.reshape(m, -1).T
    Q, Rflat = _solve_layers(A, B)
    value = float(np.vdot(Rflat, Rflat).real)
    R = Rflat.T.reshape(m, n, n)
    Z = np.tensordot(Q, Xl, axes=(0, 0))
    PZc = (P @ Z).conj()
    PZtc = (P @ Z.transpose(0, 2, 1)).conj()
    G = -2.0 * (R.transpose(1, 0, 2).reshape(n, -1) @ PZc.reshape(-1, n)
                + R.reshape(-1, n).T @ PZtc.reshape(-1, n))
    return value, _pack(G)


def _value_only(Xl, Yl, P):
    """F(P) alone, for line-search trial points."""
    m = Xl.shape[0]
    A = (P @ Xl @ P.T).reshape(m, -1).T
    B = Yl.reshape(m, -1).T
    _, R = _solve_layers(A, B)
    return float(np.vdot(R, R).real)


def grad_F(X, Y, P) -> np.ndarray:
    """Real gradient of distance_F over (Re P, Im P), flattened."""
    Xl, Yl = _stack(X), _stack(Y)
    _, g = _value_and_grad(Xl, Yl, np.asarray(P, dtype=complex))
    return g


# ---------------------------------------------------------------------------
# BFGS with Armijo backtracking


def _bfgs(fun, fun_value, x0, gtol=GRAD_TOL, ftol=VALUE_TOL,
          maxiter=MAX_ITERATIONS, c1=1e-4):
    """Minimize fun(x) -> (value, gradient); returns (x, f, iters, converged).

    Dense inverse-Hessian BFGS, identity start, halving Armijo line search
    (trial points evaluated by fun_value alone), restart on a non-descent
    direction or failed curvature.  When even the steepest-descent direction
    admits no Armijo decrease the iterate is numerically stationary and the
    loop exits early.  Converged means the gradient or value tolerance was
    met before the iteration cap.
    """
    x = np.asarray(x0, dtype=float)
    f, g = fun(x)
    d = x.size
    H = np.eye(d)
    fresh = True
    it = 0
    while it < maxiter:
        if np.linalg.norm(g) <= gtol or f <= ftol:
            return x, f, it, True
        p = -H @ g
        slope = float(p @ g)
        if slope >= 0.0:
            H = np.eye(d)
            fresh = True
            p = -g
            slope = float(p @ g)
        # Below this step size the Armijo decrease c1*alpha*|slope| is smaller
        # than one ulp of f, so the test can never pass; stop halving there.
        floor = max(1e-18, 2e-16 * abs(f) / max(-slope, 1e-300))
        alpha = 1.0
        fn = fun_value(x + p)
        while fn > f + c1 * alpha * slope and alpha > floor:
            alpha *= 0.5
            fn = fun_value(x + alpha * p)
        if fn > f + c1 * alpha * slope:
            if fresh:
                break
            H = np.eye(d)
            fresh = True
            it += 1
            continue
        s = alpha * p
        fn, gn = fun(x + s)
        y = gn - g
        sy = float(s @ y)
        if sy > 1e-12 * np.linalg.norm(s) * np.linalg.norm(y):
            Hy = H @ y
            yHy = float(y @ Hy)
            H += ((sy + yHy) / sy ** 2) * np.outer(s, s)
            H -= (np.outer(Hy, s) + np.outer(s, Hy)) / sy
            fresh = False
        else:
            H = np.eye(d)
            fresh = True
        x = x + s
        f, g = fn, gn
        it += 1
    return x, f, it, bool(np.linalg.norm(g) <= gtol or f <= ftol)


# ---------------------------------------------------------------------------
# multistart search


@dataclass
class DistanceResult:
    """Outcome of a multistart orbit-distance minimization."""

    src: object
    dst: object
    per_start: list
    best_F: float
    best_P: np.ndarray
    best_Q: np.ndarray
    wall_time: float

    def to_json(self):
        return {
            "src": None if self.src is None else str(self.src),
            "dst": None if self.dst is None else str(self.dst),
            "best_F": self.best_F,
            "wall_time": self.wall_time,
            "per_start": [
                {"seed": s, "F": f, "iterations": it, "converged": conv}
                for s, f, it, conv in self.per_start
            ],
            "best_P": [[[z.real, z.imag] for z in row] for row in self.best_P],
            "best_Q": [[[z.real, z.imag] for z in row] for row in self.best_Q],
        }


def multistart_search(X, Y, n_starts=50, seed=DEFAULT_SEED, src=None,
                      dst=None, early_stop=EARLY_STOP) -> DistanceResult:
    """Minimize F from n_starts random P, merged by the minimum.

    Start i seeds its own generator with seed + i, so runs are deterministic
    regardless of scheduling and any prefix of starts is reproducible.  Each
    start draws P with independent standard complex Gaussian entries.  Once
    a start reaches early_stop the remaining starts are skipped (the merge
    is by minimum, so they cannot change the classification); pass
    early_stop=0 to force all starts.  per_start is sorted by final value.
    """
    if n_starts < 1:
        raise ValueError("n_starts must be at least 1")
    Xl, Yl = _stack(X), _stack(Y)
    n = Xl.shape[1]
    if Yl.shape[1] != n or Xl.shape[0] != Yl.shape[0]:
        raise ValueError("tensors live in different spaces")

    def fun(x):
        return _value_and_grad(Xl, Yl, _unpack(x, n))

    def fun_value(x):
        return _value_only(Xl, Yl, _unpack(x, n))

    t0 = time.perf_counter()
    per_start = []
    best = None
    for i in range(n_starts):
        s = seed + i
        rng = np.random.default_rng(s)
        P0 = (rng.standard_normal((n, n))
              + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
        x, f, iters, conv = _bfgs(fun, fun_value, _pack(P0))
        per_start.append((s, f, iters, conv))
        if best is None or f < best[1]:
            best = (x, f)
        if f <= early_stop:
            break
    per_start.sort(key=lambda rec: (rec[1], rec[0]))
    best_P = _unpack(best[0], n)
    _, best_Q = distance_F(Xl, Yl, best_P)
    return DistanceResult(src, dst, per_start, best[1], best_P, best_Q,
                          time.perf_counter() - t0)


def search_pair(src, dst, n_starts=50, seed=DEFAULT_SEED,
                early_stop=EARLY_STOP) -> DistanceResult:
    """multistart_search between the orthonormal tensors of two orbits."""
    src, dst = parse_label(str(src)), parse_label(str(dst))
    X = orthonormal_tensor(make_orbit(src))
    Y = orthonormal_tensor(make_orbit(dst))
    return multistart_search(X, Y, n_starts=n_starts, seed=seed, src=src,
                             dst=dst, early_stop=early_stop)


def pair_grid(n, m, n_starts=50, seed=DEFAULT_SEED, early_stop=EARLY_STOP,
              pairs=None, progress=None) -> dict:
    """DistanceResult for ordered pairs of distinct catalog orbits.

    Returns {(str(src), str(dst)): DistanceResult}.  pairs restricts the
    computation; by default every ordered pair of distinct orbits runs.
    Every pair runs the same start stream (seed + i for start i), so each
    grid entry equals the corresponding search_pair result and restricted
    runs reproduce grid entries exactly.
    """
    labels = [str(lbl) for lbl in enumerate_orbits(n, m)]
    tensors = {lbl: orthonormal_tensor(make_orbit(lbl)) for lbl in labels}
    wanted = None if pairs is None else {
        (str(a), str(b)) for a, b in pairs}
    out = {}
    for a in labels:
        for b in labels:
            if a == b:
                continue
            if wanted is not None and (a, b) not in wanted:
                continue
            result = multistart_search(
                tensors[a], tensors[b], n_starts=n_starts, seed=seed,
                src=parse_label(a), dst=parse_label(b),
                early_stop=early_stop)
            out[(a, b)] = result
            if progress is not None:
                progress(a, b, result)
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class DegenStatus:
    """Classification of one ordered orbit pair.

    NumericYes and NumericNo are evidence, not proof: NumericYes requires
    best_F at or under the yes threshold, NumericNo requires best_F at or
    over the no threshold and (at grid level) a clean consistency check.
    """

    tag: str
    detail: str = ""
    best_F: float | None = None


def _witness_edges(witnesses):
    edges = {}
    for w in witnesses:
        edges.setdefault(str(w.src), set()).add(str(w.dst))
    return edges


def witness_path_exists(src, dst, witnesses) -> bool:
    """True when witnessed degenerations compose from src to dst."""
    src, dst = str(src), str(dst)
    if src == dst:
        return True
    edges = witnesses if isinstance(witnesses, dict) else (
        _witness_edges(witnesses))
    seen = {src}
    frontier = [src]
    while frontier:
        here = frontier.pop()
        for there in edges.get(here, ()):
            if there == dst:
                return True
            if there not in seen:
                seen.add(there)
                frontier.append(there)
    return False


def classify(result, verdict=None, witnesses=None) -> DegenStatus:
    """Combine numeric, obstruction, and witness information for one pair.

    Proofs win: a witness path gives ProvedYes and a ProvedImpossible
    verdict gives ProvedNo before best_F is consulted.  Between the numeric
    thresholds the answer is Unknown, never guessed.
    """
    src = result.src if result is not None else None
    dst = result.dst if result is not None else None
    if witnesses is not None and src is not None and (
            witness_path_exists(src, dst, witnesses)):
        return DegenStatus("ProvedYes", "witness path")
    if verdict is not None and verdict.overall == "ProvedImpossible":
        blockers = [name for name, r in verdict.checks.items() if r.blocks]
        if verdict.registry:
            blockers.append(f"registry {verdict.registry}")
        return DegenStatus("ProvedNo", ", ".join(blockers))
    if result is None:
        return DegenStatus("Unknown", "no numeric result")
    if result.best_F <= YES_THRESHOLD:
        return DegenStatus("NumericYes", "", result.best_F)
    if result.best_F >= NO_THRESHOLD:
        return DegenStatus("NumericNo", "", result.best_F)
    return DegenStatus("Unknown", "between thresholds", result.best_F)


def consistency_check(results, known_edges, eps=CONSISTENCY_EPS):
    """Monotonicity flags: if X degenerates to Y, F(X,Z) <= F(Y,Z) + eps.

    results maps ordered pairs to DistanceResult (or a best_F number);
    known_edges lists degenerations (X, Y) taken as true.  Returns
    (X, Z, Y, F(X,Z), F(Y,Z)) for every violation; flagged entries should
    be re-run with fresh seeds.
    """
    table = {}
    if isinstance(results, dict):
        items = results.items()
    else:
        items = (((r.src, r.dst), r) for r in results)
    for (a, b), r in items:
        table[(str(a), str(b))] = r.best_F if isinstance(
            r, DistanceResult) else float(r)
    flags = []
    zs = sorted({b for _, b in table})
    for x, y in known_edges:
        x, y = str(x), str(y)
        for z in zs:
            fxz = table.get((x, z))
            fyz = table.get((y, z))
            if fxz is None or fyz is None:
                continue
            if fxz > fyz + eps:
                flags.append((x, z, y, fxz, fyz))
    return flags


# ---------------------------------------------------------------------------
# Hasse diagrams


@dataclass
class HasseDiagram:
    """Transitive reduction of the degeneration relation on one catalog."""

    n: int
    m: int
    mode: str
    nodes: list
    codim: dict
    edges: list
    unknown: list
    status: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "mode": self.mode,
            "nodes": list(self.nodes),
            "codim": dict(self.codim),
            "edges": [list(e) for e in self.edges],
            "unknown": [list(e) for e in self.unknown],
        }


def transitive_closure(nodes, edges):
    """Reachability pairs (x, y), x != y, of a directed graph."""
    adj = {v: set() for v in nodes}
    for a, b in edges:
        if a != b:
            adj[a].add(b)
    closure = set()
    for start in nodes:
        seen = set()
        frontier = [start]
        while frontier:
            here = frontier.pop()
            for there in adj[here]:
                if there not in seen:
                    seen.add(there)
                    frontier.append(there)
        closure.update((start, v) for v in seen if v != start)
    return closure


def transitive_reduction(nodes, relation):
    """Unique minimal edge set of a DAG with the given reachability."""
    pairs = {(a, b) for a, b in relation if a != b}
    for a, b in pairs:
        if (b, a) in pairs:
            raise ValueError(f"degeneration relation has a cycle at"
                             f" {a} <-> {b}")
    closure = transitive_closure(nodes, pairs)
    return sorted((a, b) for a, b in closure
                  if not any((a, c) in closure and (c, b) in closure
                             for c in nodes))


def hasse(n, m, mode="proved", n_starts=50, seed=DEFAULT_SEED, results=None,
          witnesses=None, progress=None) -> HasseDiagram:
    """Degeneration diagram of the (n, m) catalog under one evidence mode.

    proved uses witness paths for yes and obstruction verdicts for no;
    numeric uses multistart best_F against the two thresholds; combined
    takes the union of proofs and numerics.  Edges are the transitive
    reduction of the yes relation; unknown lists the unresolved ordered
    pairs (the dotted edges of the printed diagrams).  Nodes carry exact
    orbit codimensions.  In proved mode no numerics run; in combined mode
    numerics run only for pairs the proofs leave open.  A precomputed
    results mapping (from pair_grid) is reused instead.
    """
    if mode not in ("proved", "numeric", "combined"):
        raise ValueError("mode must be proved, numeric, or combined")
    labels = [str(lbl) for lbl in enumerate_orbits(n, m)]
    pairs = [(a, b) for a in labels for b in labels if a != b]

    proved_yes, proved_no = set(), set()
    if mode in ("proved", "combined"):
        if witnesses is None:
            witnesses = [w for w in witness_db(n) if w.n == n and w.m == m]
        edges = _witness_edges(witnesses)
        for a, b in pairs:
            if witness_path_exists(a, b, edges):
                proved_yes.add((a, b))
            elif obstruction_verdict(a, b).overall == "ProvedImpossible":
                proved_no.add((a, b))

    numeric_yes, numeric_no = set(), set()
    if mode in ("numeric", "combined"):
        table = {}
        if results is not None:
            for (a, b), r in results.items():
                table[(str(a), str(b))] = r.best_F if isinstance(
                    r, DistanceResult) else float(r)
        todo = [(a, b) for a, b in pairs
                if (a, b) not in table
                and (a, b) not in proved_yes and (a, b) not in proved_no]
        if todo:
            computed = pair_grid(n, m, n_starts=n_starts, seed=seed,
                                 pairs=todo, progress=progress)
            for (a, b), r in computed.items():
                table[(a, b)] = r.best_F
        for (a, b), f in table.items():
            if f <= YES_THRESHOLD:
                numeric_yes.add((a, b))
            elif f >= NO_THRESHOLD:
                numeric_no.add((a, b))

    if mode == "proved":
        yes, no = proved_yes, proved_no
    elif mode == "numeric":
        yes, no = numeric_yes, numeric_no
    else:
        yes = proved_yes | numeric_yes
        no = proved_no | (numeric_no - yes)

    status = {}
    for a, b in pairs:
        if (a, b) in proved_yes and mode != "numeric":
            status[(a, b)] = "ProvedYes"
        elif (a, b) in proved_no and mode != "numeric":
            status[(a, b)] = "ProvedNo"
        elif (a, b) in numeric_yes:
            status[(a, b)] = "NumericYes"
        elif (a, b) in numeric_no:
            status[(a, b)] = "NumericNo"
        else:
            status[(a, b)] = "Unknown"

    unknown = sorted((a, b) for a, b in pairs
                     if (a, b) not in yes and (a, b) not in no)
    codim = {lbl: orbit_dimension(make_orbit(lbl))[1] for lbl in labels}
    reduced = transitive_reduction(labels, yes)
    return HasseDiagram(n, m, mode, labels, codim, reduced, unknown, status)
