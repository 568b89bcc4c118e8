"""Command-line front end: catalog queries, verdicts, searches, diagrams.

Subcommands mirror the library layers: catalog and invariants list orbits,
obstruct and verify answer one pair exactly, search and grid run the
numerical minimization, hasse assembles degeneration diagrams.  Output is
text by default, JSON under --json / --format json, and DOT for diagrams
under --format dot.  A read-through cache (--cache FILE or JOL_CACHE)
keyed by command, canonical arguments, and seed makes reruns byte
identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .catalog import LabelError, enumerate_orbits, make_orbit, parse_label
from .invariants import DEFAULT_SEED, orbit_dimension, report
from .numopt import classify, hasse, pair_grid, search_pair
from .obstructions import verdict
from .witness import check_witness, witness_db

_GRAMMAR = (
    "labels follow FAMILY[params]@n — nets: A1[k1,k2,k3], A2[r,k1,k2], "
    "A3[k1,k2,k3], B1, B2[k,l1,l2], C[n,i]; webs: wA1..wA5[k1,k2,k3,k4], "
    "wB1[k,l], wB2[...], wC1, D[n,i], E1[n,i], E2[n], E3[n,i], E4[n,i], "
    "F[n] — e.g. A2[1,2,1]@5, B1@6, C[5,2]@5, wA4[1,0,0,1]@4")


class _Parser(argparse.ArgumentParser):
    """Parser whose usage errors also state the label grammar."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n{_GRAMMAR}\n")
        raise SystemExit(2)


# ---------------------------------------------------------------------------
# run records and the read-through cache


@dataclass
class RunRecord:
    """One cached command run; the cache key ignores version and time."""

    command: str
    arguments: dict
    seed: object
    version: str
    timestamp: str
    payload: object

    def to_json(self):
        return {"command": self.command, "arguments": self.arguments,
                "seed": self.seed, "version": self.version,
                "timestamp": self.timestamp, "payload": self.payload}


def _cache_key(command, arguments, seed):
    return json.dumps({"command": command, "arguments": arguments,
                       "seed": seed},
                      sort_keys=True, separators=(",", ":"))


def _cached(cache_path, command, arguments, seed, compute):
    """Return the payload for the run, via the cache when enabled."""
    key = _cache_key(command, arguments, seed)
    store = {}
    if cache_path and os.path.exists(cache_path):
        try:
            with open(cache_path) as fh:
                store = json.load(fh)
        except (OSError, json.JSONDecodeError):
            store = {}
    if key in store:
        return store[key]["payload"]
    payload = _round12(compute())
    if cache_path:
        record = RunRecord(command, arguments, seed, __version__,
                           datetime.now(timezone.utc).isoformat(), payload)
        store[key] = record.to_json()
        with open(cache_path, "w") as fh:
            json.dump(store, fh, indent=2, sort_keys=True)
    return payload


def _round12(obj):
    """Round every float to 12 significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, list):
        return [_round12(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    return obj


# ---------------------------------------------------------------------------
# DOT emission


def emit_dot(diagram) -> str:
    """Render a diagram as DOT: codim rank rows, dashed Unknown pairs."""
    lines = ["digraph degenerations {", "  rankdir=TB;",
             "  node [shape=box];"]
    for label in diagram.nodes:
        codim = diagram.codim.get(label)
        text = label if codim is None else f"{label}\\ncodim {codim}"
        lines.append(f'  "{label}" [label="{text}"];')
    by_codim = {}
    for label in diagram.nodes:
        by_codim.setdefault(diagram.codim.get(label), []).append(label)
    for codim in sorted(k for k in by_codim if k is not None):
        row = "; ".join(f'"{v}"' for v in by_codim[codim])
        lines.append(f"  {{ rank=same; {row}; }}")
    for a, b in diagram.edges:
        lines.append(f'  "{a}" -> "{b}";')
    for a, b in diagram.unknown:
        lines.append(f'  "{a}" -> "{b}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_from_payload(payload):
    """emit_dot over a cached hasse payload (plain JSON data)."""

    class _Shim:
        nodes = payload["nodes"]
        codim = payload["codim"]
        edges = [tuple(e) for e in payload["edges"]]
        unknown = [tuple(e) for e in payload["unknown"]]

    return emit_dot(_Shim)


# ---------------------------------------------------------------------------
# command payloads


def _payload_catalog(n, dim):
    orbits = []
    for label in enumerate_orbits(n, dim):
        d, codim = orbit_dimension(make_orbit(label))
        orbits.append({"label": str(label), "dim": int(d),
                       "codim": int(codim)})
    return {"n": n, "dim": dim, "orbits": orbits}


def _payload_invariants(labels, seed):
    return {"reports": [report(make_orbit(parse_label(lbl)), seed=seed)
                        for lbl in labels]}


def _payload_obstruct(src, dst):
    return verdict(src, dst).to_json()


def _witness_record(w):
    ok, reason = check_witness(w.src, w, w.dst)
    return {"src": str(w.src), "dst": str(w.dst), "cite": w.cite,
            "n": w.n, "m": w.m, "ok": ok, "reason": reason}


def _payload_verify(src, dst, n, dim):
    if src is not None:
        pool = [w for w in witness_db(parse_label(src).n)
                if str(w.src) == src and str(w.dst) == dst]
        if not pool:
            pool = _witness_path(src, dst)
    else:
        pool = [w for w in witness_db(n)
                if w.n == n and (dim is None or w.m == dim)]
    checked = [_witness_record(w) for w in pool]
    return {"witnesses": checked,
            "all_ok": bool(checked) and all(r["ok"] for r in checked)}


def _witness_path(src, dst):
    """Witness chain src -> ... -> dst by breadth-first search, or []."""
    db = witness_db(parse_label(src).n)
    outgoing = {}
    for w in db:
        outgoing.setdefault(str(w.src), []).append(w)
    frontier = [src]
    parent = {src: None}
    while frontier:
        here = frontier.pop(0)
        if here == dst:
            chain = []
            while parent[here] is not None:
                chain.append(parent[here])
                here = str(parent[here].src)
            return chain[::-1]
        for w in outgoing.get(here, []):
            nxt = str(w.dst)
            if nxt not in parent:
                parent[nxt] = w
                frontier.append(nxt)
    return []


def _payload_search(src, dst, starts, seed):
    result = search_pair(src, dst, n_starts=starts, seed=seed)
    payload = result.to_json()
    status = classify(result)
    payload["status"] = {"tag": status.tag, "detail": status.detail}
    return payload


def _payload_grid(n, dim, starts, seed):
    labels = [str(lbl) for lbl in enumerate_orbits(n, dim)]
    grid = pair_grid(n, dim, n_starts=starts, seed=seed)
    entries = [{"src": a, "dst": b, "best_F": r.best_F}
               for (a, b), r in grid.items()]
    return {"n": n, "dim": dim, "starts": starts, "seed": seed,
            "labels": labels, "entries": entries}


def _payload_hasse(n, dim, mode, starts, seed):
    diagram = hasse(n, dim, mode=mode, n_starts=starts, seed=seed)
    payload = diagram.to_json()
    payload["status"] = {f"{a}|{b}": tag
                         for (a, b), tag in sorted(diagram.status.items())}
    return payload


# ---------------------------------------------------------------------------
# text renderers


def _text_catalog(payload):
    width = max((len(o["label"]) for o in payload["orbits"]), default=0)
    return [f"{o['label']:<{width}}  codim {o['codim']}"
            for o in payload["orbits"]]


def _text_invariants(payload):
    lines = []
    for rep in payload["reports"]:
        lines.append(f"{rep['label']}:")
        lines.append(f"  det: {rep['det']}")
        prof = rep["det_profile"]
        detail = {k: v for k, v in prof.items() if k != "kind"}
        lines.append(f"  det profile: {prof['kind']} {detail}")
        taus = " ".join(f"tau{t['k']}={t['value']}" for t in rep["tau"])
        lines.append(f"  {taus}")
        lines.append(f"  segre: {rep['segre']}")
        lines.append(f"  dim {rep['dim']}  codim {rep['codim']}")
    return lines


def _text_obstruct(payload):
    lines = [f"{payload['src']} -> {payload['dst']}: {payload['overall']}"]
    for name, result in payload["checks"].items():
        evidence = f" ({result['evidence']})" if result["evidence"] else ""
        lines.append(f"  {name}: {result['status']}{evidence}")
    if payload["registry"]:
        lines.append(f"  registry: {payload['registry']}")
    return lines


def _text_verify(payload):
    lines = []
    for rec in payload["witnesses"]:
        mark = "ok  " if rec["ok"] else "FAIL"
        reason = f" ({rec['reason']})" if rec["reason"] else ""
        lines.append(f"{mark} {rec['cite']:<8} {rec['src']} -> "
                     f"{rec['dst']}{reason}")
    total = len(payload["witnesses"])
    good = sum(1 for rec in payload["witnesses"] if rec["ok"])
    lines.append(f"{good}/{total} witnesses verified")
    return lines


def _text_search(payload):
    converged = sum(1 for rec in payload["per_start"] if rec["converged"])
    return [
        f"{payload['src']} -> {payload['dst']}",
        f"best_F {payload['best_F']:.6g}",
        f"status {payload['status']['tag']}"
        + (f" ({payload['status']['detail']})"
           if payload["status"]["detail"] else ""),
        f"starts {len(payload['per_start'])} ({converged} converged), "
        f"wall {payload['wall_time']:.2f}s",
    ]


def _text_grid(payload):
    labels = payload["labels"]
    table = {(e["src"], e["dst"]): e["best_F"] for e in payload["entries"]}
    width = max(len(lbl) for lbl in labels) + 2
    lines = [" " * width + "".join(f"{lbl:>{width}}" for lbl in labels)]
    for a in labels:
        row = [f"{a:<{width}}"]
        for b in labels:
            cell = "-" if a == b else (
                f"{table[(a, b)]:.3f}" if (a, b) in table else "")
            row.append(f"{cell:>{width}}")
        lines.append("".join(row))
    return lines


def _text_hasse(payload):
    by_codim = {}
    for label in payload["nodes"]:
        by_codim.setdefault(payload["codim"].get(label), []).append(label)
    lines = [f"codim {codim}: " + ", ".join(by_codim[codim])
             for codim in sorted(k for k in by_codim if k is not None)]
    lines += [f"{a} -> {b}" for a, b in payload["edges"]]
    lines += [f"{a} -?- {b} (unknown)" for a, b in payload["unknown"]]
    return lines


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> _Parser:
    parser = _Parser(prog="jol", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"jol {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="shortcut for --format json")
    common.add_argument("--format", choices=["text", "json", "dot"],
                        default=None, help="output format (default text)")
    common.add_argument("--cache", default=None, metavar="FILE",
                        help="read-through cache file (default $JOL_CACHE)")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("catalog", parents=[common],
                       help="list orbits with codimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=3, choices=[3, 4])

    p = sub.add_parser("invariants", parents=[common],
                       help="exact invariant report per orbit")
    p.add_argument("labels", nargs="*", metavar="LABEL")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int, default=3, choices=[3, 4])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("obstruct", parents=[common],
                       help="exact non-degeneration checks for one pair")
    p.add_argument("src", metavar="SRC")
    p.add_argument("dst", metavar="DST")

    p = sub.add_parser("verify", parents=[common],
                       help="verify degeneration witnesses exactly")
    p.add_argument("pair", nargs="*", metavar="SRC DST")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int, default=None, choices=[3, 4])

    p = sub.add_parser("search", parents=[common],
                       help="multistart orbit-distance search for one pair")
    p.add_argument("src", metavar="SRC")
    p.add_argument("dst", metavar="DST")
    p.add_argument("--starts", type=int, default=50)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("grid", parents=[common],
                       help="orbit-distance table for all ordered pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=3, choices=[3, 4])
    p.add_argument("--starts", type=int, default=50)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("hasse", parents=[common],
                       help="degeneration diagram (transitive reduction)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=3, choices=[3, 4])
    p.add_argument("--mode", choices=["proved", "numeric", "combined"],
                   default="proved")
    p.add_argument("--starts", type=int, default=50)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    return parser


_TEXT = {
    "catalog": _text_catalog,
    "invariants": _text_invariants,
    "obstruct": _text_obstruct,
    "verify": _text_verify,
    "search": _text_search,
    "grid": _text_grid,
    "hasse": _text_hasse,
}


def _dispatch(args, parser):
    command = args.command
    fmt = args.format or ("json" if args.json else "text")
    if fmt == "dot" and command != "hasse":
        parser.error("--format dot is only valid for the hasse command")
    cache_path = args.cache or os.environ.get("JOL_CACHE")

    if command == "catalog":
        arguments = {"n": args.n, "dim": args.dim}
        compute = lambda: _payload_catalog(args.n, args.dim)
        seed = None
    elif command == "invariants":
        labels = list(args.labels)
        if not labels:
            if args.n is None:
                parser.error("invariants needs LABEL arguments or --n")
            labels = [str(lbl) for lbl in enumerate_orbits(args.n, args.dim)]
        arguments = {"labels": labels}
        compute = lambda: _payload_invariants(labels, args.seed)
        seed = args.seed
    elif command == "obstruct":
        arguments = {"src": args.src, "dst": args.dst}
        compute = lambda: _payload_obstruct(args.src, args.dst)
        seed = None
    elif command == "verify":
        if args.pair and len(args.pair) != 2:
            parser.error("verify takes SRC DST or --n N")
        if not args.pair and args.n is None:
            parser.error("verify needs SRC DST or --n N")
        src, dst = (args.pair + [None, None])[:2]
        arguments = {"src": src, "dst": dst, "n": args.n, "dim": args.dim}
        compute = lambda: _payload_verify(src, dst, args.n, args.dim)
        seed = None
    elif command == "search":
        arguments = {"src": args.src, "dst": args.dst, "starts": args.starts}
        compute = lambda: _payload_search(args.src, args.dst, args.starts,
                                          args.seed)
        seed = args.seed
    elif command == "grid":
        arguments = {"n": args.n, "dim": args.dim, "starts": args.starts}
        compute = lambda: _payload_grid(args.n, args.dim, args.starts,
                                        args.seed)
        seed = args.seed
    else:
        arguments = {"n": args.n, "dim": args.dim, "mode": args.mode,
                     "starts": args.starts}
        compute = lambda: _payload_hasse(args.n, args.dim, args.mode,
                                         args.starts, args.seed)
        seed = args.seed

    payload = _cached(cache_path, command, arguments, seed, compute)

    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "dot":
        sys.stdout.write(_dot_from_payload(payload))
    else:
        for line in _TEXT[command](payload):
            print(line)

    if command == "verify" and not payload["all_ok"]:
        return 1
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args, parser)
    except SystemExit:
        raise
    except (ValueError, LookupError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        if isinstance(exc, LabelError):
            sys.stderr.write(_GRAMMAR + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
