"""Command-line behavior tests: formats, exit codes, cache round-trips.

Commands run in-process through main(argv); expected values re-derive from
the library APIs the commands wrap, plus frozen figure facts (the n = 4
net diagram has 8 nodes and 10 edges) already pinned by the diagram tests.
"""

from __future__ import annotations

import json

import pytest

from jol.cli import emit_dot, main
from jol.numopt import HasseDiagram


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------------------
# catalog / invariants


def test_catalog_lists_labels_with_codims(capsys):
    code, out, _ = run(capsys, "catalog", "--n", "5", "--dim", "3")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[0].startswith("A1[0,1,1]@5") and "codim" in lines[0]


def test_catalog_json_schema(capsys):
    code, out, _ = run(capsys, "catalog", "--n", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 3 and doc["dim"] == 3
    assert [o["label"] for o in doc["orbits"]] == [
        "A1[0,0,1]@3", "A2[1,0,1]@3", "A3[0,0,1]@3"]
    assert [o["codim"] for o in doc["orbits"]] == [3, 4, 5]


def test_invariants_single_label(capsys):
    code, out, _ = run(capsys, "invariants", "A2[1,0,1]@3")
    assert code == 0
    assert "det:" in out and "codim" in out and "segre" in out


def test_invariants_json_matches_report(capsys):
    from jol.catalog import make_orbit
    from jol.invariants import report

    code, out, _ = run(capsys, "invariants", "A3[0,0,1]@3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["reports"] == [json.loads(json.dumps(
        report(make_orbit("A3[0,0,1]@3"))))]


def test_invariants_requires_labels_or_n(capsys):
    with pytest.raises(SystemExit) as err:
        main(["invariants"])
    assert err.value.code == 2


# ---------------------------------------------------------------------------
# obstruct / verify


def test_obstruct_proved_impossible(capsys):
    code, out, _ = run(capsys, "obstruct", "A2[4,0,1]@6", "C[6,7]@6")
    assert code == 0
    assert "ProvedImpossible" in out and "registry" in out


def test_obstruct_json(capsys):
    code, out, _ = run(capsys, "obstruct", "A3[0,0,1]@3", "A1[0,0,1]@3",
                       "--json")
    doc = json.loads(out)
    assert code == 0 and doc["overall"] == "ProvedImpossible"
    assert set(doc["checks"]) == {"abstract", "determinant", "tau", "segre",
                                  "dimension"}


def test_verify_single_pair(capsys):
    code, out, _ = run(capsys, "verify", "B2[1,1,2]@5", "C[5,2]@5")
    assert code == 0 and "ok" in out and "1/1" in out


def test_verify_unwitnessed_pair_fails(capsys):
    code, out, _ = run(capsys, "verify", "C[5,2]@5", "B2[1,1,2]@5")
    assert code == 1 and "0/0" in out


def test_verify_all_for_n(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3")
    assert code == 0 and "6/6 witnesses verified" in out


# ---------------------------------------------------------------------------
# search / grid


def test_search_degeneration(capsys):
    code, out, _ = run(capsys, "search", "A1[0,0,1]@3", "A2[1,0,1]@3",
                       "--starts", "4", "--seed", "0")
    assert code == 0 and "NumericYes" in out


def test_search_json_rounds_to_12_digits(capsys):
    code, out, _ = run(capsys, "search", "A2[1,0,1]@3", "A1[0,0,1]@3",
                       "--starts", "3", "--seed", "0", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["best_F"] == float(f"{doc['best_F']:.12g}")
    assert doc["status"]["tag"] in {"NumericYes", "NumericNo", "Unknown"}
    assert len(doc["per_start"]) <= 3


def test_grid_text_table(capsys):
    code, out, _ = run(capsys, "grid", "--n", "3", "--starts", "3",
                       "--seed", "0")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[1].startswith("A1[0,0,1]@3") and "-" in lines[1]
    assert any("0.000" in line for line in lines[1:])


def test_grid_json_entries(capsys):
    code, out, _ = run(capsys, "grid", "--n", "3", "--starts", "2",
                       "--seed", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) == 6
    assert doc["labels"] == ["A1[0,0,1]@3", "A2[1,0,1]@3", "A3[0,0,1]@3"]


# ---------------------------------------------------------------------------
# hasse and DOT


def _check_dot(text):
    assert text.count("{") == text.count("}")
    declared = {line.split("[")[0].strip().strip('"')
                for line in text.splitlines()
                if line.strip().startswith('"') and "->" not in line}
    for line in text.splitlines():
        if "->" in line:
            a, rest = line.split("->")
            b = rest.split("[")[0]
            assert a.strip().strip('";') in declared
            assert b.strip().strip('";') in declared


def test_hasse_text(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "3", "--dim", "3")
    assert code == 0
    assert "A1[0,0,1]@3 -> A2[1,0,1]@3" in out
    assert "codim 3: A1[0,0,1]@3" in out


def test_hasse_dot_chain(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "3", "--format", "dot")
    assert code == 0
    assert out.count("->") == 2 and out.count("rank=same") == 3
    assert out.count("label=") == 3
    _check_dot(out)


def test_hasse_dot_n4_matches_figure(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "4", "--format", "dot")
    assert code == 0
    assert out.count("label=") == 8 and out.count("->") == 10
    _check_dot(out)


def test_emit_dot_empty_diagram():
    text = emit_dot(HasseDiagram(3, 3, "proved", [], {}, [], []))
    assert text.startswith("digraph") and text.count("{") == text.count("}")


def test_emit_dot_dashed_unknown():
    diagram = HasseDiagram(6, 3, "proved", ["a", "b"], {"a": 1, "b": 2},
                           [("a", "b")], [("b", "a")])
    text = emit_dot(diagram)
    assert '"b" -> "a" [style=dashed];' in text
    _check_dot(text)


def test_dot_rejected_outside_hasse(capsys):
    with pytest.raises(SystemExit) as err:
        main(["catalog", "--n", "3", "--format", "dot"])
    assert err.value.code == 2


# ---------------------------------------------------------------------------
# exit codes, grammar help, cache


def test_usage_error_exits_2_and_names_grammar(capsys):
    with pytest.raises(SystemExit) as err:
        main(["search", "A1[0,0,1]@3"])
    assert err.value.code == 2
    assert "FAMILY[params]@n" in capsys.readouterr().err


def test_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "obstruct", "A9[1]@5", "C[5,1]@5")
    assert code == 1 and "error" in err and "FAMILY[params]@n" in err


def test_ambient_mismatch_is_domain_error(capsys):
    code, _, err = run(capsys, "obstruct", "A1[0,0,1]@3", "C[5,1]@5")
    assert code == 1 and "error" in err


def test_cache_round_trip_byte_identical(tmp_path, capsys):
    cache = str(tmp_path / "cache.json")
    argv = ["search", "A1[0,0,1]@3", "A2[1,0,1]@3", "--starts", "3",
            "--seed", "4", "--json", "--cache", cache]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    store = json.load(open(cache))
    assert len(store) == 1
    record = next(iter(store.values()))
    assert set(record) == {"command", "arguments", "seed", "version",
                           "timestamp", "payload"}
    assert record["command"] == "search" and record["seed"] == 4


def test_cache_key_includes_seed(tmp_path, capsys):
    cache = str(tmp_path / "cache.json")
    base = ["search", "A1[0,0,1]@3", "A2[1,0,1]@3", "--starts", "2",
            "--json", "--cache", cache]
    run(capsys, *base, "--seed", "1")
    run(capsys, *base, "--seed", "2")
    assert len(json.load(open(cache))) == 2


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "env-cache.json"
    monkeypatch.setenv("JOL_CACHE", str(cache))
    code, _, _ = run(capsys, "catalog", "--n", "3")
    assert code == 0 and cache.exists()
    assert len(json.load(open(cache))) == 1


def test_json_flag_equals_format_json(capsys):
    _, out1, _ = run(capsys, "catalog", "--n", "3", "--json")
    _, out2, _ = run(capsys, "catalog", "--n", "3", "--format", "json")
    assert out1 == out2
