"""Command-line interface behavior and exit codes."""

import json

import pytest

from graphtempo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ingest_demo(capsys):
    code, out, _ = run(capsys, "ingest", "--demo")
    assert code == 0
    assert "nodes: 5" in out and "edges: 7" in out


def test_ingest_export_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "ingest", "--demo", "--out", str(tmp_path))
    assert code == 0
    code2, out2, _ = run(
        capsys,
        "ingest",
        "--edges", str(tmp_path / "edges.csv"),
        "--static", str(tmp_path / "static.csv"),
        "--presence", str(tmp_path / "presence.csv"),
        "--varying", f"publications={tmp_path / 'varying_publications.csv'}",
    )
    assert code2 == 0
    assert "nodes: 5" in out2


def test_op_union_json(capsys):
    code, out, _ = run(capsys, "op", "union", "--demo", "--t1", "t0", "--t2", "t1")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["nodes"]) == 5


def test_op_difference_dot(capsys):
    code, out, _ = run(
        capsys, "op", "difference", "--demo", "--t1", "t0", "--t2", "t1",
        "--format", "dot",
    )
    assert code == 0
    assert out.startswith("graph")
    assert '"u3"' in out


def test_aggregate_csv(capsys):
    code, out, _ = run(
        capsys, "aggregate", "--demo", "--interval", "t0..t2",
        "--attrs", "gender", "--mode", "dist", "--format", "csv",
    )
    assert code == 0
    assert "node,f,4" in out
    assert "node,m,1" in out


def test_aggregate_fast_flag(capsys):
    code, out, _ = run(
        capsys, "aggregate", "--demo", "--interval", "t0..t2",
        "--attrs", "gender", "--fast",
    )
    assert code == 0
    assert json.loads(out)["mode"] == "dist"


def test_tri_union(capsys):
    code, out, _ = run(
        capsys, "tri", "--demo", "--interval", "t0..t1", "--attrs", "gender",
        "--op", "union", "--t1", "t0", "--t2", "t1",
    )
    assert code == 0
    doc = json.loads(out)
    weights = {tuple(map(tuple, e["key"])): e["weight"] for e in doc["nodes"]}
    assert weights[(("f",), ("f",), ("m",))] == 2


def test_evolve_json(capsys):
    code, out, _ = run(
        capsys, "evolve", "--demo", "--t-old", "t0", "--t-new", "t1",
        "--attrs", "gender,publications",
    )
    assert code == 0
    doc = json.loads(out)
    by_key = {tuple(e["key"]): e for e in doc["nodes"]}
    entry = by_key[("f", "1")]
    assert (entry["stability"], entry["growth"], entry["shrinkage"]) == (1, 0, 1)
    assert entry["percent"]["stability"] == 50.0


def test_evolve_dot(capsys):
    code, out, _ = run(
        capsys, "evolve", "--demo", "--t-old", "t0", "--t-new", "t1",
        "--format", "dot",
    )
    assert code == 0
    assert "[R]" in out and "[G]" in out


def test_explore(capsys, tmp_path):
    heat = tmp_path / "heat.csv"
    code, out, _ = run(
        capsys, "explore", "--demo", "--event", "growth",
        "--extremal", "minimal", "--reference", "old-fixed",
        "--attrs", "gender", "--target-node", "f", "-k", "1",
        "--heatmap", str(heat),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pairs"] == [{"extension": [1, 1], "reference": 0, "weight": 3}]
    assert heat.read_text().startswith("reference,")


def test_explore_pattern_target(capsys):
    code, out, _ = run(
        capsys, "explore", "--demo", "--event", "stability",
        "--attrs", "gender", "--target-pattern", "ffm", "-k", "1",
    )
    assert code == 0
    assert json.loads(out)["pairs"]


def test_init_k(capsys):
    code, out, _ = run(
        capsys, "init-k", "--demo", "--event", "stability",
        "--attrs", "gender", "--target-edge", "f,f",
    )
    assert code == 0
    assert "w_min=1 w_max=2 start=2" in out


def test_cache_build_and_rollup(capsys, tmp_path):
    code, _, _ = run(
        capsys, "cache", "build", "--demo", "--attrs", "gender",
        "--dir", str(tmp_path),
    )
    assert code == 0
    assert (tmp_path / "gender" / "0.json").exists()
    code2, out, _ = run(
        capsys, "cache", "rollup", "--demo", "--attrs", "gender",
        "--interval", "t0..t2", "--dir", str(tmp_path),
    )
    assert code2 == 0
    doc = json.loads(out)
    weights = {tuple(e["key"]): e["weight"] for e in doc["nodes"]}
    assert weights[("f",)] == 9 and weights[("m",)] == 2


def test_cache_rollup_drop_to(capsys):
    code, out, _ = run(
        capsys, "cache", "rollup", "--demo", "--attrs", "gender,publications",
        "--interval", "t0..t1", "--drop-to", "gender",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["attrs"] == ["gender"]


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "aggregate", "--interval", "t0", "--attrs", "gender")
    assert code == 2 and "usage error" in err
    code, _, err = run(
        capsys, "explore", "--demo", "--event", "growth", "--attrs", "gender",
        "-k", "1",
    )
    assert code == 2  # no target given


def test_data_errors_exit_1(capsys, tmp_path):
    bad = tmp_path / "edges.csv"
    bad.write_text("wrong,header,here\n")
    code, _, err = run(capsys, "ingest", "--edges", str(bad))
    assert code == 1 and "error" in err
    code, _, err = run(
        capsys, "aggregate", "--demo", "--interval", "t9", "--attrs", "gender"
    )
    assert code == 1


def test_bench_kernels(capsys):
    code, out, _ = run(capsys, "bench", "kernels", "--nodes", "40")
    assert code == 0
    assert "python" in out


def test_op_project(capsys):
    code, out, _ = run(capsys, "op", "project", "--demo", "--t1", "t0..t1")
    assert code == 0
    doc = json.loads(out)
    assert {n["id"] for n in doc["nodes"]} == {"u1", "u2", "u4"}


def test_explore_aliases(capsys):
    code, out, _ = run(
        capsys, "explore", "--demo", "--event", "stability",
        "--extremal", "max", "--reference", "new",
        "--attrs", "gender", "--target-edge", "f,f", "-k", "1",
    )
    assert code == 0
    doc = json.loads(out)
    assert {(p["reference"], tuple(p["extension"])) for p in doc["pairs"]} == {
        (1, (0, 0)), (2, (0, 1))
    }


def test_bench_rollup_csv(capsys):
    code, out, _ = run(capsys, "bench", "rollup", "--edges", "400", "--points", "4")
    assert code == 0
    assert out.splitlines()[0] == "method,ms"


def test_bench_pattern(capsys):
    code, out, _ = run(capsys, "bench", "pattern", "--nodes", "40")
    assert code == 0
    assert "op-first" in out


def test_every_subcommand_is_wired():
    from graphtempo.cli import _build_parser

    parser = _build_parser()
    sub = next(
        a for a in parser._actions if a.__class__.__name__ == "_SubParsersAction"
    )
    assert set(sub.choices) == {
        "ingest", "op", "aggregate", "tri", "evolve", "explore",
        "init-k", "cache", "bench",
    }


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["aggregate", "--nope"])
    assert exc.value.code == 2
