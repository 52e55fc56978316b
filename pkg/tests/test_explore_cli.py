import json

import pytest

from edgedepth import __version__
from edgedepth.cli import main
from edgedepth.explore import RunConfig, parse_powers, run_sweep, strip_runtime, summarize, write_jsonl

RECORD_HEAD = ["canonical_key", "n", "edge_count", "d", "p", "isolated", "bipartite", "t"]


def test_parse_powers():
    assert parse_powers("2") == (2,)
    assert parse_powers("1..3") == (1, 2, 3)
    assert parse_powers("1,3") == (1, 3)
    with pytest.raises(ValueError):
        parse_powers("3..1")


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(strategy="nope")
    with pytest.raises(ValueError):
        RunConfig(max_n=9)
    with pytest.raises(ValueError):
        RunConfig(powers=(0,))


def test_small_sweep_records():
    recs = run_sweep(RunConfig(max_n=5, powers=(1, 2)))
    assert len(recs) == 29 * 2
    assert list(recs[0])[:8] == RECORD_HEAD
    for k in ("oracle_depth", "sharp", "strategy", "field", "runtime_ms", "artifact_version", "combined"):
        assert k in recs[0]
    assert recs[0]["artifact_version"] == __version__
    assert [(r["canonical_key"], r["t"]) for r in recs] == sorted((r["canonical_key"], r["t"]) for r in recs)
    s = summarize(recs)
    assert not s.violations and s.skipped == 0


def test_block_chain_sharpness():
    recs = run_sweep(RunConfig(family="block-chain:1,block-chain:2", powers=(1, 2, 3)))
    by = {(r["n"], r["t"]): r for r in recs}
    assert by[(5, 2)]["sharp"] and by[(10, 3)]["sharp"]
    assert by[(10, 3)]["socle_witness"]


def test_matching_family():
    recs = run_sweep(RunConfig(family="matching:2,matching:3", powers=(1, 2, 3, 4)))
    for r in recs:
        assert r["oracle_depth"] >= r["p"] - r["t"]
        if r["t"] <= r["p"]:
            assert r["oracle_depth"] >= 1


def test_time_budget_gives_skipped_records():
    recs = run_sweep(RunConfig(family="cube-sharp", powers=(3,), budget_ms=1))
    assert recs[0]["status"] == "SKIPPED" and recs[0]["oracle_depth"] is None
    assert recs[0]["skip_reason"]


def test_rerun_identical_modulo_runtime(tmp_path):
    cfg = RunConfig(max_n=4, powers=(1, 2))
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        with open(path, "w") as fh:
            write_jsonl(run_sweep(cfg), fh)
    strip = lambda p: [strip_runtime(x) for x in p.read_text().splitlines()]
    assert strip(a) == strip(b)


def test_cli_bound(capsys):
    assert main(["bound", "--example", "square-sharp", "--t", "2", "--oracle"]) == 0
    out = capsys.readouterr().out
    rec = json.loads(out.strip().splitlines()[-1])
    assert rec["combined"] == 0 and rec["oracle_depth"] == 0 and rec["sharp"]
    assert main(["bound", "--example", "cube-sharp", "--t", "3"]) == 0
    assert json.loads(capsys.readouterr().out.strip().splitlines()[-1])["combined"] == 0


def test_cli_bound_from_file(tmp_path, capsys):
    f = tmp_path / "p8.txt"
    f.write_text("".join(f"v{i} v{i + 1}\n" for i in range(7)))
    assert main(["bound", "--graph", str(f), "--t", "1"]) == 0
    assert json.loads(capsys.readouterr().out.strip().splitlines()[-1])["combined"] == 3


def test_cli_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("a b\nb c d\n")
    assert main(["bound", "--graph", str(f)]) != 0
    assert "line 2, column 1" in capsys.readouterr().err


def test_cli_loops_need_flag(tmp_path, capsys):
    f = tmp_path / "loop.txt"
    f.write_text("a b\nb b\n")
    assert main(["colon", "--graph", str(f), "x"]) != 0
    assert main(["colon", "--graph", str(f), "--allow-loops", "--t", "1", "a"]) == 0
    assert capsys.readouterr().out.strip() == "(b)"


def test_cli_depth_and_colon(capsys):
    assert main(["depth", "--example", "square-sharp", "--t", "2", "--socle"]) == 0
    out = capsys.readouterr().out
    assert "depth 0" in out and "socle witness x" in out
    assert main(["colon", "--example", "complete:3", "--t", "2", "x1*x2"]) == 0
    assert capsys.readouterr().out.strip() == "(x1*x2, x1*x3, x2*x3, x3^2)"


def test_cli_betti(capsys):
    assert main(["betti", "--example", "path:3", "--strategy", "box", "--field", "q"]) == 0
    out = capsys.readouterr().out
    assert "beta[2, x1*x2*x3] = 1" in out


def test_cli_budget_error(capsys):
    assert main(["depth", "--example", "cube-sharp", "--t", "3", "--lattice-cap", "100"]) == 3
    assert "lattice_cap" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "leaf", "--max-n", "5", "--t", "2"],
    ["verify", "edge", "--max-n", "5"],
    ["verify", "exhaust", "--example", "square-sharp", "--t", "2"],
    ["verify", "hamorey", "--samples", "50"],
    ["verify", "order", "--max-n", "5"],
])
def test_cli_verify(argv, capsys):
    assert main(argv) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_explore_and_example(tmp_path, capsys):
    out = tmp_path / "s.jsonl"
    assert main(["explore", "--max-n", "4", "--powers", "1..2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == (2 + 6) * 2
    assert main(["example", "square-sharp"]) == 0
    assert capsys.readouterr().out.startswith("x1 x2\n")
