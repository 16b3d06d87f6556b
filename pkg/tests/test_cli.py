import json

import pytest

from swarmpp.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_all(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("F")]
    assert len(rows) == 28


def test_list_dim2(capsys):
    code, out, _ = run_cli(capsys, "list", "--dim", "2")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("F")]
    assert len(rows) == 13


def test_list_bad_dim(capsys):
    code, _, err = run_cli(capsys, "list", "--dim", "3")
    assert code == 2
    assert "error" in err


def write_plan(tmp_path, **overrides):
    plan = {
        "name": "mini",
        "algorithms": ["PSO", "mPSO"],
        "pairs": [["PSO", "mPSO"]],
        "dimensions": [5],
        "functions": ["F27"],
        "runs": 1,
        "max_iter": 10,
        "checkpoints": [10],
        "master_seed": 3,
    }
    plan.update(overrides)
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(plan))
    return path


def test_run_minimal_plan(tmp_path, capsys):
    plan = write_plan(tmp_path)
    out = tmp_path / "store"
    code, _, _ = run_cli(capsys, "run", str(plan), "--out", str(out))
    assert code == 0
    assert (out / "metrics.csv").exists()


def test_run_invalid_plan(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"algorithms": ["NOPE"]}))
    code, _, err = run_cli(capsys, "run", str(path), "--out", str(tmp_path / "s"))
    assert code == 2 and "error" in err


def test_seed_override_changes_runs_not_schema(tmp_path, capsys):
    plan = write_plan(tmp_path)
    run_cli(capsys, "run", str(plan), "--out", str(tmp_path / "a"))
    run_cli(capsys, "run", str(plan), "--out", str(tmp_path / "b"), "--seed", "44")
    ra = (tmp_path / "a" / "runs.jsonl").read_text()
    rb = (tmp_path / "b" / "runs.jsonl").read_text()
    assert ra != rb
    assert set(json.loads(ra.splitlines()[0])) == set(json.loads(rb.splitlines()[0]))


def test_rerun_resumes_identically(tmp_path, capsys):
    plan = write_plan(tmp_path)
    out = tmp_path / "store"
    run_cli(capsys, "run", str(plan), "--out", str(out))
    before = (out / "metrics.csv").read_bytes()
    code, _, _ = run_cli(capsys, "run", str(plan), "--out", str(out))
    assert code == 0
    assert (out / "metrics.csv").read_bytes() == before


def test_report_winning_and_companion_csv(tmp_path, capsys):
    plan = write_plan(tmp_path, checkpoints=[5, 10])
    out = tmp_path / "store"
    run_cli(capsys, "run", str(plan), "--out", str(out))
    code, _, _ = run_cli(
        capsys, "report", str(out), "--plot", "winning", "--pair", "PSO:mPSO"
    )
    assert code == 0
    svg = (out / "winning_PSO_mPSO.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg
    companion = (out / "winning_PSO_mPSO.csv").read_text().splitlines()
    assert companion[0] == "pair,dimension,checkpoint,metric,value"
    assert len(companion) == 3  # header + one line per checkpoint

    # plotted values are verbatim copies of metrics.csv values
    metric_lines = (out / "metrics.csv").read_text().splitlines()
    agg = {
        line.split(",")[4]: line.split(",")[6]
        for line in metric_lines[1:]
        if line.split(",")[2] == "ALL" and line.split(",")[5] == "winning_proportion"
    }
    for line in companion[1:]:
        parts = line.split(",")
        assert parts[4] == agg[parts[2]]


def test_report_regeneration_identical(tmp_path, capsys):
    plan = write_plan(tmp_path, checkpoints=[5, 10])
    out = tmp_path / "store"
    run_cli(capsys, "run", str(plan), "--out", str(out))
    run_cli(capsys, "report", str(out), "--plot", "relerr", "--pair", "PSO:mPSO")
    svg = out / "relerr_PSO_mPSO.svg"
    first = svg.read_bytes()
    svg.unlink()
    run_cli(capsys, "report", str(out), "--plot", "relerr", "--pair", "PSO:mPSO")
    assert svg.read_bytes() == first


def test_report_empty_store(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "report", str(tmp_path), "--plot", "winning", "--pair", "PSO:mPSO"
    )
    assert code == 2 and "error" in err


def test_report_values_in_range(tmp_path, capsys):
    plan = write_plan(tmp_path, checkpoints=[5, 10])
    out = tmp_path / "store"
    run_cli(capsys, "run", str(plan), "--out", str(out))
    run_cli(capsys, "report", str(out), "--plot", "winning", "--pair", "PSO:mPSO")
    for line in (out / "winning_PSO_mPSO.csv").read_text().splitlines()[1:]:
        v = float(line.split(",")[4])
        assert 0.0 <= v <= 1.0


def test_sweep(tmp_path, capsys):
    plan = write_plan(tmp_path)
    out = tmp_path / "sweep"
    code, _, _ = run_cli(
        capsys, "sweep", str(plan), "--out", str(out), "--sigma", "0.005,0.01"
    )
    assert code == 0
    assert (out / "sigma0.005" / "metrics.csv").exists()
    assert (out / "sigma0.01" / "metrics.csv").exists()


def test_sweep_tdf(tmp_path, capsys):
    plan = write_plan(tmp_path)
    out = tmp_path / "sweept"
    code, _, _ = run_cli(capsys, "sweep", str(plan), "--out", str(out), "--tdf", "5")
    assert code == 0
    manifest = json.loads((out / "tdf5" / "manifest.json").read_text())
    assert manifest["plan"]["noise"] == {"kind": "scaled_t", "df": 5}


def test_sweep_requires_values(tmp_path, capsys):
    plan = write_plan(tmp_path)
    code, _, err = run_cli(capsys, "sweep", str(plan), "--out", str(tmp_path / "x"))
    assert code == 2
