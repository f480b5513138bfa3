import json
import os
import subprocess
import tempfile
from pathlib import Path

import pytest

import ipctp


@pytest.fixture
def small():
    return ipctp.generate(shipments=5, bays=4, inbound_ratio=0.5, seed=3)


def test_instance_round_trip(small, tmp_path):
    assert small.shipment_count == 5
    assert small.qc_count == 2
    assert len(small.available_locations) == 2 * len(small.inbound)
    again = ipctp.Instance.from_json(small.to_json())
    assert again.to_json() == small.to_json()
    path = tmp_path / "inst.json"
    small.save(str(path))
    assert ipctp.Instance.load(str(path)).to_json() == small.to_json()


def test_solve_validate_oracle(small):
    report, solution = ipctp.solve(small, time_limit=30)
    assert report["status"] == "optimal"
    assert report["gap_percent"] == 0
    assert solution["objective"] == report["best_objective"]
    assert ipctp.validate(small, solution) == []
    assert ipctp.oracle(small)["objective"] == report["best_objective"]
    assert "QC1" in ipctp.gantt(small, solution, 60)


def test_validate_reports_violations(small):
    _, solution = ipctp.solve(small, time_limit=30)
    first = min(solution["starts"], key=lambda k: solution["starts"][k]["qc"])
    solution["starts"][first]["qc"] -= 1
    violations = ipctp.validate(small, solution)
    assert violations
    assert {"family", "kind", "message"} <= set(violations[0])


def test_errors_are_typed():
    with pytest.raises(ipctp.ConfigInvalid):
        ipctp.generate(bays=5)
    with pytest.raises(ipctp.Error):
        ipctp.Instance.from_json("{}")
    with pytest.raises(ipctp.BudgetExceeded):
        ipctp.oracle(ipctp.generate(shipments=10, bays=4, inbound_ratio=0.5, seed=1), limit=10)


def test_lp_round_trip_with_highs():
    highspy = pytest.importorskip("highspy")
    inst = ipctp.generate(shipments=4, bays=4, inbound_ratio=0.5, seed=8)
    lp, mapping = ipctp.export_lp(inst)
    assert "Subject To" in lp
    assert mapping["big_m"] > 0
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    with tempfile.NamedTemporaryFile("w", suffix=".lp", delete=False) as f:
        f.write(lp)
    h.readModel(f.name)
    os.unlink(f.name)
    h.run()
    assert h.getModelStatus() == highspy.HighsModelStatus.kOptimal
    names = h.getLp().col_names_
    values = dict(zip(names, h.getSolution().col_value))
    rebuilt = ipctp.import_mip(inst, values)
    assert ipctp.validate(inst, rebuilt) == []
    best = ipctp.oracle(inst)["objective"]
    assert rebuilt["objective"] == best
    assert round(h.getInfo().objective_function_value) == best


CLI = os.environ.get("IPCTP_CLI", "")


@pytest.mark.skipif(not CLI or not Path(CLI).exists(), reason="command line tool not built")
def test_cli(tmp_path):
    def run(*args):
        return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)

    r = run("generate", "--seed", 7, "--shipments", 5, "--bays", 4, "--out-dir", tmp_path)
    assert r.returncode == 0, r.stderr
    inst = next(p for p in tmp_path.iterdir() if p.name != "manifest.json")
    assert json.loads((tmp_path / "manifest.json").read_text())

    r = run("solve", inst, "--time-limit", 30, "--seed", 7, "--out-dir", tmp_path)
    assert r.returncode == 0, r.stderr
    sol = tmp_path / (inst.stem + ".solution.json")
    report = json.loads((tmp_path / (inst.stem + ".report.json")).read_text())
    assert report["status"] == "optimal"

    r = run("validate", inst, sol)
    assert r.returncode == 0
    assert json.loads(r.stdout) == []

    r = run("export-mip", inst, "--out-dir", tmp_path)
    assert r.returncode == 0, r.stderr
    assert (tmp_path / (inst.stem + ".lp")).exists()

    r = run("validate", tmp_path / "missing.json", sol)
    assert r.returncode != 0
    assert "error" in json.loads(r.stderr)
