import json

import numpy as np
import pytest

from conftest import random_antihermitian
from hypercomplex import cli, serialize

FAST = {
    "verify-algebra": ["--trials", "50"],
    "clifford": [],
    "spectrum": ["--n", "3"],
    "optical": ["--n", "3"],
    "grid": ["--trials", "20"],
    "fock": ["--trials", "50"],
    "lee-friedrichs": [],
}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _records_by_name(doc):
    return {r["name"]: r for r in doc["records"]}


@pytest.mark.parametrize("command", sorted(set(FAST) - {"lee-friedrichs"}))
def test_command_passes_and_reports(command, capsys):
    code, out, _ = run(capsys, command, *FAST[command])
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == 1 and doc["command"] == command and doc["pass"] is True
    assert doc["records"]
    for rec in doc["records"]:
        assert set(rec) == {"name", "check", "measured", "bound", "pass"}


def test_lee_friedrichs_report(capsys):
    # the full-modulus record fails on the default model (the beat cancels
    # between components); every other record passes, so the exit code is 1
    code, out, _ = run(capsys, "lee-friedrichs")
    doc = json.loads(out)
    failing = [r["name"] for r in doc["records"] if not r["pass"]]
    assert code == 1 and doc["pass"] is False
    assert failing == ["quaternionic coupling: oscillation score c of P(t) = |(psi_d, psi(t))|^2"]
    recs = _records_by_name(doc)
    assert recs["control (g_beta = 0) oscillation score c"]["pass"]
    assert set(doc["data"]["fits"]) == {"control", "complex_sector", "full_modulus"}


def test_global_flags_before_or_after_subcommand(capsys):
    _, before, _ = run(capsys, "--seed", "7", "--out", "csv", "fock", "--trials", "10")
    _, after, _ = run(capsys, "fock", "--trials", "10", "--seed", "7", "--out", "csv")
    assert before == after
    assert before.splitlines()[0] == "name,check,measured,bound,pass"


def test_seed_changes_random_content(capsys):
    _, a, _ = run(capsys, "spectrum", "--seed", "1", "--n", "3")
    _, b, _ = run(capsys, "spectrum", "--seed", "2", "--n", "3")
    assert a != b


def test_lee_friedrichs_csv_columns(capsys):
    _, out, _ = run(capsys, "lee-friedrichs", "--out", "csv")
    lines = out.splitlines()
    assert lines[0] == "t,P(t),P_c(t),P_control(t)"
    assert len(lines) == 502
    assert [float(v) for v in lines[1].split(",")][0] == 0.0


def test_timing_only_on_request(capsys):
    _, out, _ = run(capsys, "fock", "--trials", "5")
    assert "wall_time" not in json.loads(out)
    _, out, _ = run(capsys, "fock", "--trials", "5", "--timing")
    assert json.loads(out)["wall_time"] >= 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "clifford", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "clifford"
    table = json.loads(target.read_text())["data"]["cayley_table"]
    assert len(table["+"]) == len(table["-"]) == 21


def test_spectrum_fixture_and_export(tmp_path, capsys, rng):
    fx = tmp_path / "h.json"
    serialize.write_fixture(str(fx), "qmatrix", random_antihermitian(rng, 4))
    exp = tmp_path / "eig.json"
    code, out, _ = run(capsys, "spectrum", "--fixture", str(fx), "--export", str(exp))
    assert code == 0
    records = json.loads(exp.read_text())
    assert len(records) == 4 and np.array(records[0]["psi"]).shape == (4, 4)


def test_optical_fixture_small_instance(tmp_path, capsys):
    fx = tmp_path / "h.json"
    serialize.write_fixture(str(fx), "qmatrix", np.array([[[0.0, 3.0, 4.0, 0.0]]]))
    code, out, _ = run(capsys, "optical", "--fixture", str(fx))
    doc = json.loads(out)
    assert code == 0
    assert doc["data"]["reductions"][0]["E"] == pytest.approx(5.0)


def test_lf_fixture_overrides(tmp_path, capsys):
    fx = tmp_path / "lf.json"
    fx.write_text(json.dumps({"kind": "lf_config", "data": {"m": 100, "t_max": 10.0, "n_t": 201}}))
    _, out, _ = run(capsys, "lee-friedrichs", "--fixture", str(fx))
    doc = json.loads(out)
    assert doc["config"]["model"]["m"] == 100
    assert doc["config"]["time"]["n_t"] == 201


@pytest.mark.parametrize(
    "doc",
    [
        "{broken",
        json.dumps({"kind": "qvector", "data": [[1, 0, 0, 0]]}),
        json.dumps({"kind": "lf_config", "data": {"omega_zero": 1.0}}),
    ],
)
def test_bad_fixture_exits_nonzero(tmp_path, capsys, doc):
    fx = tmp_path / "bad.json"
    fx.write_text(doc)
    command = "lee-friedrichs" if "lf_config" in doc else "spectrum"
    code, out, err = run(capsys, command, "--fixture", str(fx))
    assert code == 2 and out == "" and "error" in err


def test_domain_error_exit_code(tmp_path, capsys):
    fx = tmp_path / "h.json"
    serialize.write_fixture(str(fx), "qmatrix", np.ones((2, 2, 4)))
    code, _, err = run(capsys, "spectrum", "--fixture", str(fx))
    assert code == 3 and "NotAntiHermitian" in err


def test_failing_bound_gives_exit_one(capsys):
    code, out, _ = run(capsys, "verify-algebra", "--trials", "50", "--tol", "1e-30")
    assert code == 1 and json.loads(out)["pass"] is False
