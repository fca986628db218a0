import io
import json
import subprocess
import sys

import pytest

from hamspec.cli import run_cli


def _run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_certify_k3(capsys):
    code, out, err = _run(capsys, "certify", "--graph", "Bw", "--alpha", "1", "--beta", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("Bw T1.1 k=2 holds=False outcome=PreconditionFailed")
    assert "n - k - 1 = 0" in lines[0]
    assert lines[-1].startswith("Bw best ")


def test_certify_malformed(capsys):
    code, out, err = _run(capsys, "certify", "--graph", "???", "--alpha", "1", "--beta", "1")
    assert code == 2
    assert out == ""
    assert "malformed" in err


def test_certify_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("C~\nIheA@GUAo\n"))
    code, out, _ = _run(capsys, "certify", "--graph", "-", "--theorem", "1", "--k", "2")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == ["C~"] * 3 + ["IheA@GUAo"] * 3
    assert "CertifiedHamiltonian" in out.splitlines()[2]


def test_spectrum_output(capsys):
    code, out, _ = _run(capsys, "spectrum", "--graph", "Bg", "--alpha", "2", "--beta", "1")
    assert code == 0
    record = json.loads(out)
    assert record["eigenvalues"] == pytest.approx([4.732050807568877, 2.0, 1.2679491924311228])
    assert record["rayleigh"]["mean"] == "18"


def test_invariants_output(capsys):
    code, out, _ = _run(capsys, "invariants", "--graph", "IheA@GUAo")
    record = json.loads(out)
    assert code == 0
    assert (record["gamma"], record["kappa"], record["hamiltonian"], record["traceable"]) == (4, 3, False, True)


def test_sweep_labeled4(capsys, tmp_path):
    out_path = tmp_path / "r.jsonl"
    code, _, err = _run(capsys, "sweep", "--source", "labeled:4", "--alphas", "1", "--betas", "1",
                        "--checks", "theorem1", "--out", str(out_path))
    assert code == 0
    summary = json.loads(out_path.read_text().splitlines()[-1])
    assert summary["counterexample_count"] == 0
    assert summary["graphs_examined"] == 64
    assert "counterexamples=0" in err


def test_sweep_grid_broadcast(capsys):
    code, out, _ = _run(capsys, "sweep", "--source", "labeled:3", "--alphas", "1", "2", "5/2",
                        "--betas", "1", "--checks", "psd")
    assert code == 0
    assert json.loads(out)["config"]["grid"] == ["1,1", "2,1", "5/2,1"]


def test_sweep_exit_one_on_counterexample(capsys, tmp_path, monkeypatch):
    import importlib

    monkeypatch.setattr(importlib.import_module("hamspec.sweep"), "is_hamiltonian", lambda g: False)
    code, _, _ = _run(capsys, "sweep", "--source", "labeled:4", "--checks", "theorem1",
                      "--out", str(tmp_path / "r.jsonl"))
    assert code == 1


@pytest.mark.parametrize("argv", [
    [],
    ["certify"],
    ["sweep", "--source", "labeled:9"],
    ["sweep", "--source", "labeled:3", "--checks", "nope"],
    ["sweep", "--source", "labeled:3", "--alphas", "1", "2", "--betas", "1", "2", "3"],
    ["sweep", "--source", "labeled:3", "--alphas", "1", "--betas", "2"],
    ["sweep", "--source", "file:/nonexistent/x.g6"],
    ["spectrum", "--graph", "Bw", "--alpha", "pi"],
    ["certify", "--graph", "Bw", "--k", "two"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hamspec", "certify", "--graph", "???"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "malformed" in proc.stderr
