import csv
import io
import json
import subprocess
import sys

import pytest

from charvar.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_compute_moduli_text(capsys):
    code, out = run(capsys, "compute", "--genus", "1", "--space", "JMinus", "--level", "moduli")
    assert code == 0
    assert out.strip() == "q^2"


def test_compute_repspace(capsys):
    _, out = run(capsys, "compute", "--genus", "1", "--space", "MinusId", "--level", "repspace")
    assert out.strip() == "q^3 - q"


def test_compute_json_round_trips(capsys):
    _, out = run(capsys, "compute", "--genus", "4", "--space", "Id", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"genus", "space", "level", "coeffs"}
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert dump_json(data) + "\n" == out


def test_compute_reconstructed_level(capsys):
    code, out = run(capsys, "compute", "--genus", "1", "--space", "MinusId", "--level", "sl-reconstructed")
    assert code == 0
    assert out.strip() == "q^3 - q"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--genus", "0", "--space", "Id"],
        ["compute", "--genus", "x", "--space", "Id"],
        ["compute", "--genus", "1", "--space", "Nope"],
        ["verify", "--genus-max", "0"],
        ["table", "--format", "yaml"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--genus-max", "4")
    assert code == 0
    assert "FAIL" not in out


def test_verify_genus_one_includes_strata_checks(capsys):
    _, out = run(capsys, "verify", "--genus-max", "1", "--format", "json")
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert any(n.startswith("genus1: Z4 strata") for n in names)
    assert all(c["paper_anchor"] for c in json.loads(out)["checks"])


def test_verify_fault_injection(capsys):
    code, out = run(capsys, "verify", "--genus-max", "3", "--perturb-m", "3,5", "--format", "json")
    assert code == 1
    failed = [c for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert failed and all(c["paper_anchor"] for c in failed)


def test_table_csv_rows(capsys):
    _, out = run(capsys, "table", "--genus-max", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["genus", "space", "level", "polynomial"]
    assert len(rows) == 11


def test_table_latex_contains_parabolic(capsys):
    _, out = run(capsys, "table", "--genus-max", "1", "--format", "latex")
    assert "q^{2}+q+1" in out
    assert out.startswith("\\begin{align*}")


def test_table_json_parses(capsys):
    _, out = run(capsys, "table", "--genus-max", "3", "--format", "json")
    assert isinstance(json.loads(out), list)


def test_table_genus_alias_and_strata(capsys):
    _, out = run(capsys, "table", "--genus", "1", "--strata")
    assert "Z4barQuot" in out and "R(Zbar4/Z2) = q^3 T - N" in out
    _, out = run(capsys, "table", "--genus", "1", "--strata", "--format", "json")
    assert len(json.loads(out)) == 7


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    monkeypatch.setenv("CHARVAR_THREADS", "1")
    _, serial = run(capsys, "verify", "--genus-max", "3", "--format", "json")
    _, table_serial = run(capsys, "table", "--genus-max", "3")
    monkeypatch.setenv("CHARVAR_THREADS", "4")
    _, parallel = run(capsys, "verify", "--genus-max", "3", "--format", "json")
    _, table_parallel = run(capsys, "table", "--genus-max", "3")
    assert serial == parallel
    assert table_serial == table_parallel


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "charvar", "compute", "--genus", "1", "--space", "Parabolic"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q^2 + q + 1"
