"""Command line surface: exit codes, determinism, fault detection."""

import json
import subprocess
import sys

import pytest

from hopfcheck.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr() if capsys else ("", "")
    return code, out, err


@pytest.fixture()
def sweedler_file(tmp_path, capsys):
    p = tmp_path / "sweedler.hopf"
    assert main(["zoo", "sweedler", "-o", str(p)]) == 0
    capsys.readouterr()
    return p


def test_zoo_writes_to_stdout(capsys):
    code, out, _ = run_cli("zoo", "C[Z2]", capsys=capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["name"] == "C[Z2]"
    assert doc["dim"] == 2


def test_zoo_unknown_name(capsys):
    code, _, err = run_cli("zoo", "octonions", capsys=capsys)
    assert code == 2
    assert "unknown" in err


def test_zoo_taft_requires_n(capsys):
    code, _, err = run_cli("zoo", "taft", capsys=capsys)
    assert code == 2
    code2, out, _ = run_cli("zoo", "taft", "--n", "3", capsys=capsys)
    assert code2 == 0
    assert json.loads(out)["dim"] == 9


def test_zoo_taft_explicit_q_matches_default(capsys):
    _, out1, _ = run_cli("zoo", "taft", "--n", "3", capsys=capsys)
    _, out2, _ = run_cli("zoo", "taft", "--n", "3", "--q", "z", capsys=capsys)
    assert out1 == out2


def test_zoo_group_from_cayley(tmp_path, capsys):
    p = tmp_path / "z3.cayley"
    p.write_text("0 1 2\n1 2 0\n2 0 1\n")
    code, out, _ = run_cli("zoo", "group", "--cayley", str(p), capsys=capsys)
    assert code == 0
    assert json.loads(out)["name"] == "C[z3]"
    code, out, _ = run_cli("zoo", "function", "--cayley", str(p),
                           "--label", "F3", capsys=capsys)
    assert code == 0
    assert json.loads(out)["name"] == "F3"


def test_zoo_rejects_bad_cayley(tmp_path, capsys):
    p = tmp_path / "bad.cayley"
    p.write_text("0 1\n1 1\n")  # not a Latin square
    code, _, err = run_cli("zoo", "group", "--cayley", str(p), capsys=capsys)
    assert code == 2
    assert err


def test_verify_clean_file(sweedler_file, capsys):
    code, out, _ = run_cli("verify", str(sweedler_file), capsys=capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("VERIFY sweedler dim=4")
    assert all(l.startswith("CHECK ") for l in lines[1:])
    assert not any(" FAIL " in l for l in lines)
    # every advertised stage reports
    for name in ("algebra", "radford-s4", "tomita-commutant", "biduality"):
        assert any(l.split()[1] == name for l in lines[1:]), name


def test_verify_only_flag(sweedler_file, capsys):
    code, out, _ = run_cli("verify", str(sweedler_file),
                           "--only", "radford-s4", capsys=capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[1].split()[1] == "radford-s4"


def test_verify_missing_file(tmp_path, capsys):
    code, _, err = run_cli("verify", str(tmp_path / "none.hopf"), capsys=capsys)
    assert code == 2
    assert err


def test_verify_malformed_file(tmp_path, capsys):
    p = tmp_path / "junk.hopf"
    p.write_text("{]")
    code, _, err = run_cli("verify", str(p), capsys=capsys)
    assert code == 2


def _corrupt(sweedler_file, tmp_path, mutate):
    doc = json.loads(sweedler_file.read_text())
    mutate(doc)
    p = tmp_path / "corrupt.hopf"
    p.write_text(json.dumps(doc))
    return p


def test_corrupt_product_is_caught(sweedler_file, tmp_path, capsys):
    def mutate(doc):
        doc["mult"][1][2][0] = "1"  # g x picks up a spurious unit term
    p = _corrupt(sweedler_file, tmp_path, mutate)
    code, out, _ = run_cli("verify", str(p), capsys=capsys)
    assert code == 1
    fail_lines = [l for l in out.splitlines() if " FAIL " in l]
    assert any(l.split()[1] == "algebra" for l in fail_lines)


def test_corrupt_counit_is_caught(sweedler_file, tmp_path, capsys):
    def mutate(doc):
        doc["counit"][2] = "1"
    p = _corrupt(sweedler_file, tmp_path, mutate)
    code, out, _ = run_cli("verify", str(p), capsys=capsys)
    assert code == 1
    fail_lines = [l for l in out.splitlines() if " FAIL " in l]
    assert any(l.split()[1] in ("coalgebra", "bialgebra") for l in fail_lines)


def test_corrupt_antipode_sign_is_caught(sweedler_file, tmp_path, capsys):
    def mutate(doc):
        doc["antipode"][3][2] = "1"  # sign flip on the nilpotent column
    p = _corrupt(sweedler_file, tmp_path, mutate)
    code, out, _ = run_cli("verify", str(p), capsys=capsys)
    assert code == 1
    fail_lines = [l for l in out.splitlines() if " FAIL " in l]
    assert any(l.split()[1] == "antipode" for l in fail_lines)


def test_verify_deterministic_across_processes(sweedler_file):
    cmd = [sys.executable, "-m", "hopfcheck.cli", "verify", str(sweedler_file)]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout  # not trivially empty


def test_report_contents(sweedler_file, capsys):
    code, out, _ = run_cli("report", str(sweedler_file), capsys=capsys)
    assert code == 0
    assert "REPORT sweedler" in out
    assert "nu = -1" in out
    assert "ord(S) = 4" in out
    assert "ord(S^2) = 2" in out
    assert "unimodular = no" in out
    assert "counimodular = no" in out
    assert "kac = no" in out
    assert "note:" in out


def test_report_kac_member(tmp_path, capsys):
    p = tmp_path / "cz2.hopf"
    assert main(["zoo", "C[Z2]", "-o", str(p)]) == 0
    capsys.readouterr()
    code, out, _ = run_cli("report", str(p), capsys=capsys)
    assert code == 0
    assert "kac = finite-quantum-group" in out
    assert "nu = 1" in out


def test_dual_round_trip_bytes(sweedler_file, tmp_path, capsys):
    d1 = tmp_path / "dual.hopf"
    d2 = tmp_path / "double.hopf"
    assert main(["dual", str(sweedler_file), "-o", str(d1)]) == 0
    assert main(["dual", str(d1), "-o", str(d2)]) == 0
    capsys.readouterr()
    assert json.loads(d1.read_text())["name"] == "sweedler^"
    assert d2.read_bytes() == sweedler_file.read_bytes()


def test_console_script_is_installed():
    proc = subprocess.run(["hopfcheck", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout
