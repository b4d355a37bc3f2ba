import csv
import io
import json
import subprocess
import sys

import pytest

from spreadcodes.cli import main


def run_cli(capsys, *argv):
    """Invoke main() trapping argparse's SystemExit; return (code, stdout)."""
    try:
        code = main(list(argv))
    except SystemExit as e:
        code = e.code
    return code, capsys.readouterr().out


def test_construct_writes_generator_and_metadata(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run_cli(
        capsys, "construct", "--n", "4", "--family", "char", "--s", "2"
    )
    assert code == 0
    assert out.strip() == "[80,5]"
    lines = (tmp_path / "code_n4_char_s2.gmatrix").read_text().splitlines()
    assert len(lines) == 5
    assert all(len(row) == 80 and set(row) <= set("012") for row in lines)
    meta = json.loads((tmp_path / "code_n4_char_s2.gmatrix.json").read_text())
    assert meta["schema"] == 1
    assert (meta["length"], meta["dimension"], meta["rank"]) == (80, 5, 5)
    assert meta["indices"] == [0, 1]


def test_construct_out_flag(tmp_path, capsys):
    target = tmp_path / "g.txt"
    code, out = run_cli(
        capsys,
        "construct", "--n", "2", "--family", "ternary", "--s", "1",
        "--out", str(target),
    )
    assert code == 0 and out.strip() == "[8,3]"
    assert target.exists() and (tmp_path / "g.txt.json").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ("construct", "--n", "3", "--family", "char", "--s", "1"),
        ("construct", "--n", "10", "--family", "char", "--s", "1"),
        ("weights", "--n", "4", "--family", "char", "--s", "11"),
        ("weights", "--n", "4", "--family", "ternary", "--s", "6"),
        ("walsh", "--n", "4", "--family", "char", "--s", "2", "--indices", "0"),
        ("verify", "--n", "8", "--family", "char", "--s", "2", "--method", "brute"),
        ("construct", "--n", "2", "--family", "char", "--s", "2",
         "--indices", "1", "1"),
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, _ = run_cli(capsys, *argv)
    assert code == 2


def test_weights_csv(capsys):
    code, out = run_cli(capsys, "weights", "--n", "4", "--family", "char", "--s", "2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["weight", "multiplicity"]
    assert {int(w): int(m) for w, m in rows[1:]} == {
        0: 1, 16: 2, 52: 128, 54: 80, 61: 32
    }


def test_weights_json(tmp_path, capsys):
    target = tmp_path / "w.json"
    code, _ = run_cli(
        capsys,
        "weights", "--n", "4", "--family", "ternary", "--s", "2",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["schema"] == 1
    assert payload["distribution"] == {"0": 1, "32": 2, "50": 96, "54": 80, "59": 64}


def test_walsh_csv_default_and_explicit_member(capsys):
    code, out = run_cli(capsys, "walsh", "--n", "2", "--family", "char", "--s", "1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["w_index", "a", "b", "twice_re", "case"]
    assert len(rows) == 10
    table = {int(r[0]): r[1:] for r in rows[1:]}
    assert table[0] == ["7", "2", "12", "zero"]
    # default A = {member 0}; its dual holds indices 3 and 6
    assert table[3] == ["-2", "2", "-6", "dual:0"]
    assert table[6] == ["-2", "2", "-6", "dual:0"]
    assert table[1][3] == "outside"

    # the same value sits on dual:1 when member 1 is chosen instead
    code, out = run_cli(
        capsys,
        "walsh", "--n", "2", "--family", "char", "--s", "1", "--indices", "1",
    )
    assert code == 0
    table = {int(r[0]): r[1:] for r in list(csv.reader(io.StringIO(out)))[1:]}
    assert table[7] == ["-2", "2", "-6", "dual:1"]


def test_walsh_csv_ternary_sides(capsys):
    code, out = run_cli(capsys, "walsh", "--n", "2", "--family", "ternary", "--s", "1")
    assert code == 0
    table = {int(r[0]): r[1:] for r in list(csv.reader(io.StringIO(out)))[1:]}
    assert table[3] == ["0", "3", "-3", "dual:0:first"]
    assert table[5] == ["-3", "-3", "-3", "dual:1:second"]


def test_verify_minimal(tmp_path, capsys):
    target = tmp_path / "v.json"
    code, _ = run_cli(
        capsys,
        "verify", "--n", "4", "--family", "char", "--s", "2", "--out", str(target),
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["schema"] == 1
    assert payload["verdict"] == "minimal"
    assert payload["witness"] is None
    assert payload["ratio"] == "16/61"
    assert payload["ab_satisfied"] is False
    assert payload["methods_agree"] is True
    assert isinstance(payload["runtime_ms"], int)


def test_verify_not_minimal_exits_3(capsys):
    code, out = run_cli(
        capsys, "verify", "--n", "4", "--family", "char", "--s", "1",
    )
    assert code == 3
    payload = json.loads(out)
    assert payload["verdict"] == "not_minimal"
    assert payload["witness"]["kind"] == "cover"
    assert payload["witness"]["c1"] == {"alpha": 0, "w_index": 9}
    assert payload["walsh_witness"]["kind"] == "walsh_triple"


def test_verify_walsh_only(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--n", "4", "--family", "ternary", "--s", "1", "--method", "walsh",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "walsh"
    assert "methods_agree" not in payload


def test_export_stdout(capsys):
    code, out = run_cli(
        capsys, "export", "--n", "2", "--family", "char", "--s", "1"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3 and all(len(r) == 8 for r in lines)


def test_reproduce_passes(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out = run_cli(capsys, "reproduce", "--out", str(target))
    assert code == 0
    assert "mismatch" not in [line.split()[0] for line in out.splitlines() if line]
    payload = json.loads(target.read_text())
    assert payload["schema"] == 1
    assert payload["ok"] is True
    statuses = {c["status"] for c in payload["claims"]}
    assert statuses == {"match", "corrected"}


def test_installed_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "spreadcodes.cli",
         "export", "--n", "2", "--family", "ternary", "--s", "1"],
        capture_output=True, text=True, cwd=tmp_path,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 3
