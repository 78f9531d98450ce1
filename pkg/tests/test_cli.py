import io
import json
import subprocess
import sys

import pytest

from rightkey.cli import main
from rightkey.demazure import Polynomial
from rightkey.tableau import parse_tableau, tableau_from_json

from conftest import WORKED_KEY_ROWS, WORKED_ROWS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_scan_worked_example(capsys):
    code, out, _ = run(capsys, "scan", WORKED_ROWS, "-n", "9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S(T):"
    assert parse_tableau("\n".join(lines[1:8]), 9) == parse_tableau(WORKED_KEY_ROWS, 9)
    assert lines[-1] == "sigma = 8,9,5,1,3,4,7,2,6"


def test_scan_paths(capsys):
    code, out, _ = run(capsys, "scan", WORKED_ROWS, "-n", "9", "--paths")
    assert code == 0
    assert "1^1 1^1 5^4 8^6" in out


def test_demazure_text(capsys):
    code, out, _ = run(capsys, "demazure", "n=2; 1", "2,1", "--oracle")
    assert code == 0
    assert out.splitlines() == ["x1 + x2", "oracle: agree"]


def test_demazure_json_matches_text(capsys):
    _, text, _ = run(capsys, "demazure", "n=3; 2,1", "3,2,1")
    _, js, _ = run(capsys, "demazure", "n=3; 2,1", "3,2,1", "--format", "json")
    data = json.loads(js)
    assert str(Polynomial.from_json(data["character"])) == text.strip() == data["text"]


def test_scan_json_matches_text(capsys):
    _, text, _ = run(capsys, "scan", WORKED_ROWS, "-n", "9")
    _, js, _ = run(capsys, "scan", WORKED_ROWS, "-n", "9", "--format", "json")
    data = json.loads(js)
    lines = text.splitlines()
    assert tableau_from_json(data["scanning_tableau"]) == parse_tableau("\n".join(lines[1:-1]), 9)
    assert lines[-1] == "sigma = " + ",".join(map(str, data["sigma"]))


def test_chain_json_matches_text(capsys):
    for extra in ([], ["--saturated"]):
        _, text, _ = run(capsys, "chain", WORKED_ROWS, "-n", "9", *extra)
        _, js, _ = run(capsys, "chain", WORKED_ROWS, "-n", "9", "--format", "json", *extra)
        entries = json.loads(js)["chain"]
        lines = text.splitlines()
        assert len(lines) == len(entries)
        for line, e in zip(lines, entries):
            parts = line.split()
            assert parts[0] == e["label"]
            assert parts[1] == ",".join(map(str, e["perm"]))
            if "transposition" in e:
                assert parts[2:] == ["swap", ",".join(map(str, e["transposition"]))]
    assert len(entries) == 23
    assert "(2,4;1) 1,2,5,8,4,6,9,3,7 swap 3,5" in text


def test_admissible_json_matches_text(capsys):
    _, text, _ = run(capsys, "admissible", WORKED_ROWS, "-n", "9")
    _, js, _ = run(capsys, "admissible", WORKED_ROWS, "-n", "9", "--format", "json")
    data = json.loads(js)
    lines = text.splitlines()
    assert lines[0] == f"x = {data['x']}" == "x = 66"
    assert lines[-1] == "J = " + ",".join(map(str, data["J"]))
    starred = [int(l.split()[0]) for l in lines[1:-1] if l.endswith("*")]
    assert starred == data["J"] and len(starred) == 22


def test_rightkey(capsys):
    code, out, _ = run(capsys, "rightkey", WORKED_ROWS, "-n", "9")
    assert code == 0
    assert out.splitlines()[-1] == "pi = 8,9,5,1,3,4,7,2,6"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "n=2; 1", "2,1")
    assert code == 0 and out.split() == ["1", "2"]
    _, js, _ = run(capsys, "enumerate", "n=3; 2,1", "3,2,1", "--criterion", "bruhat", "--format", "json")
    assert json.loads(js)["count"] == 8


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 0
    for line in out.splitlines():
        assert line.startswith("suite=") and line.endswith("failures=0")


def test_exit_codes(capsys):
    assert run(capsys, "scan", "2 1", "-n", "3")[0] == 2
    assert run(capsys, "demazure", "n=3; 1,1", "2,1,3")[0] == 2
    assert run(capsys, "scan", "1 x")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_invalid_permutation_exit_code(capsys):
    code, _, err = run(capsys, "demazure", "n=3; 2,1", "1,1,2")
    assert code == 2 and "validation" in err


def test_file_and_stdin_input(tmp_path, monkeypatch, capsys):
    f = tmp_path / "t.txt"
    f.write_text("n=9\n" + WORKED_ROWS.replace(" / ", "\n") + "\n")
    _, from_file, _ = run(capsys, "scan", str(f))
    monkeypatch.setattr(sys, "stdin", io.StringIO(f.read_text()))
    _, from_stdin, _ = run(capsys, "scan", "-")
    _, inline, _ = run(capsys, "scan", WORKED_ROWS, "-n", "9")
    assert from_file == from_stdin == inline


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "admissible", WORKED_ROWS, "-n", "9", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rightkey", "demazure", "n=2; 1", "2,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "x1 + x2"
