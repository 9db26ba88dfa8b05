import json
import subprocess
import sys

import pytest

from projboard.board import board
from projboard.characterization import initial_squares, terminal_squares
from projboard.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_map_json_3x3(capsys):
    code, out, _ = run(capsys, "map", "--mode", "init", "--m", "3", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 7
    assert {tuple(x["square"]) for x in doc["squares"]} == set(board(3, 3).squares()) - {(0, 0), (2, 2)}
    assert all(x["clauses"] for x in doc["squares"])


def test_map_term_3x3(capsys):
    code, out, _ = run(capsys, "map", "--mode", "term", "--m", "3", "--n", "3", "--format", "json")
    got = {tuple(x["square"]) for x in json.loads(out)["squares"]}
    assert got == terminal_squares(board(3, 3)) and len(got) == 7


def test_map_ascii_orientation(capsys):
    code, out, _ = run(capsys, "map", "--mode", "init", "--m", "3", "--n", "3")
    rows = out.splitlines()
    # top printed row is q = 2: (0,2) and (1,2) initial, (2,2) not
    assert rows[1].startswith("2 |") and rows[1].split("|")[1].split() == ["•", "•", "·"]
    assert rows[3].startswith("0 |") and rows[3].split("|")[1].split() == ["·", "•", "•"]


def test_map_12x5(capsys):
    code, out, _ = run(capsys, "map", "--mode", "init", "--m", "12", "--n", "5", "--format", "json")
    assert {tuple(x["square"]) for x in json.loads(out)["squares"]} == initial_squares(board(12, 5))


def test_map_svg(capsys):
    code, out, _ = run(capsys, "map", "--mode", "term", "--m", "5", "--n", "4", "--format", "svg")
    assert code == 0 and out.startswith("<svg") and out.count("fill=\"#000\"") == len(terminal_squares(board(5, 4)))


def test_map_rejects_tall(capsys):
    code, _, err = run(capsys, "map", "--mode", "init", "--m", "3", "--n", "5")
    assert code == 2 and "transpose" in err


def test_map_deterministic(capsys):
    a = run(capsys, "map", "--mode", "init", "--m", "7", "--n", "5", "--format", "json")[1]
    b = run(capsys, "map", "--mode", "init", "--m", "7", "--n", "5", "--format", "json")[1]
    assert a == b


def test_path_ha(capsys):
    code, out, _ = run(capsys, "path", "--kind", "ha", "--m", "4", "--n", "3", "--a", "1")
    assert code == 0 and out.splitlines()[0] == "moves: NNNNNENNNNN"
    assert "▒" in out and "■" in out and "→" in out and "↑" in out


def test_path_spec_matches_ha(capsys):
    _, a, _ = run(capsys, "path", "--spec", "--m", "3", "--n", "3", "--init", "0,2", "--term", "1,0", "--east", "")
    _, b, _ = run(capsys, "path", "--kind", "ha", "--m", "3", "--n", "3", "--a", "1")
    assert a == b


def test_path_json(capsys):
    code, out, _ = run(capsys, "path", "--kind", "hb", "--m", "5", "--n", "3", "--a", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["spec"] == {"initial": [4, 0], "terminal": [2, 1], "east": []}
    assert doc["notes"]  # the printed formula is replaced by a decoded path


def test_path_errors(capsys):
    code, _, err = run(capsys, "path", "--kind", "exceptional", "--m", "4")
    assert code == 2 and json.loads(err)["error"] == "HypothesisViolation"
    code, _, err = run(capsys, "path", "--spec", "--m", "3", "--n", "3", "--init", "0,2", "--term", "0,1")
    assert code == 1 and json.loads(err)["error"] == "NoPath"
    code, _, err = run(capsys, "path", "--kind", "ha", "--m", "4")
    assert code == 2


def test_enumerate_count_only(capsys):
    _, dfs, _ = run(capsys, "enumerate", "--m", "3", "--n", "3", "--method", "dfs", "--count-only")
    _, diag, _ = run(capsys, "enumerate", "--m", "3", "--n", "3", "--count-only")
    h1, f1 = (json.loads(x) for x in dfs.splitlines())
    h2, f2 = (json.loads(x) for x in diag.splitlines())
    assert h1["count"] == h2["count"] > 0
    assert f1 == f2


def test_enumerate_cycle_note(capsys):
    _, out, _ = run(capsys, "enumerate", "--m", "2", "--n", "2")
    assert "hamiltonian cycle witness" in out.splitlines()[-1]


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--m", "9", "--n", "9", "--method", "dfs")
    assert code == 3 and json.loads(err)["error"] == "CapExceeded"


def test_config_overrides_cap(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"dfs_cap": 4}))
    code, _, _ = run(capsys, "--config", str(cfg), "enumerate", "--m", "3", "--n", "3", "--method", "dfs")
    assert code == 3
    cfg.write_text(json.dumps({"bogus": 1}))
    code, _, _ = run(capsys, "--config", str(cfg), "enumerate", "--m", "3", "--n", "3")
    assert code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "map.svg"
    code, out, _ = run(capsys, "map", "--mode", "init", "--m", "4", "--n", "3", "--format", "svg", "--out", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("<svg")


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorems", "--max-m", "5", "--max-n", "5")
    assert code == 0 and out.rstrip().endswith("OK")
    assert "FAIL" not in out


def test_verify_constructions_warns(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "constructions", "--max-m", "7")
    assert code == 0 and "WARN" in out and "FAIL " not in out


def test_usage_exit_code():
    proc = subprocess.run([sys.executable, "-m", "projboard.cli", "map"], capture_output=True, text=True)
    assert proc.returncode == 2
