import csv
import json
import random

import pytest

from multipletkit import __version__
from multipletkit.cli import corrupted_root_system, main
from multipletkit.properties import weyl_isometry


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_multiplet_table(capsys):
    code, out, _ = run(capsys, "multiplet", "--g", "A1", "--h", "t", "--lambda", "2")
    assert code == 0
    assert "+  (3)  dim 1" in out and "-  (-3)  dim 1" in out


def test_f4_rows(capsys, tmp_path):
    path = tmp_path / "f4.json"
    code, out, _ = run(capsys, "multiplet", "--g", "F4", "--h", "B4", "--lambda", "0", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert [r["dim"] for r in data["report"]["entries"]] == [84, 128, 44]
    m = data["manifest"]
    assert m["command"] == "multiplet" and m["version"] == __version__
    assert set(m) == {"command", "parameters", "version", "caps", "summary", "wall_time_s"}


def test_affine_verify(capsys):
    code, out, _ = run(capsys, "multiplet", "--g", "A1", "--h", "t", "--affine", "--level", "2", "--lambda", "0,-1", "--N", "6", "--verify")
    assert code == 0 and "verified" in out


@pytest.mark.parametrize("argv", [
    ["multiplet", "--g", "A1", "--h", "t", "--lambda", "x"],
    ["multiplet", "--g", "A1", "--h", "t", "--lambda", "-1"],
    ["multiplet", "--g", "Z9", "--h", "t"],
    ["multiplet", "--g", "A2", "--h", "B2"],
    ["multiplet", "--g", "A1", "--h", "t", "--affine", "--lambda", "0"],
    ["dirac", "loop", "--g", "A1", "--h", "t"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["multiplet", "--N", "many"])
    assert exc.value.code == 2


def test_dirac_finite(capsys):
    code, out, _ = run(capsys, "dirac", "finite", "--g", "A2", "--h", "t", "--lambda", "1,0")
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("  ")) == 6
    code, out, _ = run(capsys, "dirac", "finite", "--g", "A1", "--h", "A1")
    assert code == 0 and "PASS" in out


def test_dirac_loop_figure(capsys, tmp_path):
    path = tmp_path / "loop.json"
    code, out, _ = run(capsys, "dirac", "loop", "--g", "A1", "--h", "t", "--N", "6", "--figure", "--json", str(path))
    assert code == 0
    lines = out.splitlines()
    top = next(i for i, line in enumerate(lines) if line.startswith("m 6"))
    assert lines[top].split()[2:] == ["∘", "•", "•", "•", "•", "•", "•", "∘"]
    assert lines[top + 6].split() == ["0", "∘", "∘"]
    data = json.loads(path.read_text())
    assert len(data["report"]["kernel"]) == 8
    assert data["report"]["figure"].startswith("m 6")


def test_reproducible_json(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(capsys, "multiplet", "--g", "B2", "--h", "A1+A1", "--lambda", "1,0", "--verify", "--json", str(p), "--reproducible")
    assert a.read_bytes() == b.read_bytes()


def test_orbit_csv(capsys, tmp_path):
    path = tmp_path / "orbit.csv"
    code, out, _ = run(capsys, "orbit", "--g", "A1", "--lambda", "0,-1", "--level", "2", "--N", "6", "--csv", str(path))
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[1] == ["m", "lambda1", "h", "sign"]
    assert {(r[0], r[1]) for r in rows[2:]} == {("0", "-1"), ("0", "1"), ("1", "-3"), ("1", "3"), ("3", "-5"), ("3", "5"), ("6", "-7"), ("6", "7")}


def test_character_shift(capsys, tmp_path):
    path = tmp_path / "ch.json"
    code, _, _ = run(capsys, "character", "--g", "A1", "--lambda", "2,0", "--level", "1", "--N", "4", "--shift-to-zero", "--json", str(path))
    assert code == 0
    rows = json.loads(path.read_text())["report"]["character"]["rows"]
    assert rows[0]["m"] == "0"


def test_roots_and_figure(capsys):
    code, out, _ = run(capsys, "roots", "--g", "G2")
    assert code == 0 and "6 positive roots" in out
    code, out, _ = run(capsys, "figure", "--N", "10")
    assert code == 0 and out.startswith("m 10  ∘")


def test_cap_flag_gives_clean_error(capsys):
    code, _, err = run(capsys, "dirac", "finite", "--g", "A2", "--h", "t", "--lambda", "1,0", "--cap", "1")
    assert code == 1 and "cap exceeded" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--cases", "60")
    assert code == 0
    assert out.strip().endswith("all pass")


def test_corrupted_gram_has_witness():
    res = weyl_isometry(corrupted_root_system(), random.Random(1), 40)
    assert not res.passed and res.witness is not None
