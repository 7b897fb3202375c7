import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from latticediss.cli import main
from latticediss.geometry import boundary_word, parse_polygon_json
from latticediss.words import CyclicWord

GOLDEN = Path(__file__).parent / "golden"

SQUARE = "[[0,0],[1,0],[1,1],[0,1]]"
TRIANGLE = "[[0,0],[4,0],[0,1]]"
RECT35 = "[[0,0],[3,0],[3,5],[0,5]]"
HALF_SPLIT = json.dumps({
    "polygon": [[0, 0], [1, 0], [1, 1], [0, 1]],
    "triangles": [[[0, 0], [1, 0], [1, 1]], [[0, 0], [1, 1], [0, 1]]],
})


@pytest.fixture
def square_file(tmp_path):
    p = tmp_path / "square.json"
    p.write_text(SQUARE)
    return str(p)


def test_decide_words(capsys):
    assert main(["decide", "ABCDACBADC"]) == 10
    assert capsys.readouterr().out.strip() == "not-contractible"
    assert main(["decide", "ABABCCDCBBDB"]) == 0
    assert capsys.readouterr().out.strip() == "contractible"


def test_decide_polygon(square_file, capsys):
    assert main(["decide", "--polygon", square_file]) == 10
    out = capsys.readouterr().out
    assert "word ABCD" in out and "not-contractible" in out


def test_decide_rejects_bad_word(capsys):
    assert main(["decide", "AB1"]) == 2
    assert "error" in capsys.readouterr().err


def test_decide_needs_exactly_one_input(square_file):
    with pytest.raises(SystemExit) as exc:
        main(["decide", "ABCD", "--polygon", square_file])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["decide"])


def test_decide_polygon_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO(SQUARE))
    assert main(["decide", "--polygon", "-"]) == 10
    assert "ABCD" in capsys.readouterr().out


def test_dissect_impossible(square_file, capsys):
    assert main(["dissect", square_file, "--unit"]) == 10
    err = capsys.readouterr().err
    assert "no integral dissection exists" in err and "ABCD" in err


def test_dissect_verify_roundtrip(tmp_path, capsys):
    poly = tmp_path / "tri.json"
    poly.write_text(TRIANGLE)
    out = tmp_path / "diss.json"
    assert main(["dissect", str(poly), "--unit", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert len(data["triangles"]) == 2
    assert main(["verify", str(poly), str(out), "--mode", "unit"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["valid"] is True


def test_dissect_integral_dodecagon(tmp_path, capsys):
    poly = tmp_path / "dodeca.json"
    assert main(["realize", "ABABCCDCBBDB", "-o", str(poly)]) == 0
    assert boundary_word(parse_polygon_json(poly.read_text())) == CyclicWord("ABABCCDCBBDB")
    out = tmp_path / "diss.json"
    assert main(["dissect", str(poly), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert len(data["triangles"]) == 10
    assert main(["verify", str(poly), str(out), "--mode", "integral"]) == 0
    capsys.readouterr()


def test_dissect_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[[0,0],[1,0]]")
    assert main(["dissect", str(bad)]) == 2
    assert main(["dissect", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_verify_invalid_modes(square_file, tmp_path, capsys):
    diss = tmp_path / "half.json"
    diss.write_text(HALF_SPLIT)
    assert main(["verify", square_file, str(diss), "--mode", "any"]) == 0
    assert main(["verify", square_file, str(diss), "--mode", "integral"]) == 11
    report = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert not report["valid"]


def test_verify_truncated_dissection(square_file, tmp_path, capsys):
    diss = tmp_path / "short.json"
    diss.write_text(json.dumps({"triangles": [[[0, 0], [1, 0], [1, 1]]]}))
    assert main(["verify", square_file, str(diss)]) == 11
    report = json.loads(capsys.readouterr().out)
    names = {c["name"]: c["passed"] for c in report["checks"]}
    assert names["area-sum"] is False


def test_witness(square_file, tmp_path, capsys):
    diss = tmp_path / "half.json"
    diss.write_text(HALF_SPLIT)
    assert main(["witness", square_file, str(diss)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["area"] == "1/2" and data["doubled_area"] == 1
    assert len(data["triangle"]) == 3


def test_witness_contractible_polygon_rejected(tmp_path, capsys):
    poly = tmp_path / "tri.json"
    poly.write_text("[[0,0],[2,0],[1,1]]")
    diss = tmp_path / "d.json"
    diss.write_text(json.dumps({"triangles": [[[0, 0], [2, 0], [1, 1]]]}))
    assert main(["witness", str(poly), str(diss)]) == 2
    assert "contractible" in capsys.readouterr().err


def test_sperner_cli(capsys):
    assert main(["sperner", "ABCDACBADC"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["triangulations_examined"] == 1430
    assert data["tricolor_free"] == 0
    assert main(["sperner", "AAB"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["triangulations_examined"] == 1 and data["tricolor_free"] == 1
    assert main(["sperner", "A" * 13]) == 2
    capsys.readouterr()


def test_render_golden_square(square_file, tmp_path):
    out = tmp_path / "sq.svg"
    assert main(["render", square_file, "-o", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "square.svg").read_bytes()


def test_render_golden_pentagon(tmp_path):
    poly = tmp_path / "pent.json"
    poly.write_text("[[0,0],[4,0],[5,2],[2,4],[0,2]]")
    out = tmp_path / "pent.svg"
    assert main(["render", str(poly), str(GOLDEN / "pentagon_diss.json"), "-o", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "pentagon.svg").read_bytes()


def test_render_bad_file(tmp_path, capsys):
    assert main(["render", str(tmp_path / "nope.json"), "-o", str(tmp_path / "x.svg")]) == 2
    capsys.readouterr()


def test_bench_cli(capsys):
    assert main(["bench", "--lengths", "500,1000", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "kernel" in out and "least-squares fit" in out
    assert main(["bench", "--lengths", ""]) == 0
    out = capsys.readouterr().out
    assert "kernel" in out  # header-only table


def test_realize_cli(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["realize", "ABCD", "-o", str(out)]) == 0
    P = parse_polygon_json(out.read_text())
    assert boundary_word(P) == CyclicWord("ABCD")
    # unrealizable letters give the impossible exit code
    assert main(["realize", "XYZW"]) == 10
    capsys.readouterr()


@pytest.mark.skipif(shutil.which("latticediss") is None, reason="console script not on PATH")
def test_console_script_subprocess():
    proc = subprocess.run(
        ["latticediss", "decide", "ABCDACBADC"], capture_output=True, text=True
    )
    assert proc.returncode == 10
    assert proc.stdout.strip() == "not-contractible"
