import json
import subprocess
import sys

import jsonschema
import pytest

from bsymbol import codes
from bsymbol.cli import main
from bsymbol.search import CSV_COLUMNS, Point, SearchGrid, load_schema, render, run_search


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_csv_row(capsys):
    code, out, _ = run(["verify", "--p", "2", "--s", "4", "--e", "1", "--b", "2",
                        "--format", "csv"], capsys)
    assert code == 0
    header, row = out.strip().split("\n")
    assert header.split(",") == CSV_COLUMNS
    assert row == "2,1,2,4,16,1,1,full,15,16,2,12,12,45,4,16,1,true,true,,"


def test_verify_json_schema(capsys):
    code, out, _ = run(["verify", "--p", "5", "--s", "3", "--e", "2", "--variant",
                        "shortened", "--b", "all"], capsys)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc[0]["records"][0]["bound_rhs"] == {"num": 125, "den": 1}
    assert all(r["remark1_ok"] for r in doc[0]["records"][1:])


def test_verify_failure_exit_code(capsys, monkeypatch):
    real = codes.predicted_distance
    monkeypatch.setattr(codes, "predicted_distance", lambda *a: real(*a) + 1)
    code, _, err = run(["verify", "--p", "2", "--s", "4"], capsys)
    assert code == 1
    assert "predicted_distance" in err and "beta=1" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--p", "4", "--s", "3"],
    ["verify", "--p", "2", "--s", "4", "--e", "7"],
    ["verify", "--p", "2", "--s", "4", "--b", "15"],
    ["construct", "--p", "2", "--s", "4", "--e", "3", "--variant", "shortened"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--p", "2"])
    assert info.value.code == 2


def test_search_skips(capsys):
    code, out, err = run(["search", "--p", "2", "--s", "3,4", "--e", "1,7"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert [d["status"] for d in doc] == ["passed", "skipped", "passed", "skipped"]
    assert doc[3]["reason"].startswith("EDoesNotDivide")
    assert "skipped" in err
    jsonschema.validate(doc, load_schema())


def test_search_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("BSYMBOL_FIELD_CAP", "20")
    code, out, _ = run(["search", "--p", "2", "--s", "4,5"], capsys)
    doc = json.loads(out)
    assert doc[0]["status"] == "passed"
    assert doc[1]["status"] == "skipped" and "FieldTooLarge" in doc[1]["reason"]


def test_empty_grid():
    assert run_search(SearchGrid(p=[], s=[])) == []
    assert render([], "json") == "[]\n"
    assert render([], "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_grid_file_and_jobs(tmp_path, capsys):
    grid = {"points": [{"p": 5, "s": 3, "e": 2, "variant": "shortened"},
                       {"p": 2, "s": 4, "e": 1}, {"p": 3, "s": 3, "e": 2}],
            "b": "all"}
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    outs = []
    for jobs in ("1", "2"):
        dest = tmp_path / f"out{jobs}.csv"
        code, _, _ = run(["search", "--grid", str(path), "--format", "csv", "--out", str(dest),
                          "--jobs", jobs], capsys)
        assert code == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    rows = outs[0].decode().strip().split("\n")[1:]
    assert [r.split(",")[0] for r in rows][:1] == ["2"]  # lexicographic grid order


def test_grid_expansion_order():
    grid = SearchGrid(p=[3, 2], s=[4, 3], e=[2, 1], variants=["shortened", "full"])
    pts = grid.expand()
    assert pts == sorted(pts, key=lambda t: (t.p, t.f, t.s, t.e, t.variant != "full"))
    assert pts[0] == Point(2, 1, 3, 1, "full")


def test_construct(capsys, tmp_path):
    code, out, _ = run(["construct", "--p", "3", "--s", "3", "--e", "2"], capsys)
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "# 3 1 3 2 full 13"
    assert len(lines) == 28
    assert lines[1] == " ".join(["0"] * 13)
    dest = tmp_path / "c.txt"
    main(["construct", "--p", "3", "--s", "3", "--e", "2", "--out", str(dest)])
    assert dest.read_text() == out


def test_dump_field(capsys):
    code, out, _ = run(["dump-field", "--p", "2", "--m", "4"], capsys)
    doc = json.loads(out)
    assert doc["modulus_poly"] == "1,1,0,0,1"
    assert doc["gamma"] == 2 and len(doc["antilog"]) == 15 and doc["log"][0] is None


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bsymbol", "verify", "--p", "2", "--s", "3",
                          "--format", "csv"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1].startswith("2,1,2,3,8,1,1,full,7,8,2,6,6,21,4,8,1,true")
