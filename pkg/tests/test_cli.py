import io
import json
from pathlib import Path

import pytest

from bornforge.catalog import entry
from bornforge.cli import catalog_bundle, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("golden, argv", [
    ("reproduce_table3.md", ["reproduce", "--table", "3"]),
    ("reproduce_table5.csv", ["--format", "csv", "reproduce", "--table", "5"]),
    ("parse_h13.json", ["--format", "json", "parse", "(0,0,0,12,13+14,24)"]),
    ("check_rh3.json", ["--format", "json", "check", "--catalog", "rh3"]),
    ("sweep_y0.md", ["sweep", "--x=-2,-1,0,1,2", "--y=0"]),
    ("invariants_h9.md", ["invariants", "h9"]),
])
def test_golden(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_deterministic(capsys):
    first = run(capsys, "--format", "json", "reproduce", "--table", "2")
    second = run(capsys, "--format", "json", "reproduce", "--table", "2")
    assert first == second


def test_check_bundle_file(tmp_path, capsys):
    path = tmp_path / "rh3.json"
    path.write_text(json.dumps(catalog_bundle("rh3")), encoding="utf-8")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and "FAIL" not in out


def test_check_index_subspaces(tmp_path, capsys):
    bundle = catalog_bundle("r2r2")
    # 1-based basis indices instead of explicit vectors
    bundle["structure"]["g_plus"] = [1, 3]
    bundle["structure"]["g_minus"] = [2, 4]
    path = tmp_path / "b.json"
    path.write_text(json.dumps(bundle), encoding="utf-8")
    code, out, _ = run(capsys, "--format", "json", "check", str(path))
    assert code == 0 and json.loads(out)["ok"]


def test_corrupted_omega_exits_1(tmp_path, capsys):
    born = catalog_bundle("rh3")
    forms = entry("rh3").born_model().to_json()
    forms["omega"][0][3] = "5"
    forms["omega"][3][0] = "-5"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"algebra": born["algebra"], "structure": forms}), encoding="utf-8")
    code, out, _ = run(capsys, "--format", "json", "check", str(path))
    report = json.loads(out)
    assert code == 1
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    assert failed and all(isinstance(n, str) and n for n in failed)


def test_malformed_salamon_exits_2(capsys):
    code, out, err = run(capsys, "parse", "(0,0,1x)")
    assert code == 2 and out == ""
    assert "position 5" in err and "^" in err


def test_bad_json_exits_2(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "bad bundle JSON" in err


def test_unknown_algebra_exits_2(capsys):
    code, _, _ = run(capsys, "identify", "nonsense")
    assert code == 2


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("(0,0,12)\n"))
    code, out, _ = run(capsys, "--format", "json", "parse", "-")
    assert code == 0 and json.loads(out)["data"]["salamon"] == "(0,0,12)"


def test_identify(capsys):
    code, out, _ = run(capsys, "--format", "json", "identify", "(0,0,0,12,13,23)", "--pseudo-kahler")
    data = json.loads(out)["data"]
    assert code == 0 and data["name"] == "h7" and data["status"] == "identified"
    code, out, _ = run(capsys, "--format", "json", "identify", "(0,0,0,12,13,23)")
    assert json.loads(out)["data"]["status"] == "candidate"


def test_empty_sweep(capsys):
    code, out, _ = run(capsys, "--format", "json", "sweep", "--x=", "--y=0")
    report = json.loads(out)
    assert code == 0 and report["tables"][0]["rows"] == []


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "--format", "json", "catalog", "dump")
    names = [e["name"] for e in json.loads(out)["data"]["catalog"]["entries"]]
    assert code == 0 and "h15" in names and "d4,1/2" in names


@pytest.mark.parametrize("variant", ["remark", "table2"])
def test_remark_r4(capsys, variant):
    code, out, _ = run(capsys, "remark-r4", "--variant", variant)
    assert code == 0 and "**PASS**" in out
