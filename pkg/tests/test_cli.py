import json
import subprocess
import sys

import pytest

from equicolor.cli import main
from equicolor.graph import to_dimacs, to_graph6
from conftest import FIXTURES, chorded_c7


@pytest.fixture
def c7_file(tmp_path):
    p = tmp_path / "c7.col"
    p.write_text(to_dimacs(chorded_c7()))
    return p


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_color(capsys, c7_file):
    code, out, _ = run(capsys, "color", "--in", str(c7_file))
    assert code == 0
    data = json.loads(out)
    assert data["k"] == 3 and data["sizes"] == [3, 2, 2]


def test_color_summary_and_k(capsys):
    code, out, _ = run(capsys, "color", "--g6", to_graph6(chorded_c7()), "--k", "4", "--output", "summary")
    assert code == 0
    assert out.startswith("ok: k=4 sizes=[2, 2, 2, 1]")


def test_color_out_of_window(capsys):
    code, out, _ = run(capsys, "color", "--gen", "complete_bipartite:3:3")
    assert code == 1
    assert json.loads(out)["status"] == "out_of_window"


def test_color_forbidden(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"n": 7, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3], [4, 5], [5, 6], [4, 6]]}))
    code, out, _ = run(capsys, "color", "--in", str(p))
    assert code == 1
    assert json.loads(out)["component"] == [0, 1, 2, 3]


def test_stall_exit_and_env_cert_dir(capsys, c7_file, tmp_path, monkeypatch):
    certs = tmp_path / "certs"
    monkeypatch.setenv("EQUICOLOR_CERT_DIR", str(certs))
    code, out, _ = run(capsys, "color", "--in", str(c7_file), "--radius", "1")
    assert code == 2
    assert json.loads(out)["status"] == "stall"
    assert len(list(certs.glob("stall_n7_*.json"))) == 1


def test_verify(capsys, c7_file, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"k": 3, "classes": [[0, 2, 5], [1, 4], [3, 6]]}))
    code, out, _ = run(capsys, "verify", "--graph", str(c7_file), "--coloring", str(good), "--k", "3")
    assert code == 0 and json.loads(out)["proper"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"k": 3, "classes": [[0, 1, 5], [2, 4], [3, 6]]}))
    code, out, _ = run(capsys, "verify", "--graph", str(c7_file), "--coloring", str(bad))
    assert code == 1
    assert json.loads(out)["violations"] == [[0, 1]]


def test_audit(capsys, c7_file, tmp_path):
    code, out, _ = run(capsys, "audit", "--graph", str(c7_file))
    assert code == 0
    assert json.loads(out)["violations"] == []
    loose = tmp_path / "loose.json"
    loose.write_text(json.dumps({"k": 7, "classes": [[v] for v in range(7)]}))
    code, out, _ = run(capsys, "audit", "--graph", str(c7_file), "--coloring", str(loose))
    assert code == 1
    assert json.loads(out)["violations"]


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--gen", "complete_bipartite:3:3")
    assert code == 0
    assert json.loads(out) == {"chi": 2, "chi_eq": 2, "chi_eq_star": 4, "alpha": 3}
    code, out, _ = run(capsys, "oracle", "--gen", "complete_bipartite:3:3", "--k", "3")
    assert json.loads(out)["equitable"] is False
    code, _, err = run(capsys, "oracle", "--gen", "cycle:30")
    assert code == 64 and "cap" in err


def test_gen_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "cycle:5")
    assert code == 0 and out.strip() == "Dhc"
    code, out, _ = run(capsys, "gen", "window:12:0.35", "--seed", "3", "--format", "json")
    data = json.loads(out)
    assert data["n"] == 12


def test_sweep(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "sweep", str(FIXTURES / "graphs7.g6"), "--report", str(report))
    assert code == 0
    assert json.loads(out)["corpus_size"] == 1044
    assert "runtime" in json.loads(report.read_text())
    code, out, _ = run(capsys, "sweep", str(FIXTURES / "graphs6.g6"), "--output", "summary", "--no-cross-check")
    assert "out_of_window_skipped" in out


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["color"], ["color", "--in", "x.txt"], ["color", "--g6", "!!"], ["color", "--gen", "cycle:5", "--k", "0"]],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 64


def test_module_entry_is_deterministic(c7_file):
    cmd = [sys.executable, "-m", "equicolor", "color", "--in", str(c7_file), "--trace"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
