import json
import subprocess
import sys

import pytest

from daisycube.cli import main
from daisycube.family import read_vertex_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_lucas(capsys):
    code, out, _ = run(capsys, "build", "--family", "lucas", "--n", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["counts"] == {"vertices": 7, "edges": 8, "maximal": 2}
    assert doc["maximal"] == ["0101", "1010"]


def test_build_text_roundtrip(capsys, tmp_path):
    gen = tmp_path / "gen.txt"
    gen.write_text("# three generators\n110\n011\n101\n")
    out_file = tmp_path / "v.txt"
    code, out, _ = run(capsys, "build", "--generators", str(gen), "--out", str(out_file))
    assert code == 0
    assert "vertices: 7" in out and "maximal: 3" in out
    V = read_vertex_file(str(out_file))
    assert len(V) == 7
    code2, out2, _ = run(capsys, "build", "--generators", str(out_file))
    assert code2 == 0
    assert out2 == out_file.read_text()


def test_build_hypercube_one(capsys):
    code, out, _ = run(capsys, "build", "--family", "hypercube", "--n", "1")
    assert code == 0
    words = [line for line in out.splitlines() if not line.startswith("#")]
    assert words == ["0", "1"]


def test_census_vertex_deleted(capsys):
    code, out, _ = run(capsys, "census", "--family", "vertex-deleted", "--n", "3", "--anchor", "000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# graph Q_3^- n=3 anchor=000")
    assert "engines_agree=yes" in lines[0]
    assert "C = 7 + 9*x + 3*x^2" in lines


def test_census_hypercube_at_top(capsys):
    from daisycube.poly import BiPoly, poly_from_dict

    code, out, _ = run(capsys, "census", "--family", "hypercube", "--n", "2", "--anchor", "11", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    x, y = BiPoly({(1, 0): 1}), BiPoly({(0, 1): 1})
    assert poly_from_dict(doc["D"]) == (1 + x + y) ** 2


def test_census_csv_and_k1(capsys):
    code, out, _ = run(capsys, "census", "--family", "fibonacci", "--n", "0", "--format", "csv")
    assert code == 0
    assert out == "k,d,count\n0,0,1\n"


@pytest.mark.parametrize("engine", ["oracle", "fast", "both"])
def test_census_engines_agree(capsys, engine):
    code, out, _ = run(capsys, "census", "--family", "lucas", "--n", "5", "--anchor", "01010",
                       "--engine", engine, "--format", "csv")
    assert code == 0
    ref = run(capsys, "census", "--family", "lucas", "--n", "5", "--anchor", "01010", "--format", "csv")[1]
    assert out == ref


def test_census_non_daisy_set_uses_oracle(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("000\n100\n110\n111\n011\n")
    code, out, _ = run(capsys, "census", "--vertices", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["engine"] == "oracle"
    code, _, err = run(capsys, "census", "--vertices", str(f), "--engine", "fast")
    assert code == 2 and err.startswith("error:")


def test_series_hypercube(capsys):
    from daisycube.poly import UniPoly, poly_from_dict

    code, out, _ = run(capsys, "series", "--family", "hypercube", "--m", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    x = UniPoly({1: 1})
    assert poly_from_dict(doc["coefficients"][3]["g"]) == (2 + x) ** 3
    assert doc["checks"] == {"g=f(x+1,z)": "pass", "h=f(x+y,z)": "pass"}


def test_series_lucas_text(capsys):
    code, out, _ = run(capsys, "series", "--family", "lucas", "--m", "2")
    assert code == 0
    assert "  h = 1 + 2*y + 2*x" in out.splitlines()
    assert out.rstrip().endswith("check h=f(x+y,z): pass")


def test_series_fibonacci(capsys):
    code, out, _ = run(capsys, "series", "--family", "fibonacci", "--m", "4")
    assert code == 0 and "closed form of W" in out


def test_verify_single_checks(capsys, tmp_path):
    assert run(capsys, "verify", "--check", "tree-like", "--family", "hypercube", "--n", "1")[0] == 0
    assert run(capsys, "verify", "--check", "distance-from-cube", "--family", "bipartite-wheel", "--n", "4")[0] == 0
    code, out, _ = run(capsys, "verify", "--check", "symmetry", "--family", "vertex-deleted",
                       "--n", "3", "--anchor", "110", "--format", "json")
    assert code == 0 and json.loads(out)["info"] == {"symmetric": "no"}


def test_verify_bad_set_fails(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("000\n100\n110\n111\n011\n")
    code, out, _ = run(capsys, "verify", "--check", "partial-cube", "--vertices", str(f), "--format", "json")
    assert code == 1
    assert json.loads(out)["witness"] == {"u": "000", "v": "011", "bfs": 4, "hamming": 2}
    code, _, err = run(capsys, "verify", "--check", "distance-from-cube", "--vertices", str(f))
    assert code == 2 and "downward-closed" in err


def test_verify_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--max-n", "4", "--random", "5")
    assert code == 0
    assert out.splitlines()[-1].endswith(", 0 failed")


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "--family", "hypercube", "--n", "3", "--anchor", "01"],
        ["census", "--family", "hypercube", "--n", "3", "--anchor", "0a1"],
        ["build", "--family", "bipartite-wheel", "--n", "2"],
        ["build", "--family", "hypercube"],
        ["build"],
        ["series", "--family", "lucas", "--m", "31"],
        ["verify", "--family", "lucas", "--n", "3"],
        ["build", "--generators", "/nonexistent/file"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_generator_line_reports_location(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("101\n1x1\n")
    code, _, err = run(capsys, "build", "--generators", str(f))
    assert code == 2 and ":2" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["census", "--family", "nope", "--n", "3"])
    assert exc.value.code == 2


def test_output_is_byte_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "daisycube", "census", "--family", "lucas", "--n", "6",
           "--anchor", "010100", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"\r" not in a


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "daisycube", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "census" in out.stdout
