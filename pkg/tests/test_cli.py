import json
import subprocess
import sys

import pytest

from ncg.catalog import heisenberg, to_spec_json
from ncg.cli import main
from ncg.field import GF


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "ncg", *args], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_analyze_heisenberg(capsys):
    code = main(["analyze", "--builtin", "heisenberg", "--q", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "vertices: 3" in out
    assert "planar: True" in out
    assert "chromatic number: 3" in out


def test_analyze_affine2_f4(capsys):
    code = main(["analyze", "--builtin", "affine2", "--q", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "vertices: 5" in out
    assert "planar: False" in out


def test_analyze_json(capsys):
    code = main(["analyze", "--builtin", "sl2", "--q", "5", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["graph"]["order"] == 31
    assert doc["graph"]["degree_sequence"][0] == 30


def test_analyze_writes_exports(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    gml = tmp_path / "g.graphml"
    code = main(
        ["analyze", "--builtin", "heisenberg", "--q", "2",
         "--dot", str(dot), "--graphml", str(gml)]
    )
    capsys.readouterr()
    assert code == 0
    assert dot.read_text().count("--") == 3
    assert "<graphml" in gml.read_text()


def test_analyze_bad_file_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"field":{"p":2,"m":1},"dim":2,"brackets":[{"i":0,"j":0,"value":[1,0]}]}')
    code = main(["analyze", "--file", str(bad)])
    err = capsys.readouterr().err
    assert code == 2
    assert "alternating" in err


def test_analyze_jacobi_witness_exit_2(tmp_path, capsys):
    # A dim-3 tensor over F_3 failing Jacobi.
    bad = tmp_path / "bad.json"
    bad.write_text(
        '{"field":{"p":3,"m":1},"dim":3,"brackets":['
        '{"i":0,"j":1,"value":[0,1,0]},{"i":1,"j":2,"value":[1,0,0]}]}'
    )
    code = main(["analyze", "--file", str(bad)])
    err = capsys.readouterr().err
    if code == 0:
        pytest.skip("tensor unexpectedly valid")
    assert code == 2
    assert "jacobi" in err


def test_verify_builtin_pass(capsys):
    code = main(["verify", "--builtin", "twin_nilpotent"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 failures" in out


def test_verify_census_exit_0(capsys):
    code = main(["verify", "--census", "--dim", "2", "--q", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 failures" in out


def test_verify_file(tmp_path, capsys):
    spec = tmp_path / "h.json"
    spec.write_text(to_spec_json(heisenberg(GF(3)), "h3"))
    code = main(["verify", "--file", str(spec), "--json"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert all(l["status"] != "fail" for l in lines)


def test_iso_twins(capsys):
    code = main(["iso", "twin_nilpotent", "twin_solvable"])
    out = capsys.readouterr().out
    assert code == 0
    assert "isomorphic" in out
    assert "differ structurally" in out


def test_iso_different_orders(capsys):
    code = main(["iso", "heisenberg@2", "affine2@4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "non-isomorphic" in out


def test_census_summary(capsys):
    code = main(["census", "--dim", "2", "--q", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "3 non-abelian" in out
    assert "classes: 1" in out


def test_census_file_byte_identical(tmp_path):
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    code1, _, _ = run_cli("census", "--dim", "3", "--q", "2", "--out", str(out1))
    code2, _, _ = run_cli("census", "--dim", "3", "--q", "2", "--out", str(out2))
    assert code1 == code2 == 0
    assert out1.read_bytes() == out2.read_bytes()
    first = json.loads(out1.read_text().splitlines()[0])
    assert {"fingerprint", "gamma_class", "graph"} <= set(first)


def test_verify_census_seeded_byte_identical_subprocess(tmp_path):
    f1 = tmp_path / "r1.jsonl"
    f2 = tmp_path / "r2.jsonl"
    args = ["verify", "--census", "--dim", "2", "--q", "2", "--seed", "0", "--json"]
    c1, _, _ = run_cli(*args, "--out", str(f1))
    c2, _, _ = run_cli(*args, "--out", str(f2))
    assert c1 == c2 == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_missing_algebra_exit_2(capsys):
    code = main(["analyze"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_unknown_builtin_exit_2(capsys):
    code = main(["analyze", "--builtin", "so8", "--q", "2"])
    assert code == 2


def test_bad_q_exit_2(capsys):
    code = main(["analyze", "--builtin", "heisenberg", "--q", "6"])
    assert code == 2


def test_guard_exceeded_exit_3(capsys):
    code = main(["census", "--dim", "4", "--q", "3"])
    err = capsys.readouterr().err
    assert code == 3
    assert "not computed" in err


def test_iso_guard_exceeded_exit_3(capsys):
    code = main(["iso", "sl2@5", "sl2@5", "--guard-isomorphism", "4"])
    err = capsys.readouterr().err
    assert code == 3
    assert "not computed" in err


def test_guard_flag_override(capsys):
    code = main(
        ["verify", "--builtin", "sl2", "--q", "5", "--guard-domination", "5", "--json"]
    )
    out = capsys.readouterr().out
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert all(l["status"] != "fail" for l in lines)


def test_console_entry_point_runs():
    code, out, _ = run_cli("analyze", "--builtin", "heisenberg", "--q", "3")
    assert code == 0
    assert "vertices: 4" in out
