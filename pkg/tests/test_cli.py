"""End-to-end tests of the command line, its outputs and exit codes."""

from __future__ import annotations

import json

import pytest

from conftest import K4_ROT, K33_TOKENS
from mapcalc import (
    enumerate_maps,
    gon_counts,
    parse_gem,
    sphere_loop_map,
    write_gem,
    zigzag_map_from_word,
)
from mapcalc.cli import run
from mapcalc.codec import parse_word

TWO_SPHERES = "gem 2\na 1 2\na 3 0\na 5 6\na 7 4\n"


@pytest.fixture()
def files(tmp_path):
    paths = {}
    paths["s1"] = tmp_path / "s1.gem"
    paths["s1"].write_text(write_gem(sphere_loop_map()))
    paths["k33"] = tmp_path / "k33.gem"
    paths["k33"].write_text(write_gem(zigzag_map_from_word(parse_word(K33_TOKENS))))
    paths["k33w"] = tmp_path / "k33.szw"
    paths["k33w"].write_text(K33_TOKENS + "\n")
    paths["k4"] = tmp_path / "k4.rot"
    paths["k4"].write_text(K4_ROT)
    paths["loop"] = tmp_path / "loop.rot"
    paths["loop"].write_text("v 1: 1 1\n")
    paths["bad"] = tmp_path / "bad.gem"
    paths["bad"].write_text("gem 1\na 0 3\n")
    paths["split"] = tmp_path / "split.gem"
    paths["split"].write_text(TWO_SPHERES)
    paths["tmp"] = tmp_path
    return paths


def run_cli(capsys, *argv):
    code = run([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(files, capsys):
    code, out, _ = run_cli(capsys, "validate", files["s1"])
    assert code == 0
    assert "involution: ok" in out
    assert "map: valid" in out


def test_validate_reports_failures(files, capsys):
    code, out, _ = run_cli(capsys, "validate", files["split"])
    assert code == 1
    assert "connected: FAIL" in out
    assert "map: INVALID" in out


def test_info(files, capsys):
    code, out, _ = run_cli(capsys, "info", files["k33"])
    assert code == 0
    lines = out.splitlines()
    assert "edges: 9" in lines
    assert "gons: v=6 f=4 z=1" in lines
    assert "chi: 1" in lines
    assert "xi: 1" in lines
    assert "orientable: no" in lines
    assert "loops: none" in lines


def test_info_loop_balance(files, capsys):
    code, out, _ = run_cli(capsys, "info", files["s1"])
    assert code == 0
    assert "loops: 1=balanced" in out


def test_omega_writes_the_dual(files, capsys):
    out_path = files["tmp"] / "dual.gem"
    code, out, _ = run_cli(capsys, "omega", files["s1"], "--perm", "lsd", "-o", out_path)
    assert code == 0
    assert "(v=2 f=1 z=1)" in out
    written = parse_gem(out_path.read_text())
    assert gon_counts(written) == (2, 1, 1)


def test_omega_rect_subset(files, capsys):
    out_path = files["tmp"] / "partial.gem"
    code, _, _ = run_cli(capsys, "omega", files["k33"], "--rects", "1,3", "--perm", "dls", "-o", out_path)
    assert code == 0
    assert parse_gem(out_path.read_text()).m == 9


def test_omega_bad_arguments(files, capsys):
    out_path = files["tmp"] / "x.gem"
    code, _, err = run_cli(capsys, "omega", files["s1"], "--rects", "7", "--perm", "lsd", "-o", out_path)
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "omega", files["s1"], "--perm", "ssl", "-o", out_path)
    assert code == 2 and "error" in err


def test_word_zigzag_round_trip(files, capsys):
    code, out, _ = run_cli(capsys, "word", files["k33"])
    assert code == 0
    assert out.strip() == K33_TOKENS


def test_word_vertex(files, capsys):
    code, out, _ = run_cli(capsys, "word", files["s1"], "--kind", "v")
    assert code == 0
    assert out.strip() == "1 1"
    code, _, err = run_cli(capsys, "word", files["k33"], "--kind", "v")
    assert code == 3 and "error" in err
    code, _, err = run_cli(capsys, "word", files["s1"], "--kind", "v", "--gon", "5")
    assert code == 2


def test_ops_output(files, capsys):
    code, out, _ = run_cli(capsys, "ops", files["k33"])
    assert code == 0
    assert "c_P (9x9):" in out
    assert "c_P~ (9x9):" in out
    assert "c_D: not applicable (4 faces)" in out


def test_ops_not_applicable(files, capsys):
    plain = next(m for m in enumerate_maps(2) if gon_counts(m)[1] != 1 and gon_counts(m)[2] != 1)
    path = files["tmp"] / "plain.gem"
    path.write_text(write_gem(plain))
    code, out, _ = run_cli(capsys, "ops", path)
    assert code == 3
    assert "c_P: not applicable" in out


def test_verify_all(files, capsys):
    code, out, _ = run_cli(capsys, "verify", files["k33"])
    assert code == 0
    assert "theorem 1a: holds" in out
    assert "theorem 3a: holds (im=1, xi=1)" in out
    assert "theorem 4: not applicable: 4 faces" in out


def test_verify_json(files, capsys):
    code, out, _ = run_cli(capsys, "verify", files["k33"], "--theorem", "3", "--json")
    assert code == 0
    reports = json.loads(out)
    assert [r["theorem"] for r in reports] == ["3a", "3b", "3c"]
    assert reports[0] == {"theorem": "3a", "applicable": True, "holds": True, "dims": {"im": 1, "xi": 1}}
    assert all(set(r) <= {"theorem", "applicable", "holds", "dims", "counterexample"} for r in reports)


def test_verify_not_applicable_exit(files, capsys):
    code, out, _ = run_cli(capsys, "verify", files["s1"], "--theorem", "4")
    assert code == 3
    assert "theorem 4: not applicable: 2 faces" in out


def test_from_word(files, capsys):
    out_path = files["tmp"] / "rebuilt.gem"
    code, out, _ = run_cli(capsys, "from-word", files["k33w"], "-o", out_path)
    assert code == 0
    assert "(v=6 f=4 z=1)" in out
    assert gon_counts(parse_gem(out_path.read_text())) == (6, 4, 1)


def test_from_word_bad_input(files, capsys):
    bad = files["tmp"] / "bad.szw"
    bad.write_text("1 2 1\n")
    code, _, err = run_cli(capsys, "from-word", bad, "-o", files["tmp"] / "x.gem")
    assert code == 2 and "error" in err


def test_search_k4(files, capsys):
    out_path = files["tmp"] / "k4.gem"
    code, out, _ = run_cli(capsys, "search", files["k4"], "-o", out_path)
    assert code == 0
    assert out.startswith("found after")
    found = parse_gem(out_path.read_text())
    v, f, z = gon_counts(found)
    assert f == 1 and z == 1


def test_search_exhausted_reports_seed(files, capsys, monkeypatch):
    monkeypatch.setenv("MAPCALC_SEED", "7")
    out_path = files["tmp"] / "none.gem"
    code, out, _ = run_cli(capsys, "search", files["loop"], "-o", out_path)
    assert code == 3
    assert out.strip() == "exhausted after 2 candidates (seed 7)"
    assert not out_path.exists()


def test_search_with_subdivision(files, capsys):
    out_path = files["tmp"] / "sub.gem"
    code, out, _ = run_cli(capsys, "search", files["loop"], "--subdiv", "1", "-o", out_path)
    assert code == 0
    assert "subdivisions: 1:1" in out


def test_enumerate(files, capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--size", "1", "--verify-absorption")
    assert code == 0
    assert "m=1: 3 connected maps" in out
    assert "profile v=1 f=1 z=2: 1" in out
    assert "absorption: holds on all 3 maps" in out


def test_parse_error_exit(files, capsys):
    code, _, err = run_cli(capsys, "info", files["bad"])
    assert code == 2 and "error" in err


def test_invalid_map_exit(files, capsys):
    code, _, err = run_cli(capsys, "info", files["split"])
    assert code == 1 and "connected" in err


def test_missing_file_exit(files, capsys):
    code, _, err = run_cli(capsys, "info", str(files["tmp"] / "absent.gem"))
    assert code == 2 and "error" in err


def test_usage_errors(capsys):
    assert run_cli(capsys, )[0] == 2
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "--help")[0] == 0
