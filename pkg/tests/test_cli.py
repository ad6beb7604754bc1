import io
import json
from pathlib import Path

import numpy as np
import pytest

from tripolar import cli, spectra
from tripolar.colourspace import colour, eq_mod_O, from_json

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, golden", [
    (["tables"], "tables.txt"),
    (["canon", "R[2]+G[1]+B[1]"], "canon_r2g1b1.json"),
    (["eval", "G[1] * G[1]"], "eval_g_times_g.txt"),
    (["eval", "--format", "json", "G[1] * G[1]"], "eval_g_times_g.json"),
    (["eval", "R[1] / R[1]"], "eval_r_over_r.txt"),
    (["eval", "R[1] * (G[1] + B[2])"], "eval_product_over_sum.txt"),
    (["eval", "R[1] + G[0.5 + gauss(520,20,0.3) e]"], "eval_gauss.txt"),
])
def test_golden_stdout(argv, golden):
    code, out, _ = run(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_singular_division_exit_code():
    code, out, err = run("eval", "R[1] / (R[2]+G[2]+B[2])")
    assert code == 3 and out == ""
    assert err == (GOLDEN / "eval_singular.stderr").read_text(encoding="utf-8")


def test_canon_values_and_round_trip():
    code, out, _ = run("canon", "R[2]+G[1]+B[1]")
    obj = json.loads(out)
    assert (obj["R"]["q"], obj["G"]["q"], obj["B"]["q"]) == (1, 0, 0)
    assert eq_mod_O(from_json(out), colour(2, 1, 1), 0.0)


def test_tables_first_row():
    assert run("tables")[1].splitlines()[2] == "    R | R G B"


@pytest.mark.parametrize("argv, code", [
    (["eval", "R[-1]"], 2),
    (["eval", "R[1] +"], 2),
    (["eval", "R[1 + csv:off.csv e]"], 4),
    (["eval", "conj(R[1])", "--square", "2"], 1),
    (["canon", "R[1]", "--format", "csv"], 1),
    (["eval", "R[1 + csv:missing.csv e]"], 1),
    (["bogus"], 2),
    (["check", "--cases", "0"], 1),
])
def test_exit_codes(argv, code, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "off.csv").write_text("f,value\n300,1\n900,1\n")
    assert run(*argv)[0] == code


def test_resample_flag(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "off.csv").write_text("f,value\n300,1\n900,1\n")
    assert run("canon", "--resample", "R[1 + csv:off.csv e]")[0] == 0


def test_render_writes_files(tmp_path):
    code, out, _ = run("render", "R[1]", "--out", str(tmp_path))
    assert code == 0
    report = json.loads(out)
    assert report["hue_nm"] == 610.0 and report["swatch"] == "#FF0000"
    assert json.loads((tmp_path / "report.json").read_text()) == report
    assert (tmp_path / "swatch.txt").read_text() == "#FF0000\n"
    curve = spectra.from_csv(tmp_path / "curve.csv")
    assert spectra.peak(curve) == (610.0, 1.0)
    assert report["energy"] == pytest.approx(spectra.integrate(curve), abs=1e-12)


def test_render_csv_to_stdout():
    code, out, _ = run("render", "G[1]", "--format", "csv", "--grid", "400:700:10")
    assert code == 0 and out.startswith("f,value\n400.0,")
    assert len(out.splitlines()) == 32


def test_render_grey_has_no_hue(tmp_path):
    code, out, _ = run("render", "R[1]+G[1]+B[1]", "--out", str(tmp_path))
    assert code == 0 and json.loads(out)["hue_nm"] is None


def test_eval_pretty_on_custom_grid():
    code, out, _ = run("eval", "--grid", "400:500:5", "R[1]")
    assert out.splitlines()[0] == "square 1, grid 400:500:5 (21 samples)"


def test_check_small_run():
    code, out, _ = run("check", "--cases", "5", "--seed", "1")
    assert code == 0
    assert out.splitlines()[-1] == "0 failing properties"


def test_check_injected_fault_fails():
    code, out, _ = run("check", "--cases", "20", "--inject-fault", "mul-no-cross")
    assert code == 1
    assert "minimal input:" in out
