import json
import re

import pytest

from qspectral.cli import run
from qspectral.graph import petersen, rook
from qspectral.graph6 import from_graph6, to_graph6


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_petersen(capsys):
    code, out, _ = call(capsys, "gen", "--family", "petersen")
    g = from_graph6(out.strip())
    assert code == 0 and g.n == 10 and set(g.degrees) == {3}


def test_bound(capsys):
    code, out, _ = call(capsys, "bound", "--formula", "thm1", "--delta", "6", "--k", "3", "--l", "4", "--n", "10")
    assert code == 0 and float(out) == pytest.approx(12.0)
    code, out, _ = call(capsys, "bound", "--formula", "lem4_bipartite", "--size-a", "9", "--size-b", "9",
                        "--s", "2", "--t", "2", "--k", "0", "--format", "json")
    assert json.loads(out)["value"] == pytest.approx(36.0)


def test_bound_hypothesis_is_usage_error(capsys):
    code, _, err = call(capsys, "bound", "--formula", "thm1", "--delta", "6", "--k", "3", "--l", "7", "--n", "10")
    assert code == 1 and "hypothesis" in err


def test_spectra_cycle(capsys):
    code, out, _ = call(capsys, "spectra", "--family", "cycle", "--n", "6", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0 and row["q"] == pytest.approx(4) and row["rho"] == pytest.approx(2)


def test_plain_numbers_have_nine_digits(capsys):
    _, out, _ = call(capsys, "spectra", "--family", "path", "--n", "3")
    nums = re.findall(r"\d+\.\d+", out)
    assert len(nums) == 4
    assert all(len(x.replace(".", "")) >= 10 for x in nums)


def test_check(capsys):
    code, out, _ = call(capsys, "check", "--graph6", to_graph6(rook(4)), "--k", "2", "--l", "2",
                        "--s", "3", "--t", "3", "--format", "json")
    (row,) = json.loads(out)
    assert row["srg"] == {"n": 16, "k_reg": 6, "a": 2, "c": 2}
    assert row["verdicts"]["thm1_applies"] and row["verdicts"]["K_3,3-free"]


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 1
    assert call(capsys, "spectra")[0] == 1  # no input source
    assert call(capsys, "spectra", "--family", "cycle", "--n", "5", "--graph6", "Dhc")[0] == 1
    assert call(capsys, "spectra", "--graph6", "D")[0] == 1
    assert call(capsys, "spectra", "--family", "cycle")[0] == 1
    assert call(capsys, "spectra", "--file", "/nonexistent/x.g6")[0] == 1
    assert call(capsys, "spectra", "--family", "cycle", "--n", "5", "--bogus")[0] == 1


def test_malformed_file_reports_line(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Dhc\nnope!\n")
    code, _, err = call(capsys, "spectra", "--file", str(f))
    assert code == 1 and ":2:" in err


def test_audit_exit_codes(capsys, tmp_path):
    # printed-form violation only: a finding, exit 0
    code, out, _ = call(capsys, "audit", "--family", "rook", "--m", "4", "--formulas", "lem1_printed,thm1",
                        "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["counts"]["lem1_printed"]["violation"] == 1
    # an impossible tolerance forces must-hold violations: exit 2
    code, _, _ = call(capsys, "audit", "--graph6", to_graph6(petersen()), "--formulas", "lem5",
                      "--violation-tol", "-1")
    assert code == 2


def test_audit_corpus_json_is_stable(capsys, tmp_path):
    f = tmp_path / "c.g6"
    f.write_text(f"{to_graph6(petersen())}\n\n{to_graph6(rook(4))}\nbad!\n")
    out_file = tmp_path / "r.json"
    args = ("audit", "--file", str(f), "--format", "json", "--no-timing")
    first = call(capsys, *args)
    second = call(capsys, *args)
    assert first[0] == 0 and first[1] == second[1]
    assert json.loads(first[1])["meta"]["skipped"][0]["line"] == 4
    call(capsys, *args, "--out", str(out_file))
    assert out_file.read_text() == first[1]


def test_audit_csv_exhaustive(capsys):
    code, out, _ = call(capsys, "audit", "--n", "4", "--format", "csv")
    assert code == 0 and out.startswith("graph6,formula,params,bound,q_or_rho,residual,verdict,srg")


def test_search(capsys):
    args = ("search", "--n", "6", "--k", "1", "--l", "1", "--budget", "150", "--seed", "3", "--format", "json")
    a, b = call(capsys, *args), call(capsys, *args)
    assert a[0] == 0 and a[1] == b[1]
    assert from_graph6(json.loads(a[1])["graph6"]).n == 6
