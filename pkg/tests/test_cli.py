import json
import subprocess
import sys

import pytest

from conftest import printed_generator
from wgcs.cli import main
from wgcs.polyalg import from_coeff_text, from_human
from wgcs.verify import AnalysisReport, all_checks, analyze, checks_pass, sweep
from wgcs.cyclotomy import whiteman


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_first_printed_example(capsys):
    code, out, _ = run(capsys, "analyze", "--n1", "7", "--n2", "31", "--q", "2", "--format", "json", "--trials", "50")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert doc["dimension"] == 121
    assert from_human(doc["generator"]["human"], 2) == printed_generator(2, 7, 31)
    assert from_coeff_text(doc["generator"]["coeffs"], 2) == printed_generator(2, 7, 31)
    assert doc["distanceInfo"]["lower"] == 3
    assert all(ch["passed"] is not False for ch in doc["theoremChecks"])


def test_analyze_spectrum(capsys):
    code, out, _ = run(capsys, "analyze", "--n1", "7", "--n2", "13", "--q", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc["acfSpectrum"]) == {"3/91", "-5/91", "-1/91"}
    assert doc["linearComplexity"] == {"gcd": 72, "bm": 72}
    assert doc["distanceInfo"]["exact"] == 7


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--n1", "7", "--n2", "13", "--q", "3", "--no-distance")
    assert code == 0
    assert "PASS  partition" in out and "FAIL" not in out


@pytest.mark.parametrize(
    "argv,msg",
    [
        (["--n1", "7", "--n2", "11", "--q", "2"], "gcd(n1-1, n2-1)"),
        (["--n1", "7", "--n2", "13", "--q", "7"], "gcd(n, q)"),
        (["--n1", "7", "--n2", "13", "--q", "4"], "prime"),
        (["--n1", "7", "--n2", "13", "--q", "2", "--g-override", "2"], "primitive"),
    ],
)
def test_invalid_parameters(capsys, argv, msg):
    code, _, err = run(capsys, "analyze", *argv)
    assert code == 2 and msg in err


def test_g_override_changes_classes(capsys):
    code, out, _ = run(capsys, "analyze", "--n1", "7", "--n2", "13", "--q", "2", "--g-override", "24",
                       "--format", "json", "--no-distance")
    doc = json.loads(out)
    assert code == 0 and doc["params"]["g"] == 24
    assert doc["params"]["u"] != whiteman(7, 13).u


def test_report_round_trip():
    rep = analyze(7, 19, 3, trials=20)
    text = rep.to_json()
    assert AnalysisReport.from_json(text) == rep
    assert json.loads(text)["schema"] == 1
    with pytest.raises(ValueError):
        AnalysisReport.from_dict({**rep.to_dict(), "schema": 2})


def test_report_covers_every_check():
    rep = analyze(7, 31, 2, trials=10)
    ids = {ch["id"] for ch in rep.theoremChecks}
    want = {
        "partition", "coset-action", "difference-counts-on-P-Q", "minus-one-class", "cyclotomic-closed-forms",
        "acf-closed-form", "acf-difference-identity", "component-odd-vs-even", "component-P-vs-even",
        "component-odd-vs-QR", "component-P-vs-QR", "balance", "ord-mod-lcm", "field-axioms", "frobenius",
        "primitive-root-order", "poly-gcd", "lc-gcd-vs-bm", "minimal-poly-annihilates", "generator-divides-xn-1",
        "generator-case-table", "lambda-at-one", "q-in-d0-sufficient", "class-sums", "lambda-power-table",
        "lambda-frobenius", "lambda-quadratic", "d-poly-factorization", "class-poly-product",
        "shape-distance-single-1", "shape-distance-single-2", "shape-distance-double", "legendre-two",
    }
    assert ids == want


def test_failed_check_sets_exit_status(capsys, monkeypatch):
    from wgcs import verify
    from wgcs.verify import Check

    monkeypatch.setattr(verify, "legendre_two_check", lambda limit=1000: Check("legendre-two", False, "forced"))
    code, _, _ = run(capsys, "analyze", "--n1", "7", "--n2", "13", "--q", "2", "--no-distance")
    assert code == 1


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", "--n1", "7", "--n2", "13", "--q", "2", "--format", "json")
    assert code == 0 and json.loads(out)["distance"]["exact"] == 7
    code, out, _ = run(capsys, "mindist", "--n1", "7", "--n2", "13", "--q", "2", "--mode", "exhaustive",
                       "--format", "json")
    assert json.loads(out)["distance"]["exact"] == 7


def test_mindist_random_is_deterministic(capsys):
    argv = ["mindist", "--n1", "7", "--n2", "31", "--q", "2", "--trials", "100", "--seed", "42", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    d = json.loads(first)["distance"]
    assert d["lower"] == 3 and d["upper"] <= 31


def test_mindist_budget_error(capsys):
    code, _, err = run(capsys, "mindist", "--n1", "7", "--n2", "31", "--q", "2", "--mode", "exhaustive")
    assert code == 2 and "budget" in err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--n1", "7", "--n2", "13")
    line = out.strip()
    assert code == 0 and len(line) == 91 and line.count("1") == 48
    _, out, _ = run(capsys, "seq", "--n1", "7", "--n2", "13", "--kind", "2", "--format", "json")
    assert json.loads(out)["sequence"][13] == "0"


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "800", "--q", "2", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    keys = [(r["n1"], r["n2"], r["q"]) for r in doc["rows"]]
    assert keys == sorted(keys) and len(keys) > 0
    assert all(r["passed"] for r in doc["rows"])


def test_sweep_empty(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "50", "--format", "json")
    assert code == 0 and json.loads(out)["rows"] == []


def test_sweep_parallel_matches_serial():
    pairs = [(7, 13), (7, 19), (7, 31)]
    assert sweep(pairs, [2, 3], jobs=2) == sweep(pairs, [2, 3], jobs=1)


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--pairs", "7,13", "7,19", "--q", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert len(doc["results"]) == 2


def test_checks_pass_helper():
    assert checks_pass(all_checks(whiteman(7, 13), 2))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wgcs", "seq", "--n1", "7", "--n2", "13"], capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.strip()) == 91
