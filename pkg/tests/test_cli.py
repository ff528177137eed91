import json
import subprocess
import sys

import pytest

from waci.cli import InputError, format_presentation, main, parse_presentation_text
from waci.families import eisenbud_levine, split_family, SplitParams


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = call(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, args in {
        "el3": ["el", "--n", "3"],
        "split21": ["split", "--n", "2", "--k", "1", "--weights", "2,2", "--exponents", "2,2"],
        "a3": ["truncated", "--n", "3", "--k", "3"],
        "cp2": ["truncated", "--n", "3", "--k", "1"],
    }.items():
        path = tmp_path / f"{name}.waci"
        assert call(capsys, "family", *args, "--out", str(path))[0] == 0
        paths[name] = str(path)
    return paths


def test_family_round_trip(files):
    text = open(files["el3"]).read()
    p = parse_presentation_text(text)
    assert p.relations == eisenbud_levine(3).relations
    assert format_presentation(p) == text
    q = split_family(SplitParams(2, 1, (2, 2), (2, 2)))
    assert parse_presentation_text(open(files["split21"]).read()).relations == q.relations


def test_analyze_el3(files, capsys):
    code, r = report(capsys, "analyze", files["el3"])
    res = r["results"]
    assert code == 0 and r["command"] == "analyze"
    assert res["is_waci"] and res["simple"]
    assert res["formal_dimension"] == 8 and res["signature"] == 4
    assert res["pi1"] == {"3": 2, "5": 1}


def test_reports_are_deterministic(files, capsys):
    a = call(capsys, "analyze", files["el3"], "--json")[1]
    b = call(capsys, "analyze", files["el3"], "--json")[1]
    assert a == b and "timing" not in a
    code, out, _ = call(capsys, "analyze", files["el3"], "--json", "--timing")
    assert "timing_seconds" in json.loads(out)


def test_exact_rationals_are_strings(files, capsys):
    code, r = report(capsys, "smooth", files["el3"])
    cand = r["results"]["candidates"][1]
    assert cand["L_value"] == "4" and isinstance(cand["pontrjagin_numbers"]["p1^2"], str)


def test_gates_and_exit_codes(files, capsys):
    assert report(capsys, "simple", files["el3"])[0] == 0
    assert report(capsys, "pda", files["split21"])[0] == 0
    code, r = report(capsys, "smooth", files["a3"])
    assert code == 1 and r["results"]["verdict"].startswith("obstructed")
    assert report(capsys, "smooth", files["cp2"])[0] == 0
    code, r = report(capsys, "signature", files["split21"])
    assert code == 0 and r["results"]["signature"] == 0 and r["results"]["integrality"]
    code, r = report(capsys, "derive", files["el3"], "--degree", "0")
    assert r["results"]["dim"] == 1


def test_geodesic_command(files, capsys):
    code, r = report(capsys, "geodesic", files["el3"], files["split21"])
    assert code == 0 and r["results"]["obstruction_applies"] and r["results"]["k"] == 4
    assert r["results"]["critical_dim"] == 1


def test_oracles(files, capsys):
    code, r = report(capsys, "oracle", "monomial-search", "--cycles", "4", "--bound", "10")
    assert code == 0 and r["results"]["verdict"] == "no unimodular pair found"
    code, r = report(capsys, "oracle", "derivation", files["el3"], "--degree", "2")
    assert code == 0 and r["results"]["agrees"]
    code, r = report(capsys, "oracle", "congruence", files["el3"])
    assert code == 0 and r["results"]["agrees"]


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.waci"
    bad.write_text("[ring]\nvariables = x\nweights = 2\n\n[relations]\nx^^3\n")
    code, _, err = call(capsys, "analyze", str(bad))
    assert code == 2 and "bad.waci:6" in err
    assert call(capsys, "analyze", str(tmp_path / "missing.waci"))[0] == 2
    assert call(capsys, "bogus")[0] == 2
    with pytest.raises(InputError):
        parse_presentation_text("x^2\n")
    with pytest.raises(InputError):
        parse_presentation_text("[ring]\nvariables = x\n[relations]\nx^2\n")


def test_console_entry_point(files):
    out = subprocess.run([sys.executable, "-m", "waci.cli", "pda", files["el3"], "--json"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["results"]["pda"]
