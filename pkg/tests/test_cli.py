"""CLI exit codes, JSON report determinism, and file outputs."""

from __future__ import annotations

import json
from fractions import Fraction

from beltrami_jets import HomogeneousPolynomial, SigmaTriple, TruncatedFactor
from beltrami_jets.cli import main
from beltrami_jets.golden import SuiteConfig, run_suite
from beltrami_jets.polynomials import poly_to_json

P = HomogeneousPolynomial


def _write_factor(path, factor):
    path.write_text(json.dumps(factor.to_json()), encoding="utf-8")
    return str(path)


def _counterexample():
    return TruncatedFactor.diagonal(1, SigmaTriple(1, 1, -1), {3: P(3, {(1, 1, 1): 2})})


def test_classify_resonant(capsys):
    assert main(["classify", "--sigma", "1,1,-4", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["command"] == "classify"
    assert report["results"]["risky_degrees"] == [4]
    assert report["results"]["resonant_pair_degree"] == 4
    assert report["inputs"]["sigma"] == ["1", "1", "-4"]


def test_classify_same_sign(capsys):
    assert main(["classify", "--sigma", "1,2,3", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["risky_degrees"] == []


def test_classify_degenerate_sigma_exits_2(capsys):
    assert main(["classify", "--sigma", "0,1,2"]) == 2
    assert "degenerate Hessian" in capsys.readouterr().err


def test_classify_unparsable_sigma_exits_2(capsys):
    assert main(["classify", "--sigma", "1,2"]) == 2
    assert main(["classify", "--sigma", "a,b,c"]) == 2


def test_kernel_resonant_dimension(capsys):
    assert main(["kernel", "-i", "3", "--sigma", "1,1,-3", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["dimension"] == 2
    assert len(report["results"]["basis"]) == 2
    for field in report["results"]["basis"]:
        assert field["degree"] == 3


def test_kernel_nonresonant_dimensions(capsys):
    assert main(["kernel", "-i", "3", "--sigma", "1,1,-2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["dimension"] == 0
    assert main(["kernel", "-i", "1", "--sigma", "1,-1,7", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["dimension"] == 1


def test_kernel_degree_cap(capsys):
    assert main(["kernel", "-i", "17", "--sigma", "1,2,3"]) == 2
    assert "cap" in capsys.readouterr().err
    assert main(["kernel", "-i", "17", "--sigma", "1,2,3", "--cap", "18", "--json"]) == 0
    capsys.readouterr()


def test_report_determinism(capsys):
    assert main(["kernel", "-i", "2", "--sigma", "1,1,-2", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["kernel", "-i", "2", "--sigma", "1,1,-2", "--json"]) == 0
    second = capsys.readouterr().out
    assert first.encode() == second.encode()


def test_out_file_matches_stdout(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["classify", "--sigma", "1,1,-5", "--json", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert out.read_text(encoding="utf-8") == stdout


def test_cascade_trivial_factor_exits_0(tmp_path, capsys):
    factor = TruncatedFactor.diagonal(1, SigmaTriple(1, 2, 3))
    path = _write_factor(tmp_path / "f.json", factor)
    assert main(["cascade", "--factor", path, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["verdict"] == "TrivialOnly"


def test_cascade_counterexample_exits_1(tmp_path, capsys):
    path = _write_factor(tmp_path / "f.json", _counterexample())
    report_path = tmp_path / "out.json"
    assert main(["cascade", "--factor", path, "--json", "--report", str(report_path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["verdict"] == "ObstructionInconclusive"
    assert json.loads(report_path.read_text(encoding="utf-8")) == report


def test_cascade_quartic_factor_exits_0(tmp_path, capsys):
    f4 = P(4, {(2, 2, 0): 1, (0, 0, 4): Fraction(1, 3)})
    factor = TruncatedFactor.diagonal(0, SigmaTriple(1, 1, -3), {4: f4})
    path = _write_factor(tmp_path / "f.json", factor)
    assert main(["cascade", "--factor", path, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["verdict"] == "TrivialOnly"
    assert report["results"]["risky"][0]["degree"] == 3


def test_cascade_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["cascade", "--factor", str(path)]) == 2
    assert "bad factor file" in capsys.readouterr().err


def test_cascade_window_over_degree_cap_exits_2(tmp_path, capsys):
    factor = TruncatedFactor.diagonal(0, SigmaTriple(1, 1, -15))
    path = _write_factor(tmp_path / "f.json", factor)
    assert main(["cascade", "--factor", path]) == 2
    assert "cap" in capsys.readouterr().err
    assert main(["cascade", "--factor", path, "--cap", "18", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["verdict"] == "TrivialOnly"
    assert report["results"]["risky"][0]["degree"] == 15


def test_cascade_non_diagonal_quadric_exits_2(tmp_path, capsys):
    data = {
        "f0": "1",
        "components": {"2": poly_to_json(P(2, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 0, 2): -1}))},
    }
    path = tmp_path / "f.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert main(["cascade", "--factor", str(path)]) == 2
    assert "diagonal Hessian" in capsys.readouterr().err


def test_cascade_eps_requires_cubic(tmp_path, capsys):
    factor = TruncatedFactor.diagonal(1, SigmaTriple(1, 1, -1))
    path = _write_factor(tmp_path / "f.json", factor)
    assert main(["cascade", "--factor", path, "--eps", "1/10"]) == 2
    capsys.readouterr()
    path2 = _write_factor(tmp_path / "g.json", _counterexample())
    assert main(["cascade", "--factor", path2, "--eps", "1/10", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["eps"] == "1/10"
    assert report["results"]["verdict"] == "TrivialOnly"


def test_verify_harmonic(capsys):
    assert main(["verify-harmonic", "--max-degree", "6", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["results"] == {
        "max_degree": 6,
        "planar_ok": True,
        "lifted_ok": True,
        "span_ok": True,
    }


def test_verify_bessel(capsys):
    assert main(["verify-bessel", "--order", "12", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report["results"]) == {
        "order",
        "recurrence_ok",
        "bessel_match_ok",
        "cartesian_ok",
    }
    assert all(report["results"][k] for k in ("recurrence_ok", "bessel_match_ok", "cartesian_ok"))
    assert main(["verify-bessel", "--order", "3"]) == 2
    capsys.readouterr()


def test_suite_runs_with_small_config(tmp_path, capsys):
    config = {
        "resonance_table": [[3, "1,1,-3"]],
        "same_sign_samples": 2,
        "mixed_samples": 2,
        "sample_max_degree": 3,
        "window_zero_range": [3],
        "window_nonzero_range": [3],
        "series_order": 8,
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    assert main(["verify-paper-suite", "--config", str(path), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    checks = report["results"]["checks"]
    assert len(checks) >= 10
    assert all(c["passed"] for c in checks)
    assert report["results"]["all_passed"] is True


def test_suite_fault_injection_names_the_failure(tmp_path, capsys):
    config = {
        "resonance_table": [[3, "1,1,-3"], [4, "1,2,-4"]],
        "same_sign_samples": 2,
        "mixed_samples": 2,
        "sample_max_degree": 3,
        "window_zero_range": [3],
        "window_nonzero_range": [3],
        "series_order": 8,
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    assert main(["verify-paper-suite", "--config", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL lifted_fields_span_resonant_kernels" in out


def test_suite_fault_injection_via_library():
    cfg = SuiteConfig(
        resonance_table=((3, "1,1,-3"), (4, "1,2,-4")),
        same_sign_samples=2,
        mixed_samples=2,
        sample_max_degree=3,
        window_zero_range=(3,),
        window_nonzero_range=(3,),
        series_order=8,
    )
    results = run_suite(cfg)
    failing = [r.name for r in results if not r.passed]
    assert failing == ["lifted_fields_span_resonant_kernels"]
