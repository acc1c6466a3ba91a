import json

import pytest

from cgv.cli import main
from cgv.reportlib import (CONFIRMED, INDETERMINATE, REFUTED, RunConfig,
                           make_check, parse_json_report, render_json,
                           render_text, summarize)
from cgv.claims import Claim
from cgv.suites import SUITE_NAMES, run_suite


def test_make_check_agreement_rules():
    c = make_check("x", "4", Claim("4", "quote"))
    assert c.agreement == CONFIRMED
    c = make_check("x", "5", Claim("4", "quote"))
    assert c.agreement == REFUTED
    c = make_check("x", "4", None)
    assert c.agreement == INDETERMINATE
    c = make_check("x", "4", Claim(None, "quote"))
    assert c.agreement == INDETERMINATE
    c = make_check("x", "4", Claim("4", "quote"), ambiguous=True)
    assert c.agreement == INDETERMINATE


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(survey=0)
    with pytest.raises(ValueError):
        RunConfig(bound=0)
    with pytest.raises(ValueError):
        RunConfig(m_expr="X + 1")
    cfg = RunConfig(m_expr="r^2")
    assert cfg.m_value is not None and not cfg.m_defaulted()


def test_reports_byte_identical():
    cfg = RunConfig(m_expr="1")
    for name in ("sigma", "divisors", "base-locus"):
        a = render_text(name, cfg, run_suite(name, cfg))
        b = render_text(name, cfg, run_suite(name, cfg))
        assert a == b
        ja = render_json(name, cfg, run_suite(name, cfg))
        jb = render_json(name, cfg, run_suite(name, cfg))
        assert ja == jb


def test_json_roundtrip_and_schema():
    cfg = RunConfig()
    checks = run_suite("divisors", cfg)
    text = render_json("divisors", cfg, checks)
    doc = parse_json_report(text)
    assert doc["suite"] == "divisors"
    assert set(doc["config"]) == {"m", "seed", "survey", "bound"}
    assert doc["config"]["seed"] == "1"
    for entry in doc["checks"]:
        assert set(entry) == {"check-id", "computed", "paper-claim", "agreement", "notes", "elapsed"}
        assert entry["elapsed"] == "0"
        assert entry["agreement"] in (CONFIRMED, REFUTED, INDETERMINATE)
    assert set(doc["summary"]) == {"confirmed", "refuted", "indeterminate", "errors"}
    for v in doc["summary"].values():
        assert isinstance(v, str)
    # round trip: serialize the parsed document again
    assert json.loads(json.dumps(doc)) == doc


def test_summary_counts():
    checks = [
        make_check("a", "1", Claim("1", "q")),
        make_check("b", "2", Claim("1", "q")),
        make_check("c", "3"),
    ]
    s = summarize(checks)
    assert s == {"confirmed": 1, "refuted": 1, "indeterminate": 1, "errors": 0}


def test_divisor_suite_confirms_the_four_multiplicities():
    checks = run_suite("divisors", RunConfig())
    mult_checks = [c for c in checks if c.check_id.startswith("divisors/exceptional-multiplicity/")]
    assert len(mult_checks) == 4
    assert all(c.agreement == CONFIRMED for c in mult_checks)


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suite("nonsense", RunConfig())


def test_every_claimed_check_carries_a_citation():
    cfg = RunConfig(m_expr="1", survey=5)
    for c in run_suite("all", cfg):
        if c.claim_value is not None:
            assert c.citation


def test_full_json_roundtrip():
    cfg = RunConfig(m_expr="1", survey=5)
    checks = run_suite("all", cfg)
    doc = parse_json_report(render_json("all", cfg, checks))
    assert len(doc["checks"]) == len(checks)
    assert doc["config"]["m"] == "1"
    assert json.loads(json.dumps(doc)) == doc


def test_cli_evalves(capsys):
    assert main(["eval", "r^3 + r^2"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["eval", "9*r^6-12*r^5+4*r^4+6*r^3+11*r^2-25*r+10"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["eval", "(3*r-2)*(r+1)"]) == 0
    assert capsys.readouterr().out.strip() == "-2 + r + 3*r^2"
    assert main(["eval", "X + 2*Y"]) == 0
    assert capsys.readouterr().out.strip() == "X + 2*Y"


def test_cli_eval_error(capsys):
    assert main(["eval", "X + "]) == 2
    err = capsys.readouterr().err
    assert "offset 4" in err


def test_cli_usage_errors(capsys):
    assert main(["check", "no-such-suite"]) == 2
    capsys.readouterr()
    assert main(["check", "sigma", "--m", "X+1"]) == 2
    err = capsys.readouterr().err
    assert "configuration error" in err


def test_cli_check_runs_and_writes(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["check", "divisors", "--format", "json", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["errors"] == "0"
    rc = main(["check", "sigma"])
    assert rc == 0
    text = capsys.readouterr().out
    assert "suite: sigma" in text and "summary:" in text


def test_cli_full_run_deterministic(capsys):
    assert main(["check", "all", "--m", "1", "--seed", "3", "--survey", "10"]) == 0
    first = capsys.readouterr().out
    assert main(["check", "all", "--m", "1", "--seed", "3", "--survey", "10"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "refuted" in first


def test_suite_names_stable():
    assert SUITE_NAMES == ("sigma", "cubics", "base-locus", "quadric-independence",
                           "tangent", "divisors", "genus", "pencil", "all")
