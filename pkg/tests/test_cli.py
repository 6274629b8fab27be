import copy
import json

import pytest

from siegelz.cli import RunConfig, SUITES, build_parser, main, run


def test_run_config_validation():
    RunConfig().validate()
    with pytest.raises(ValueError):
        RunConfig(prime_list=[4]).validate()
    with pytest.raises(ValueError):
        RunConfig(prime_list=[17]).validate()
    with pytest.raises(ValueError):
        RunConfig(series_order=0).validate()
    with pytest.raises(ValueError):
        RunConfig(numeric_tol=-1).validate()
    with pytest.raises(ValueError):
        RunConfig(selected_suites=["nope"]).validate()


def test_usage_error_exit_code():
    assert main(["counts", "--primes", "4,6"]) == 2
    assert main(["bogus-suite"]) == 2


def test_counts_suite_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["counts", "--primes", "3,5", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == "siegelz-report/1"
    assert payload["config"]["primes"] == [3, 5]
    statuses = {r["status"] for r in payload["reports"]}
    assert statuses == {"pass"}
    echoed = [r for r in payload["reports"] if r["claim"] == "|F(F_3)| = 16"]
    assert echoed and echoed[0]["details"]["count"] == 16
    text = capsys.readouterr().out
    assert "0 failed" in text


def test_orbits_suite_exit_one():
    # the orbit-membership overclaim is reported as an honest failure
    assert main(["orbits"]) == 1


def test_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("SIEGELZ_PRIMES", "3")
    monkeypatch.setenv("SIEGELZ_SUITE", "lefschetz")
    out = tmp_path / "r.json"
    code = main(["--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["primes"] == [3]
    assert all(r["suite"] == "lefschetz" for r in payload["reports"])


def test_reports_deterministic():
    cfg = RunConfig(prime_list=[3, 5], selected_suites=["counts", "lefschetz"])
    reports1, code1 = run(copy.deepcopy(cfg))
    reports2, code2 = run(copy.deepcopy(cfg))
    assert code1 == code2 == 0

    def strip(rs):
        return [(r.suite, r.claim, r.status, r.residual, r.details) for r in rs]

    assert strip(reports1) == strip(reports2)


def test_every_suite_is_registered():
    from siegelz.cli import SUITE_RUNNERS

    assert set(SUITES) == set(SUITE_RUNNERS)


def test_parser_defaults():
    args = build_parser().parse_args([])
    assert args.order == 200
    assert args.tol == 1e-8
