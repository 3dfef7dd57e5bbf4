import pytest

from sytpoly import run_checks
from sytpoly.verify import REGISTRY, VerificationReport


def test_full_run_at_default_bound():
    reports = run_checks(8)
    assert len(reports) == len(REGISTRY)
    for rep in reports:
        assert rep.passed, f"{rep.check_name}: {rep.failures[:3]}"
        assert rep.cases_run > 0


def test_report_serialization():
    rep = VerificationReport("demo", (1, 4))
    rep.case(True, partition=(2, 1))
    assert rep.passed
    payload = rep.to_json_dict()
    assert payload["status"] == "passed"
    assert payload["cases_run"] == 1

    rep.case(False, partition=(3,), expected=1, actual=2)
    assert not rep.passed
    assert rep.to_json_dict()["status"] == "failed"
    assert rep.failures == [{"partition": (3,), "expected": 1, "actual": 2}]


def test_run_checks_rejects_bad_input():
    with pytest.raises(ValueError):
        run_checks(0)
    with pytest.raises(KeyError):
        run_checks(4, ["not_a_check"])


def test_filtered_run():
    (rep,) = run_checks(5, ["thm_coeffSYT"])
    assert rep.check_name == "thm_coeffSYT"
    assert rep.passed
