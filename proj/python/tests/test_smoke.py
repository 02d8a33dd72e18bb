import json
from pathlib import Path

import pytest

import halg

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_pair3_fixture_passes():
    report = halg.check(FIXTURES / "pair3.spec")
    assert report["schema"] == "halg-report/1"
    assert report["summary"]["exit_code"] == 0
    assert report["summary"]["fail"] == 0


def test_broken_antipode_reports_documented_failures():
    spec = json.loads((FIXTURES / "broken_antipode.spec").read_text())
    report = halg.check(FIXTURES / "broken_antipode.spec", serial=True)
    failing = {i["id"] for s in report["suites"] for i in s["items"] if i["status"] == "fail"}
    assert failing == set(spec["documented_failures"])
    assert report["summary"]["exit_code"] == 1


def test_construct_round_trips_through_check_text():
    h = halg.construct("pair:2")
    assert len(h["H"]["labels"]) == 4
    spec = {
        "scalars": "gaussian-rational",
        "structures": [{"id": "G", "hopf_algebroid": h}],
        "checks": [{"suite": "hopf", "target": "G"}, {"suite": "star", "target": "G"}],
    }
    assert halg.check_text(json.dumps(spec))["summary"]["exit_code"] == 0


def test_invariants_and_rank():
    inv = halg.invariants(FIXTURES / "calculi.spec", "groupoid-forms")
    assert [d["dim"] for d in inv["degrees"]][:2] == [1, 1]
    assert halg.rank([["1", "i"], ["-i", "1"]]) == 1
    assert halg.rank([["1/2", "0"], ["0", "1+1*i"]]) == 2
    assert "toykahler" in halg.presets()


def test_format_errors_raise_value_error():
    with pytest.raises(halg.FormatError):
        halg.construct("mystery:3")
    with pytest.raises(ValueError):
        halg.check_text("{\n  \"scalars\": ,\n}")
