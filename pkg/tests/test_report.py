from __future__ import annotations

import time

import jsonschema
import pytest

from brittlegraph.report import Report, stopwatch, validate_report


def test_pass_report_validates():
    r = Report("demo", {"n": 3}, value=2, partition=[[0, 1], [2]], worst_union=[0], witness={"ok": True})
    validate_report(r.to_dict())
    assert r.passed


def test_pass_requires_witness():
    with pytest.raises(jsonschema.ValidationError):
        validate_report(Report("demo", {}).to_dict())


def test_fail_may_omit_witness():
    validate_report(Report("demo", {}, "fail").to_dict())


def test_bad_status():
    with pytest.raises(ValueError):
        Report("demo", {}, "maybe")
    data = Report("demo", {}, witness=1).to_dict()
    data["status"] = "maybe"
    with pytest.raises(jsonschema.ValidationError):
        validate_report(data)


def test_missing_key_is_rejected():
    data = Report("demo", {}, witness=1).to_dict()
    del data["elapsed_ms"]
    with pytest.raises(jsonschema.ValidationError):
        validate_report(data)


def test_json_serialises_tuples_and_sets():
    r = Report("demo", {"pair": (1, 2)}, witness={"s": frozenset({3, 1})})
    d = r.to_dict()
    assert d["params"]["pair"] == [1, 2] and d["witness"]["s"] == [1, 3]
    assert r.to_json().startswith("{")


def test_stopwatch_measures():
    with stopwatch() as sw:
        time.sleep(0.01)
    assert sw.elapsed_ms >= 5
