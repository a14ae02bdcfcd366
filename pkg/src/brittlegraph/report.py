"""Verification reports and their JSON schema."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any, Iterator

import jsonschema

STATUSES = ("pass", "fail", "inconclusive")

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "brittlegraph verification report",
    "type": "object",
    "required": ["claim", "params", "status", "value", "partition", "worst_union", "witness", "elapsed_ms"],
    "properties": {
        "claim": {"type": "string", "minLength": 1},
        "params": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "value": {},
        "partition": {"type": ["array", "null"], "items": {"type": "array"}},
        "worst_union": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 0}},
        "witness": {},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "detail": {"type": "string"},
    },
    "allOf": [
        {
            "if": {"properties": {"status": {"const": "pass"}}},
            "then": {"properties": {"witness": {"not": {"type": "null"}}}},
        }
    ],
}


@dataclass
class Report:
    claim: str
    params: dict[str, Any]
    status: str = "pass"
    value: Any = None
    partition: list[list] | None = None
    worst_union: list[int] | None = None
    witness: Any = None
    elapsed_ms: float = 0.0
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return json.loads(json.dumps(asdict(self), default=_jsonable))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x, key=repr) if isinstance(x, (set, frozenset)) else list(x)
    return str(x)


def validate_report(data: dict[str, Any]) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``data`` is a well-formed report."""
    jsonschema.validate(data, REPORT_SCHEMA)


@dataclass
class Stopwatch:
    elapsed_ms: float = field(default=0.0)


@contextmanager
def stopwatch() -> Iterator[Stopwatch]:
    sw = Stopwatch()
    start = time.perf_counter()
    try:
        yield sw
    finally:
        sw.elapsed_ms = (time.perf_counter() - start) * 1000.0
