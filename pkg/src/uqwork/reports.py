"""Check results and the versioned JSON report format."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

__all__ = ["CheckResult", "Report", "PASS", "FAIL", "INCONCLUSIVE", "status_of", "timed"]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
SCHEMA_VERSION = 1


def status_of(ok) -> str:
    if ok is None:
        return INCONCLUSIVE
    return PASS if ok else FAIL


@dataclass
class CheckResult:
    check: str
    status: str
    params: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    anchor: str = ""
    data: dict = field(default_factory=dict)
    timing: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self, with_timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "anchor": self.anchor,
            "params": _jsonable(self.params),
            "status": self.status,
            "witnesses": [str(w) for w in self.witnesses],
        }
        if self.data:
            out["data"] = _jsonable(self.data)
        if with_timing:
            out["timing"] = round(self.timing, 3)
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return round(x, 6)
    return str(x)


def timed(fn, *args, **kwargs) -> CheckResult:
    t = time.perf_counter()
    res = fn(*args, **kwargs)
    res.timing = time.perf_counter() - t
    return res


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)

    def add(self, case: CheckResult) -> None:
        self.cases.append(case)

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.cases}
        if FAIL in statuses:
            return 1
        if INCONCLUSIVE in statuses:
            return 2
        return 0

    def to_json(self, with_timing: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "config": _jsonable(self.config),
            "cases": [c.to_json(with_timing) for c in self.cases],
            "summary": {
                s: sum(1 for c in self.cases if c.status == s) for s in (PASS, FAIL, INCONCLUSIVE)
            },
        }

    def dumps(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_json(with_timing), indent=2, sort_keys=True) + "\n"

    def lines(self) -> list[str]:
        return [f"{c.status.upper():13s} {c.check}  [{c.anchor}]" for c in self.cases]
