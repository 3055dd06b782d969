"""Structured pass/fail reporting shared by the suites and the CLI.

The JSON rendering is byte-deterministic: keys are sorted, separators are
fixed, and nothing time- or machine-dependent is serialized.  Wall-clock
timing lives on the object for callers that want it but never enters the
serialized form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check inside a suite."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class SuiteReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    wall_time: float = 0.0  # excluded from serialization on purpose

    def add(self, name: str, passed: bool, detail: str = "") -> CheckResult:
        r = CheckResult(name, passed, detail)
        self.results.append(r)
        return r

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def counts(self) -> tuple[int, int]:
        ok = sum(1 for r in self.results if r.passed)
        return ok, len(self.results)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ": "), indent=2)

    def format_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'} "
                 f"({self.counts[0]}/{self.counts[1]} checks)"]
        for r in self.results:
            mark = "ok" if r.passed else "FAIL"
            line = f"  [{mark}] {r.name}"
            if r.detail and not r.passed:
                line += f": {r.detail}"
            lines.append(line)
        return "\n".join(lines)
