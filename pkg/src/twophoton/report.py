"""Verification report records and rendering."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

__all__ = ["CheckResult", "timed_check", "summarize", "render_text",
           "report_json_dict", "canonical_json"]


@dataclass(frozen=True)
class CheckResult:
    """One verified identity: name, parameters, residual rendering, outcome.

    ``seconds`` is informational only and excluded from the determinism
    contract; everything else must be byte-stable for a fixed configuration.
    """

    name: str
    passed: bool
    residual: str = "0"
    params: dict = field(default_factory=dict)
    seconds: float = 0.0


def timed_check(name, fn, params=None):
    """Run fn() -> (passed, residual_text) and wrap it with wall time."""
    start = time.perf_counter()
    passed, residual = fn()
    elapsed = time.perf_counter() - start
    return CheckResult(name=name, passed=passed, residual=residual,
                       params=dict(params or {}), seconds=elapsed)


def summarize(entries):
    total = len(entries)
    passed = sum(1 for e in entries if e.passed)
    return {"total": total, "passed": passed, "failed": total - passed}


def render_text(entries):
    lines = []
    group = None
    for e in sorted(entries, key=lambda e: e.name):
        head = e.name.split("/", 1)[0]
        if head != group:
            group = head
            lines.append(f"-- {group} --")
        status = "PASS" if e.passed else "FAIL"
        line = f"{status}  {e.name}"
        if e.params:
            args = ", ".join(f"{k}={v}" for k, v in sorted(e.params.items()))
            line += f"  [{args}]"
        if not e.passed:
            line += f"  residual: {e.residual}"
        lines.append(line)
    s = summarize(entries)
    lines.append(f"summary: {s['passed']}/{s['total']} passed, {s['failed']} failed")
    return "\n".join(lines)


def report_json_dict(config, entries):
    """Stable report layout; timings live in their own key so golden
    comparisons can drop them wholesale."""
    ordered = sorted(entries, key=lambda e: e.name)
    return {
        "config": dict(config),
        "entries": [
            {"name": e.name, "params": dict(e.params),
             "residual": e.residual, "pass": e.passed}
            for e in ordered
        ],
        "summary": summarize(ordered),
        "timings": {e.name: e.seconds for e in ordered},
    }


def canonical_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
