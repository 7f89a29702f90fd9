"""Run reports: certificates plus timings, rendered as text or JSON."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .soluble import Certificate

__all__ = ["Certificate", "RunReport"]


@dataclass
class RunReport:
    command: str
    source: str
    pipeline: str = ""
    summary: dict = field(default_factory=dict)
    decomposition: dict | None = None
    certificates: list[Certificate] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.certificates)

    def add(self, name: str, passed: bool, witness=None, detail: str = "") -> None:
        self.certificates.append(Certificate(name, bool(passed), witness, detail))

    @contextmanager
    def stage(self, name: str):
        t = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - t, 4)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input": self.source,
            "pipeline": self.pipeline,
            "passed": self.passed,
            "error": self.error,
            "summary": self.summary,
            "decomposition": self.decomposition,
            "certificates": [c.to_dict() for c in self.certificates],
            "outputs": self.outputs,
            "timings": self.timings,
        }

    def render(self) -> str:
        lines = [f"{self.command} {self.source}" + (f"  [{self.pipeline}]" if self.pipeline else "")]
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        for c in self.certificates:
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  witness={c.witness}" if c.witness is not None and not c.passed else ""
            detail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  [{mark}] {c.name}{detail}{extra}")
        for p in self.outputs:
            lines.append(f"  wrote {p}")
        if self.error:
            lines.append(f"  error: {self.error}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)
