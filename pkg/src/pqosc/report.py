"""Named-residual reports shared by all verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckEntry:
    label: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


@dataclass(frozen=True)
class CheckReport:
    """Result of one verification: a list of labelled residuals.

    An entry passes iff residual <= tol.  `metadata` carries the context
    needed to reproduce the check (parameter echo, dimension, mode, ...)
    and must hold only JSON-representable values.
    """

    check: str
    entries: tuple[CheckEntry, ...]
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def max_residual(self) -> float:
        return max((e.residual for e in self.entries), default=0.0)

    def entry(self, label: str) -> CheckEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "results": [
                {"label": e.label, "residual": e.residual, "tol": e.tol, "pass": e.passed}
                for e in self.entries
            ],
            "metadata": self.metadata,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_dict(data: dict) -> "CheckReport":
        entries = tuple(
            CheckEntry(r["label"], float(r["residual"]), float(r["tol"]))
            for r in data["results"]
        )
        return CheckReport(data["check"], entries, dict(data.get("metadata", {})))

    @staticmethod
    def from_json(text: str) -> "CheckReport":
        return CheckReport.from_dict(json.loads(text))

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            status = "pass" if e.passed else "FAIL"
            out.append(f"{self.check}: {e.label}: residual={e.residual:.3e} tol={e.tol:.3e} {status}")
        return out
