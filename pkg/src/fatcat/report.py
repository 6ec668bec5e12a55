"""Verification reports.

Every law-checking routine returns a :class:`Report`: how many individual
checks ran, and a list of violations (empty on success).  Witnesses are
tuples of ids so reports stay deterministic and machine-comparable; the
human-readable context goes in ``details``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    details: str = ""

    def to_dict(self) -> dict:
        return {"law": self.law, "witness": list(self.witness), "details": self.details}


@dataclass
class Report:
    suite: str
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed_ms: float | None = None
    data: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple, details: str = "") -> None:
        self.violations.append(Violation(law, witness, details))

    def merge(self, other: "Report") -> None:
        self.checks += other.checks
        self.violations.extend(other.violations)
        if other.data:
            data = self.data or {}
            data.update(other.data)
            self.data = data

    def to_dict(self) -> dict:
        # Timing is deliberately left out: serialized reports must be
        # byte-identical across runs on the same input.
        out: dict = {
            "suite": self.suite,
            "checks": self.checks,
            "pass": self.ok,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.data is not None:
            out["data"] = self.data
        return out

    @staticmethod
    def from_dict(d: dict) -> "Report":
        rep = Report(suite=d["suite"], checks=d["checks"])
        for v in d.get("violations", []):
            rep.add(v["law"], tuple(v["witness"]), v.get("details", ""))
        rep.data = d.get("data")
        return rep
