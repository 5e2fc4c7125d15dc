"""Pass/fail reports with counterexample witnesses.

Every checker in the package returns an AxiomReport: an ordered list of
named entries, each passed or failed.  A failed entry always carries a
witness dict (for map equations: the first differing basis column and
both side values; for set-level laws: the offending element tuple).
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    witness: dict | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed entry {self.name!r} must carry a witness")

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class AxiomReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def add(self, name: str, passed: bool, witness: dict | None = None) -> None:
        self.entries.append(CheckEntry(name, passed, witness))

    def append(self, entry: CheckEntry) -> None:
        self.entries.append(entry)

    def merge(self, other: "AxiomReport", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(CheckEntry(prefix + e.name, e.passed, e.witness))

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def has_entry(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_dict() for e in self.entries]}

    def __str__(self) -> str:
        lines = []
        for e in self.entries:
            if e.passed:
                lines.append(f"PASS  {e.name}")
            else:
                wit = " ".join(f"{k}={v}" for k, v in sorted(e.witness.items()))
                lines.append(f"FAIL  {e.name}  [{wit}]")
        return "\n".join(lines)
