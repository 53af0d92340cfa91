"""Clause-level verification reports shared by the checkers and verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Record:
    clause: str
    passed: bool
    subject: str = ""
    witness: Any = None


@dataclass
class Report:
    title: str
    records: list[Record] = field(default_factory=list)
    # evidence flags reported beside the records; not part of ``passed``
    flags: dict[str, bool] = field(default_factory=dict)

    def add(self, clause: str, passed: bool, subject: str = "", witness: Any = None) -> None:
        self.records.append(Record(clause, passed, subject, witness))

    @property
    def unital(self) -> bool | None:
        return self.flags.get("unital")

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self, clause: str | None = None) -> list[Record]:
        return [r for r in self.records if not r.passed and (clause is None or r.clause == clause)]

    def clauses(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.records:
            seen.setdefault(r.clause, None)
        return list(seen)

    def verdict(self, clause: str) -> bool:
        return all(r.passed for r in self.records if r.clause == clause)

    def to_json(self) -> dict:
        out = {
            "title": self.title,
            "passed": self.passed,
            "records": [
                {
                    "clause": r.clause,
                    "passed": r.passed,
                    "subject": r.subject,
                    "witness": _witness_json(r.witness),
                }
                for r in self.records
            ],
        }
        out.update(self.flags)
        return out

    def summary_lines(self) -> list[str]:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for clause in self.clauses():
            recs = [r for r in self.records if r.clause == clause]
            bad = [r for r in recs if not r.passed]
            lines.append(f"  [{'ok' if not bad else 'FAIL'}] {clause} ({len(recs) - len(bad)}/{len(recs)})")
            for r in bad:
                lines.append(f"      {r.subject}: {_witness_text(r.witness)}")
        for name, value in self.flags.items():
            lines.append(f"  {name}: {value}")
        return lines


def _witness_json(w):
    from .algebra import Element, element_to_json
    from .graphs import Path

    if w is None or isinstance(w, (bool, int, str)):
        return w
    if isinstance(w, Element):
        return element_to_json(w)
    if hasattr(w, "to_json"):
        return w.to_json()
    if isinstance(w, Path):
        return list(w.edges) if w.edges else {"vertex": w.start}
    if isinstance(w, dict):
        return {str(k): _witness_json(v) for k, v in w.items()}
    if isinstance(w, (list, tuple, set, frozenset)):
        return [_witness_json(v) for v in w]
    return str(w)


def _witness_text(w) -> str:
    from .graphs import Path

    if isinstance(w, Path):
        return str(w)
    if isinstance(w, dict):
        return ", ".join(f"{k}={_witness_text(v)}" for k, v in w.items())
    if isinstance(w, (list, tuple)):
        return "[" + ", ".join(_witness_text(v) for v in w) + "]"
    return repr(w) if not isinstance(w, str) else w
