"""Verification outcome records shared by every checking routine."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckReport:
    name: str
    status: str
    truncation: Optional[int] = None
    elapsed_ms: float = 0.0
    witness: Optional[str] = None
    paper_anchor: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["witness"] is None:
            del d["witness"]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            name=d["name"],
            status=d["status"],
            truncation=d.get("truncation"),
            elapsed_ms=d.get("elapsed_ms", 0.0),
            witness=d.get("witness"),
            paper_anchor=d.get("paper_anchor", ""),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        head = f"[{self.status.upper():7s}] {self.name}"
        if self.truncation is not None:
            head += f" (N={self.truncation})"
        if self.witness and self.status == FAIL:
            head += f"\n          witness: {self.witness}"
        return head


def passed(name, anchor="", truncation=None) -> CheckReport:
    return CheckReport(name, PASS, truncation, paper_anchor=anchor)


def failed(name, witness, anchor="", truncation=None) -> CheckReport:
    return CheckReport(name, FAIL, truncation, witness=str(witness), paper_anchor=anchor)
