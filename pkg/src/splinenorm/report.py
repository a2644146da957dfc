"""Structured results for the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Failure:
    """One violated identity or inequality.

    ``index`` names the offending position (e.g. ``{"k": 7}`` or
    ``{"n": 5, "row": 2, "col": 3}``); ``lhs``/``rhs`` hold both sides.
    """

    identity: str
    index: dict[str, int]
    lhs: Any = None
    rhs: Any = None

    def describe(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.index.items())
        return f"{self.identity} failed at {where}: lhs={self.lhs} rhs={self.rhs}"


@dataclass
class CheckReport:
    name: str
    range: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def pass_count(self) -> int:
        return self.checked - len(self.failures)

    def record(self, ok: bool, identity: str, index: dict[str, int], lhs=None, rhs=None) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(Failure(identity, dict(index), lhs, rhs))

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<28} {self.range:<22} {self.pass_count}/{self.checked} {status}"

    def __bool__(self) -> bool:
        return self.passed
