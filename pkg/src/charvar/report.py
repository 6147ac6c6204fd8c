"""Pass/fail reports produced by the ``verify_*`` functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .polyring import NotDivisible, NotIntegral, Poly


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"name": self.name, "paper_anchor": self.anchor, "status": self.status, "detail": self.detail}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, anchor: str, passed: bool, detail: str = "") -> Check:
        if not anchor:
            raise ValueError(f"check {name!r} needs an anchor")
        check = Check(name, anchor, bool(passed), detail)
        self.checks.append(check)
        return check

    def expect_equal(self, name: str, anchor: str, got: Poly, want: Poly) -> Check:
        ok = got == want
        detail = "" if ok else f"got {got}; expected {want}; difference {got - want}"
        return self.add(name, anchor, ok, detail)

    def guarded(self, name: str, anchor: str, fn: Callable[[], bool | tuple[bool, str]]) -> Check:
        """Run ``fn`` and record its outcome; arithmetic alarms become failures."""
        try:
            out = fn()
        except (NotDivisible, NotIntegral, ArithmeticError) as exc:
            return self.add(name, anchor, False, f"{type(exc).__name__}: {exc}")
        if isinstance(out, tuple):
            return self.add(name, anchor, out[0], out[1])
        return self.add(name, anchor, out)

    def extend(self, other: "Report | Iterable[Check]") -> "Report":
        self.checks.extend(other.checks if isinstance(other, Report) else other)
        return self

    def __len__(self) -> int:
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)
