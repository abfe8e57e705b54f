from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one verification: a name, a verdict, and supporting facts."""

    name: str
    ok: bool
    message: str = ""
    data: dict[str, Any] = field(default_factory=dict)
    skipped: bool = False

    @classmethod
    def skip(cls, name: str, reason: str) -> Report:
        return cls(name, True, reason, skipped=True)

    def __bool__(self) -> bool:
        return self.ok

    def line(self) -> str:
        verdict = "skip" if self.skipped else "pass" if self.ok else "FAIL"
        if self.message:
            return f"{self.name}: {verdict} ({self.message})"
        return f"{self.name}: {verdict}"
