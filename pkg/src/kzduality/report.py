"""Pass/fail record shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def record(self, ok, witness=None):
        self.checked += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 10:
                self.failures.append(witness)
        return ok

    def merge(self, other):
        self.checked += other.checked
        self.passed = self.passed and other.passed
        self.failures.extend(other.failures[: max(0, 10 - len(self.failures))])
        return self

    def summary(self):
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.name} ({self.checked} checks)"

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": [str(w) for w in self.failures], "info": self.info}
