"""Structured results of verification runs and their text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import __version__

PASS = "pass"
FAIL = "fail"
REPORTED = "reported"

__all__ = ["Check", "Report", "PASS", "FAIL", "REPORTED", "ResidualNonZero"]


@dataclass
class Check:
    """One verified (or reported) identity."""

    name: str
    status: str
    asserted: bool = True
    residual: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL or not self.asserted

    def to_dict(self, timings=True):
        d = asdict(self)
        if not timings:
            d.pop("seconds")
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


class ResidualNonZero(AssertionError):
    def __init__(self, check: Check):
        super().__init__(f"{check.name}: {check.residual}")
        self.check = check


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def status(self) -> str:
        return PASS if all(c.passed for c in self.checks) else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        return self

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def residuals(self) -> dict:
        return {c.name: c.residual for c in self.checks if c.residual}

    def to_dict(self, timings=True) -> dict:
        return {
            "suite": self.suite,
            "status": self.status,
            "checks": [c.to_dict(timings) for c in self.checks],
            "residuals": self.residuals(),
            "config": self.config,
            "version": self.version,
        }

    def to_json(self, timings=True) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d) -> "Report":
        return cls(
            suite=d["suite"],
            checks=[Check.from_dict(c) for c in d["checks"]],
            config=d.get("config", {}),
            version=d.get("version", __version__),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self, timings=True) -> str:
        lines = [f"suite {self.suite}: {self.status.upper()}"]
        for c in self.checks:
            tag = c.status.upper() if c.asserted else f"{c.status.upper()} (not asserted)"
            t = f"  [{c.seconds:.2f}s]" if timings and c.seconds is not None else ""
            lines.append(f"  {tag:<22} {c.name}{t}")
            for k, v in sorted(c.info.items()):
                lines.append(f"      {k}: {_short(v)}")
            for k, v in sorted(c.residual.items()):
                lines.append(f"      residual.{k}: {_short(v)}")
        return "\n".join(lines)

    def raise_if_failed(self):
        for c in self.checks:
            if not c.passed:
                raise ResidualNonZero(c)


def _short(v, limit=400):
    s = v if isinstance(v, str) else json.dumps(v, sort_keys=True)
    return s if len(s) <= limit else s[: limit - 3] + "..."
