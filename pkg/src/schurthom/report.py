from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Polynomial


class VerificationError(AssertionError):
    """An identity that must hold exactly did not."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: Polynomial
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.residual

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "residual_terms": len(self.residual)}


@dataclass(frozen=True)
class VerificationReport:
    r: int
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {"r": self.r, "checks": [c.to_json() for c in self.checks], "ms": round(self.ms, 3)}

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if c.passed else f"FAIL ({len(c.residual)} residual terms)"
            lines.append(f"r={self.r} {c.name:<12} {status}  [{c.ms:.1f} ms]")
        return "\n".join(lines)
