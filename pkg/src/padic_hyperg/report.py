"""Structured outcomes of identity checks and sweep aggregation."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    """Outcome of one identity check at one parameter point.

    Either both sides were computed and compared at the stated absolute
    precision, or the case was skipped for the stated reason (singular
    curve, excluded parameter, failed square condition).
    """
    identity_id: str
    p: int
    params: dict
    lhs: str = ""
    rhs: str = ""
    equal: bool = False
    precision: int = 0
    skip_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skip_reason is not None

    @property
    def passed(self) -> bool:
        return self.equal and not self.skipped

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "params": dict(sorted(self.params.items())),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "precision": self.precision,
            "skip": self.skip_reason,
        }


@dataclass
class SweepReport:
    identity_id: str
    p_min: int
    p_max: int
    param_policy: str
    precision_n: int
    environment: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(1 for v in self.verdicts if not v.skipped)

    @property
    def passed(self) -> int:
        return sum(1 for v in self.verdicts if v.passed)

    @property
    def failed(self) -> int:
        return sum(1 for v in self.verdicts if not v.skipped and not v.equal)

    @property
    def skipped(self) -> int:
        return sum(1 for v in self.verdicts if v.skipped)

    @property
    def failures(self) -> list:
        return [v for v in self.verdicts if not v.skipped and not v.equal]

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "config": {
                "p_min": self.p_min,
                "p_max": self.p_max,
                "param_policy": self.param_policy,
                "precision": self.precision_n,
                **dict(sorted(self.environment.items())),
            },
            "results": [v.to_dict() for v in self.verdicts],
            "summary": {
                "checked": self.checked,
                "passed": self.passed,
                "failed": self.failed,
                "skipped": self.skipped,
            },
        }
