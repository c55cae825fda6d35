"""Pass/fail bookkeeping shared by the verification routines."""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class InequalityCheck:
    """Outcome of one inequality lhs <= rhs (or a labelled predicate).

    margin is rhs - lhs, so nonnegative means the check held with room;
    passed applies the tolerance that was in force, recorded by the caller.
    """

    name: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    note: str = ""
    constants: Optional[Dict[str, object]] = None

    def to_dict(self) -> dict:
        d = {
            "check": self.name,
            "lhs": float(self.lhs),
            "rhs": float(self.rhs),
            "margin": float(self.margin),
            "pass": bool(self.passed),
        }
        if self.note:
            d["note"] = self.note
        if self.constants is not None:
            d["constants"] = {
                k: (v if isinstance(v, str) else float(v))
                for k, v in self.constants.items()
            }
        return d


@dataclass(frozen=True)
class VerificationReport:
    """Bundle of checks evaluated under common tolerances."""

    checks: Tuple[InequalityCheck, ...]
    tolerances: Dict[str, float] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> Tuple[InequalityCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_dict(self) -> dict:
        return {
            "all_pass": bool(self.all_pass),
            "tolerances": {k: float(v) for k, v in self.tolerances.items()},
            "checks": [c.to_dict() for c in self.checks],
        }
