"""Report record shared by the theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class TheoremReport:
    """Outcome of one checker on one instance.

    When `hypotheses_met` is False the check is vacuous and `holds` is
    None, never False: a violated hypothesis is not a counterexample.
    """

    theorem_id: str
    instance_id: str
    hypotheses_met: bool = True
    holds: bool | None = None
    witness: dict | None = None
    elapsed: float = 0.0

    @property
    def failed(self):
        return self.hypotheses_met and self.holds is False

    def to_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "instance_id": self.instance_id,
            "hypotheses_met": self.hypotheses_met,
            "holds": self.holds,
            "witness": self.witness,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    @classmethod
    def vacuous(cls, theorem_id, instance_id, reason=None):
        return cls(
            theorem_id=theorem_id,
            instance_id=instance_id,
            hypotheses_met=False,
            holds=None,
            witness={"reason": reason} if reason else None,
        )
