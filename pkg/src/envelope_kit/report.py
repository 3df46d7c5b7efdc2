"""Structured pass/fail records for the verification machinery."""

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class VerificationItem:
    name: str
    passed: bool
    witness: Optional[str] = None

    def as_dict(self):
        return {"name": self.name, "passed": self.passed,
                "witness": self.witness}


def combine(name, items) -> VerificationItem:
    """Fold several items into one; the first failure wins the witness."""
    for item in items:
        if not item.passed:
            return VerificationItem(name, False, item.witness or item.name)
    return VerificationItem(name, True)


@dataclass
class VerificationReport:
    instance_id: str
    items: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def add(self, item: VerificationItem, seconds: float = 0.0):
        if any(existing.name == item.name for existing in self.items):
            raise ValueError("duplicate check name: %s" % item.name)
        self.items.append(item)
        self.timings[item.name] = seconds

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.passed]

    def as_dict(self, include_timings=False):
        # timings are excluded by default so that serialized reports are
        # byte-identical across runs
        out = {
            "instance_id": self.instance_id,
            "all_passed": self.all_passed,
            "items": [item.as_dict() for item in self.items],
            "notes": dict(sorted(self.notes.items())),
        }
        if include_timings:
            out["timings"] = self.timings
        return out
