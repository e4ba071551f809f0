#!/usr/bin/env python3
"""
Validation reports: one entry per checked condition with its residual and
the worst-case witness.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ConditionResult:
    name: str
    passed: bool
    residual: float = 0.0
    witness: Optional[Dict[str, Any]] = None
    note: Optional[str] = None

    def __post_init__(self):
        self.residual = max(0.0, float(self.residual))
        self.passed = bool(self.passed)

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"passed": self.passed, "residual": self.residual}
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass
class ValidationReport:
    subject: str
    conditions: List[ConditionResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, residual: float = 0.0,
            witness: Optional[Dict[str, Any]] = None, note: Optional[str] = None) -> ConditionResult:
        result = ConditionResult(name, passed, residual, witness, note)
        self.conditions.append(result)
        return result

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> List[str]:
        return [c.name for c in self.conditions if not c.passed]

    def to_document(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "conditions": {c.name: c.to_document() for c in self.conditions},
        }
