"""Classification verdicts with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    THALIAN = "Thalian"
    NON_THALIAN = "NonThalian"
    DEGREE_PASS = "DegreeConditionPass"
    DEGREE_FAIL = "DegreeConditionFail"
    TOTALLY_REAL = "TotallyRealWitness"
    NOT_TOTALLY_REAL = "NotTotallyReal"


@dataclass(frozen=True)
class FieldClass:
    verdict: Verdict
    certificate: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.THALIAN, Verdict.DEGREE_PASS, Verdict.TOTALLY_REAL)

    def lines(self) -> list[str]:
        return [f"{self.verdict.value}"] + [f"  {k}: {v}" for k, v in self.certificate.items()]
