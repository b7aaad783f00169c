from __future__ import annotations

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, model_validator


class ReportStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class VerificationReport(BaseModel):
    """Outcome of checking one claim at one parameter set."""

    claim_id: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    status: ReportStatus
    reason: Optional[str] = None
    desk_scale: bool = False
    evidence: Dict[str, Any] = Field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def _failures_carry_counterexample(self) -> "VerificationReport":
        if self.status is ReportStatus.FAIL and not self.counterexample:
            raise ValueError("a failed report must carry a counterexample")
        if self.status is ReportStatus.SKIPPED and not self.reason:
            raise ValueError("a skipped report must say why")
        return self

    @property
    def ok(self) -> bool:
        return self.status is not ReportStatus.FAIL

    @classmethod
    def passed(cls, claim_id: str, parameters: Dict[str, Any], **kwargs: Any) -> "VerificationReport":
        return cls(claim_id=claim_id, parameters=parameters, status=ReportStatus.PASS, **kwargs)

    @classmethod
    def failed(cls, claim_id: str, parameters: Dict[str, Any], counterexample: Dict[str, Any],
               **kwargs: Any) -> "VerificationReport":
        return cls(claim_id=claim_id, parameters=parameters, status=ReportStatus.FAIL,
                   counterexample=counterexample, **kwargs)

    @classmethod
    def skipped(cls, claim_id: str, parameters: Dict[str, Any], reason: str, **kwargs: Any) -> "VerificationReport":
        return cls(claim_id=claim_id, parameters=parameters, status=ReportStatus.SKIPPED, reason=reason, **kwargs)

    model_config = {
        "extra": "ignore",
        "use_enum_values": False,
    }
