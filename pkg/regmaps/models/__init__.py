"""Pydantic models for regmaps."""

from .presentation import FamilyTag, Presentation, INVOLUTION_RELATORS
from .limits import EnumerationLimits
from .map_record import RegularMapRecord
from .census import CensusManifest, CensusMapRecord, LevelSummary
from .report import ReportStatus, VerificationReport

__all__ = [
    "FamilyTag",
    "Presentation",
    "INVOLUTION_RELATORS",
    "EnumerationLimits",
    "RegularMapRecord",
    "CensusManifest",
    "CensusMapRecord",
    "LevelSummary",
    "ReportStatus",
    "VerificationReport",
]
