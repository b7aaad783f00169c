"""Services layer: census persistence and claim verification."""

from .census_service import Census, CensusService
from .verification_service import CLAIMS, VerificationService

__all__ = ["Census", "CensusService", "CLAIMS", "VerificationService"]
