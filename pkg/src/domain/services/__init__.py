"""
Domain services package.

Pure functions over codes and formulas, grouped by concern, plus the two
orchestration services: FormulaService for text-level formula operations
and VerificationService for corpus checks and the self-test suite.
"""

from src.domain.services.formula_service import FormulaService
from src.domain.services.verification_service import VerificationService

__all__ = [
    "FormulaService",
    "VerificationService",
]
