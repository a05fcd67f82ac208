"""
API dependency injection.

FastAPI dependencies providing the corpus repository and the services to
route handlers.
"""

import logging
from functools import lru_cache
from typing import Annotated

from fastapi import Depends

from src.config.settings import settings
from src.domain.services.formula_service import FormulaService
from src.domain.services.verification_service import VerificationService
from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)

logger = logging.getLogger(__name__)


@lru_cache()
def get_corpus_repository() -> JsonFormulaCorpusRepository:
    """
    Get the formula corpus repository (singleton).

    The repository is cached so the corpus file is read once.

    Returns:
        JsonFormulaCorpusRepository instance
    """
    logger.debug("Creating formula corpus repository instance")
    return JsonFormulaCorpusRepository(settings.corpus_file_absolute_path)


def get_verification_service(
    repository: Annotated[JsonFormulaCorpusRepository, Depends(get_corpus_repository)]
) -> VerificationService:
    """
    Get a verification service over the shared repository.

    Args:
        repository: Injected corpus repository

    Returns:
        VerificationService instance
    """
    return VerificationService(repository)


def get_formula_service() -> FormulaService:
    return FormulaService()


VerificationServiceDep = Annotated[VerificationService, Depends(get_verification_service)]
FormulaServiceDep = Annotated[FormulaService, Depends(get_formula_service)]
