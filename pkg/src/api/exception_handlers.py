"""
API exception handlers.

Converts domain exceptions into JSON error responses of the form
{"error": {"type", "message", "details"}}.
"""

import logging
from typing import Any, Dict, Optional

from fastapi import Request, status
from fastapi.responses import JSONResponse

from src.domain.models.exceptions import (
    ArityMismatchException,
    DomainException,
    FormulaSyntaxException,
    InvalidCorpusDataException,
    MalformedFormulaException,
    MissingAssignmentException,
    NotAnOrdinalException,
    RepositoryException,
    ResourceGuardException,
    SetLiteralSyntaxException,
    SignatureMismatchException,
    UnknownSymbolException,
    describe,
)

logger = logging.getLogger(__name__)


def create_error_response(
    status_code: int,
    error_type: str,
    message: str,
    details: Optional[Dict[str, Any]] = None
) -> JSONResponse:
    """
    Create a standardized error response.

    Args:
        status_code: HTTP status code
        error_type: Type of error (e.g., 'FormulaSyntaxException')
        message: Human-readable error message
        details: Additional error details (optional)

    Returns:
        JSONResponse with standardized error format
    """
    content = {
        "error": {
            "type": error_type,
            "message": message,
            "details": details or {},
        }
    }

    return JSONResponse(
        status_code=status_code,
        content=content
    )


async def input_exception_handler(
    request: Request,
    exc: DomainException
) -> JSONResponse:
    """
    Handle errors in the submitted input: syntax, signatures, assignments.

    Returns:
        400 JSON response carrying the exception's attributes
    """
    logger.warning(f"Rejected input: {exc.message}")

    return create_error_response(
        status_code=status.HTTP_400_BAD_REQUEST,
        error_type=type(exc).__name__,
        message=exc.message,
        details=describe(exc)
    )


async def resource_guard_exception_handler(
    request: Request,
    exc: ResourceGuardException
) -> JSONResponse:
    """
    Handle bit-cap and range guards.

    Returns:
        422 JSON response carrying the guarded parameter and its limit
    """
    logger.warning(f"Resource guard: {exc.message}")

    return create_error_response(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        error_type=type(exc).__name__,
        message=exc.message,
        details=describe(exc)
    )


async def repository_exception_handler(
    request: Request,
    exc: DomainException
) -> JSONResponse:
    """
    Handle corpus loading failures.

    Returns:
        500 JSON response
    """
    logger.error(f"Repository error: {exc.message}")

    return create_error_response(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        error_type="RepositoryError",
        message="An error occurred while accessing the formula corpus"
    )


async def domain_exception_handler(
    request: Request,
    exc: DomainException
) -> JSONResponse:
    """
    Catch-all for domain exceptions without a specific handler.

    Returns:
        500 JSON response
    """
    logger.error(f"Domain error: {exc.message}")

    return create_error_response(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        error_type="DomainError",
        message="An unexpected error occurred"
    )


async def value_error_exception_handler(
    request: Request,
    exc: ValueError
) -> JSONResponse:
    logger.warning(f"Value error: {str(exc)}")

    return create_error_response(
        status_code=status.HTTP_400_BAD_REQUEST,
        error_type="ValidationError",
        message=str(exc)
    )


# Starlette resolves handlers along the exception's MRO, so subclasses
# listed here win over DomainException.
EXCEPTION_HANDLERS = {
    FormulaSyntaxException: input_exception_handler,
    SetLiteralSyntaxException: input_exception_handler,
    UnknownSymbolException: input_exception_handler,
    ArityMismatchException: input_exception_handler,
    SignatureMismatchException: input_exception_handler,
    MalformedFormulaException: input_exception_handler,
    MissingAssignmentException: input_exception_handler,
    NotAnOrdinalException: input_exception_handler,
    ResourceGuardException: resource_guard_exception_handler,
    RepositoryException: repository_exception_handler,
    InvalidCorpusDataException: repository_exception_handler,
    DomainException: domain_exception_handler,
    ValueError: value_error_exception_handler,
}
