"""
API route handlers.

REST endpoints over the codec, the formula services and the finite-stage
checks. Every check endpoint answers with a CheckReport; a failing check
is a 200 response with result 'fail', not an error.
"""

import logging
from typing import Any, Dict, List, Optional

from fastapi import APIRouter, Path, Query, status

from src.api.dependencies import FormulaServiceDep, VerificationServiceDep
from src.cli.set_literal import parse_set_literal
from src.domain.models.complexity import ComplexityLevel
from src.domain.models.corpus import CorpusFormula
from src.domain.models.exceptions import ArityMismatchException, UnknownSymbolException
from src.domain.models.formula_request import (
    CodeResponse,
    EncodeRequest,
    EvalRequest,
    EvaluationResponse,
    FormulaRequest,
    OperationResponse,
    TranslateRequest,
    TranslationResponse,
)
from src.domain.models.report import CheckReport
from src.domain.services import hf_core
from src.domain.services.axiom_checker import AXIOMS, check_axiom
from src.domain.services.roundtrip import ROUNDTRIP_KINDS, roundtrip_check
from src.domain.services.stages import check_stage_props, stage

logger = logging.getLogger(__name__)

router = APIRouter(
    responses={
        400: {
            "description": "Invalid input",
            "content": {
                "application/json": {
                    "example": {
                        "error": {
                            "type": "FormulaSyntaxException",
                            "message": "Expected a term at position 4",
                            "details": {"position": 4, "text": "x = "}
                        }
                    }
                }
            }
        },
        422: {"description": "Resource guard tripped (bit cap or range limit)"},
    }
)


def _code_response(code: int) -> CodeResponse:
    return CodeResponse(
        code=code,
        set=str(hf_core.decode(code)),
        size=hf_core.sigma(code),
        rank=hf_core.rank(code),
    )


# ==================== Codes ====================


@router.get(
    "/codes/{code}",
    response_model=CodeResponse,
    status_code=status.HTTP_200_OK,
    tags=["codes"],
    summary="Decode an Ackermann code",
    responses={
        200: {
            "description": "The coded set",
            "content": {
                "application/json": {
                    "example": {"code": 3, "set": "{{},{{}}}", "size": 2, "rank": 2}
                }
            }
        }
    }
)
async def decode_code(code: int = Path(..., ge=0, description="Ackermann code")) -> CodeResponse:
    """
    Decode a code into its brace literal.

    Args:
        code: Ackermann code

    Returns:
        The code with its set, size and rank
    """
    logger.info(f"GET /codes/{code}")
    return _code_response(code)


@router.post(
    "/codes/encode",
    response_model=CodeResponse,
    status_code=status.HTTP_200_OK,
    tags=["codes"],
    summary="Encode a brace literal",
)
async def encode_literal(request: EncodeRequest) -> CodeResponse:
    logger.info("POST /codes/encode")
    return _code_response(hf_core.encode(parse_set_literal(request.literal)))


@router.get(
    "/codes/{a}/ops/{op}",
    response_model=OperationResponse,
    status_code=status.HTTP_200_OK,
    tags=["codes"],
    summary="Apply a set operation",
    description="""
    Apply a set operation to the code a, and to b for binary operations
    (eps, pair, op, binunion, bininter, adjoin). Undefined results such as
    unpair of a non-pair come back as null.
    """,
)
async def apply_operation(
    a: int = Path(..., ge=0, description="First argument"),
    op: str = Path(..., description="Operation name"),
    b: Optional[int] = Query(default=None, ge=0, description="Second argument"),
) -> OperationResponse:
    """
    Apply one of the code operations.

    Raises:
        UnknownSymbolException: For an unknown operation
        ArityMismatchException: If b is missing or superfluous
    """
    logger.info(f"GET /codes/{a}/ops/{op}")
    if op not in hf_core.CODE_OPERATIONS:
        raise UnknownSymbolException(op, "operations")
    arity, function = hf_core.CODE_OPERATIONS[op]
    args = [a] if b is None else [a, b]
    if len(args) != arity:
        raise ArityMismatchException(op, arity, len(args))
    return OperationResponse(op=op, args=args, result=function(*args))


# ==================== Formulas ====================


@router.post(
    "/formulas/classify",
    response_model=ComplexityLevel,
    status_code=status.HTTP_200_OK,
    tags=["formulas"],
    summary="Least E/U levels of a formula",
    responses={
        200: {
            "content": {"application/json": {"example": {"e_level": 3, "u_level": 2}}}
        }
    }
)
async def classify_formula(
    request: FormulaRequest, formula_service: FormulaServiceDep
) -> ComplexityLevel:
    logger.info("POST /formulas/classify")
    return formula_service.classify_text(request.formula, request.signature)


@router.post(
    "/formulas/translate",
    response_model=TranslationResponse,
    status_code=status.HTTP_200_OK,
    tags=["formulas"],
    summary="Translate a formula along an interpretation",
)
async def translate_formula(
    request: TranslateRequest, formula_service: FormulaServiceDep
) -> TranslationResponse:
    """
    Translate along a, o, b or identity, optionally composed with inner ones.

    Args:
        request: Formula, interpretation chain and printing options
        formula_service: Injected formula service

    Returns:
        The printed translation, both levels and the obligations
    """
    logger.info(f"POST /formulas/translate along {request.interpretation}")
    return formula_service.translate_text(
        request.formula,
        request.interpretation,
        inner=request.compose,
        signature=request.signature,
        abbrev=request.abbrev,
    )


@router.post(
    "/formulas/eval",
    response_model=EvaluationResponse,
    status_code=status.HTTP_200_OK,
    tags=["formulas"],
    summary="Evaluate a formula",
)
async def evaluate_formula(
    request: EvalRequest, formula_service: FormulaServiceDep
) -> EvaluationResponse:
    logger.info("POST /formulas/eval")
    return formula_service.evaluate_text(
        request.formula,
        request.signature,
        env=request.env,
        budget=request.budget,
        oracle=request.oracle,
        closed=request.closed,
    )


# ==================== Stages and checks ====================


@router.get(
    "/stages/{n}",
    response_model=Dict[str, Any],
    status_code=status.HTTP_200_OK,
    tags=["stages"],
    summary="Check the stage D_n",
)
async def get_stage(n: int = Path(..., ge=0, description="Stage index")) -> Dict[str, Any]:
    """
    Bound t_n of the stage and the report of its structural properties.
    """
    logger.info(f"GET /stages/{n}")
    current = stage(n)
    return {"n": current.n, "bound": current.bound, "report": check_stage_props(n).to_json()}


@router.get(
    "/stages/{n}/axioms/{axiom}",
    response_model=CheckReport,
    response_model_exclude_none=True,
    status_code=status.HTTP_200_OK,
    tags=["stages"],
    summary="Check an axiom on D_n",
)
async def get_axiom_check(
    n: int = Path(..., ge=0, description="Stage index"),
    axiom: str = Path(..., description="Axiom identifier"),
    bump: int = Query(default=0, ge=0, description="Witness stage offset"),
    seed: Optional[int] = Query(default=None, description="Seed for sampled checks"),
) -> CheckReport:
    logger.info(f"GET /stages/{n}/axioms/{axiom}")
    if axiom not in AXIOMS:
        raise UnknownSymbolException(axiom, "axioms")
    return check_axiom(axiom, n, bump=bump, seed=seed)


@router.get(
    "/roundtrip/{kind}",
    response_model=CheckReport,
    response_model_exclude_none=True,
    status_code=status.HTTP_200_OK,
    tags=["stages"],
    summary="Round-trip identity check",
)
async def get_roundtrip(
    kind: str = Path(..., description="ba_membership, ab_successor, ab_add, ab_mul or p_is_v"),
    range_: Optional[int] = Query(default=None, alias="range", ge=0, description="Value range"),
) -> CheckReport:
    logger.info(f"GET /roundtrip/{kind}")
    if kind not in ROUNDTRIP_KINDS:
        raise UnknownSymbolException(kind, "roundtrip kinds")
    return roundtrip_check(kind, range_)


# ==================== Corpus ====================


@router.get(
    "/corpus",
    response_model=Dict[str, Any],
    status_code=status.HTTP_200_OK,
    tags=["corpus"],
    summary="List the bundled formula corpus",
)
async def get_corpus(
    verification_service: VerificationServiceDep,
    signature: Optional[str] = Query(default=None, description="Filter by signature"),
    tag: Optional[str] = Query(default=None, description="Filter by tag"),
) -> Dict[str, Any]:
    """
    Corpus summary plus the entries matching the filters.

    Args:
        verification_service: Injected verification service
        signature: Optional signature filter
        tag: Optional tag filter

    Returns:
        Dictionary with 'summary' and 'formulas'
    """
    logger.info("GET /corpus")
    entries: List[CorpusFormula] = verification_service.corpus_entries(signature, tag)
    logger.info(f"Returning {len(entries)} corpus formulas")
    return {
        "summary": verification_service.corpus_summary().model_dump(),
        "formulas": [entry.model_dump() for entry in entries],
    }


@router.get(
    "/health",
    response_model=dict,
    status_code=status.HTTP_200_OK,
    tags=["health"],
    summary="Health check with corpus size",
    responses={
        200: {
            "content": {"application/json": {"example": {"status": "healthy", "formulas": 61}}}
        }
    }
)
async def get_health(verification_service: VerificationServiceDep) -> dict:
    summary = verification_service.corpus_summary()
    logger.info(f"Corpus size: {summary.formulas}")
    return {"status": "healthy", "formulas": summary.formulas}
