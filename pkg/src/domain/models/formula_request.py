"""
Request and response models of the HTTP adapter.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from src.domain.models.complexity import ComplexityLevel
from src.domain.models.signature import SIGNATURES

InterpretationName = Literal["a", "o", "b", "identity"]


def _known_signature(value: Optional[str]) -> Optional[str]:
    if value is not None and value not in SIGNATURES:
        raise ValueError(f"Unknown signature '{value}', expected one of {sorted(SIGNATURES)}")
    return value


class EncodeRequest(BaseModel):
    """Brace literal to encode, e.g. '{{},{{}}}'."""

    literal: str = Field(..., min_length=2, description="Brace literal of an HF set")


class CodeResponse(BaseModel):
    """
    An Ackermann code with its brace literal.

    Attributes:
        code: The code
        set: Brace literal of the coded set
        size: Number of members
        rank: Set-theoretic rank
    """

    code: int = Field(..., ge=0, description="Ackermann code")
    set: str = Field(..., description="Brace literal")
    size: int = Field(..., ge=0, description="Number of members")
    rank: int = Field(..., ge=0, description="Rank")


class OperationResponse(BaseModel):
    op: str = Field(..., description="Operation name")
    args: List[int] = Field(..., description="Code arguments")
    result: Any = Field(..., description="Code, number, boolean or pair; null when undefined")


class FormulaRequest(BaseModel):
    """A formula in concrete syntax over a signature."""

    formula: str = Field(..., min_length=1, description="Formula text")
    signature: str = Field(default="set", description="'arith', 'arith+' or 'set'")

    @field_validator("signature")
    @classmethod
    def validate_signature(cls, value: Optional[str]) -> Optional[str]:
        return _known_signature(value)


class TranslateRequest(BaseModel):
    """
    Translation along an interpretation, optionally composed.

    Attributes:
        formula: Source formula text
        interpretation: Outer interpretation
        compose: Inner interpretations, innermost last
        signature: Signature of identity interpretations
        abbrev: Print templates by name instead of expanding them
    """

    formula: str = Field(..., min_length=1, description="Formula text")
    interpretation: InterpretationName = Field(..., description="Outer interpretation")
    compose: List[InterpretationName] = Field(default_factory=list, description="Inner ones")
    signature: Optional[str] = Field(default=None, description="Signature for 'identity'")
    abbrev: bool = Field(default=False, description="Print templates by name")

    @field_validator("signature")
    @classmethod
    def validate_signature(cls, value: Optional[str]) -> Optional[str]:
        return _known_signature(value)


class TranslationResponse(BaseModel):
    interpretation: str
    source_signature: str
    target_signature: str
    formula: str
    source_level: ComplexityLevel
    target_level: ComplexityLevel
    obligations: List[str]


class EvalRequest(BaseModel):
    """
    Evaluation of a formula in the standard structure of its signature.

    Attributes:
        formula: Formula text
        signature: 'arith', 'arith+' or 'set'
        env: Values of the free variables (numbers, or codes for 'set')
        budget: Search bound for unbounded quantifiers
        oracle: Decide templates by their oracles
        closed: Values below the budget are the whole domain
    """

    formula: str = Field(..., min_length=1, description="Formula text")
    signature: str = Field(default="set", description="'arith', 'arith+' or 'set'")
    env: Dict[str, int] = Field(default_factory=dict, description="Assignment")
    budget: Optional[int] = Field(default=None, ge=0, description="Search bound")
    oracle: bool = Field(default=False, description="Oracle mode")
    closed: bool = Field(default=False, description="Closed-domain mode")

    @field_validator("signature")
    @classmethod
    def validate_signature(cls, value: Optional[str]) -> Optional[str]:
        return _known_signature(value)

    @field_validator("env")
    @classmethod
    def validate_env(cls, value: Dict[str, int]) -> Dict[str, int]:
        for name, number in value.items():
            if number < 0:
                raise ValueError(f"Value of '{name}' must be non-negative")
        return value


class EvaluationResponse(BaseModel):
    value: Literal["True", "False", "Unknown"]
    budget: int
    env: Dict[str, int]
