"""
Domain models for the bundled formula corpus.

The corpus holds template formulas over the built-in signatures, used by
the complexity-preservation and soundness runs, and the axiom lists of
the two theories as data.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.domain.models.formula import Formula
from src.domain.models.signature import SIGNATURES, Signature


class CorpusFormula(BaseModel):
    """
    Named formula of the corpus.

    Attributes:
        name: Unique identifier of the entry
        signature: Name of the signature the text is parsed over
        text: Formula text in the parser's grammar
        tags: Free-form labels (shape, level, 'axiom', ...)
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, max_length=100, description="Entry identifier")
    signature: str = Field(..., description="Signature name")
    text: str = Field(..., min_length=1, description="Formula text")
    tags: List[str] = Field(default_factory=list, description="Labels")

    @field_validator("signature")
    @classmethod
    def validate_signature(cls, value: str) -> str:
        """
        Ensure the signature is one of the built-in signatures.

        Args:
            value: Signature name

        Returns:
            The validated name

        Raises:
            ValueError: If the signature is unknown
        """
        if value not in SIGNATURES:
            raise ValueError(f"Unknown signature '{value}'")
        return value

    @property
    def signature_model(self) -> Signature:
        return SIGNATURES[self.signature]

    def parse(self) -> Formula:
        """
        Parse the text over the entry's signature.

        Raises:
            FormulaSyntaxException: If the text does not parse
        """
        # imported here: services depend on models, not the other way round
        from src.domain.services.formula_parser import parse

        return parse(self.text, self.signature_model)


class TheoryAxiom(BaseModel):
    """
    Axiom of a theory, as formula text or as the id of a finite check.

    Attributes:
        name: Axiom name
        text: Formula text over the theory's signature, if it has one
        check: Identifier understood by the axiom checker, if any
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    text: Optional[str] = Field(default=None)
    check: Optional[str] = Field(default=None)


class Theory(BaseModel):
    """
    Named theory: a signature and its axioms.
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    signature: str = Field(...)
    axioms: List[TheoryAxiom] = Field(default_factory=list)

    @field_validator("signature")
    @classmethod
    def validate_signature(cls, value: str) -> str:
        if value not in SIGNATURES:
            raise ValueError(f"Unknown signature '{value}'")
        return value


class CorpusSummary(BaseModel):
    """Counts reported by the corpus endpoint and the CLI."""

    formulas: int = Field(..., ge=0)
    by_signature: Dict[str, int] = Field(default_factory=dict)
    theories: List[str] = Field(default_factory=list)
