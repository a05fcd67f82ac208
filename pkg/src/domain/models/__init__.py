"""
Domain models package.

Value types of the domain: HF sets and their codes, formulas and
signatures, complexity levels, truth values, interpretation
specifications, check reports, the formula corpus and the exception
hierarchy.
"""

from src.domain.models.complexity import ComplexityLevel
from src.domain.models.corpus import CorpusFormula, CorpusSummary, Theory, TheoryAxiom
from src.domain.models.exceptions import (
    ArityMismatchException,
    CapExceededException,
    DomainException,
    FormulaSyntaxException,
    InvalidCorpusDataException,
    MalformedFormulaException,
    MissingAssignmentException,
    NotAnOrdinalException,
    RangeGuardException,
    RepositoryException,
    ResourceGuardException,
    SetLiteralSyntaxException,
    SignatureMismatchException,
    UnknownSymbolException,
)
from src.domain.models.hf_set import EMPTY, AckCode, HfSet, Nat
from src.domain.models.interpretation import InterpretationSpec
from src.domain.models.report import CheckReport, CriterionResult, SelftestReport, Stage
from src.domain.models.signature import ARITH, ARITH_PLUS, SET, SIGNATURES, Signature
from src.domain.models.truth import TruthValue

__all__ = [
    "AckCode",
    "Nat",
    "HfSet",
    "EMPTY",
    "Signature",
    "ARITH",
    "ARITH_PLUS",
    "SET",
    "SIGNATURES",
    "ComplexityLevel",
    "TruthValue",
    "InterpretationSpec",
    "CheckReport",
    "Stage",
    "CriterionResult",
    "SelftestReport",
    "CorpusFormula",
    "CorpusSummary",
    "Theory",
    "TheoryAxiom",
    "DomainException",
    "ResourceGuardException",
    "CapExceededException",
    "RangeGuardException",
    "NotAnOrdinalException",
    "FormulaSyntaxException",
    "SetLiteralSyntaxException",
    "UnknownSymbolException",
    "ArityMismatchException",
    "SignatureMismatchException",
    "MalformedFormulaException",
    "MissingAssignmentException",
    "InvalidCorpusDataException",
    "RepositoryException",
]
