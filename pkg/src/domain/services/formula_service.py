"""
Formula service.

Entry points shared by the command line and the HTTP adapter: parse a
formula text, then classify, translate or evaluate it.
"""

import logging
from typing import Mapping, Optional, Sequence

from src.domain.models.complexity import ComplexityLevel
from src.domain.models.exceptions import MalformedFormulaException
from src.domain.models.formula_request import EvaluationResponse, TranslationResponse
from src.domain.models.interpretation import InterpretationSpec
from src.domain.models.signature import get_signature, is_arithmetic
from src.domain.services.complexity_classifier import classify
from src.domain.services.evaluator import Evaluator
from src.domain.services.formula_parser import parse
from src.domain.services.formula_printer import print_formula
from src.domain.services.interpretation_engine import compose, obligations, translate
from src.domain.services.interpretations import get_interpretation

logger = logging.getLogger(__name__)


def resolve_interpretation(name: str, signature: Optional[str] = None) -> InterpretationSpec:
    """
    Look up 'a', 'o', 'b' or 'identity'; the identity needs a signature.

    Raises:
        MalformedFormulaException: For 'identity' without a signature
        UnknownSymbolException: For an unknown name
    """
    if name == "identity":
        if signature is None:
            raise MalformedFormulaException("The identity interpretation needs a signature")
        return get_interpretation(f"identity({signature})")
    return get_interpretation(name)


def build_interpretation(
    name: str, inner: Sequence[str] = (), signature: Optional[str] = None
) -> InterpretationSpec:
    """
    Compose an interpretation with inner ones: the last of inner is applied first.

    Raises:
        SignatureMismatchException: If adjacent signatures do not match
    """
    spec = resolve_interpretation(name, signature)
    for inner_name in inner:
        spec = compose(spec, resolve_interpretation(inner_name, signature))
    return spec


class FormulaService:
    """
    Parses formula texts and runs the formula operations on them.
    """

    def classify_text(self, text: str, signature: str = "set") -> ComplexityLevel:
        """
        Least E/U levels of a formula text.

        Raises:
            FormulaSyntaxException: If the text does not parse
        """
        level = classify(parse(text, get_signature(signature)))
        logger.debug(f"Classified '{text}' as {level}")
        return level

    def translate_text(
        self,
        text: str,
        interpretation: str,
        inner: Sequence[str] = (),
        signature: Optional[str] = None,
        abbrev: bool = False,
    ) -> TranslationResponse:
        """
        Translate a formula text along an interpretation.

        Args:
            text: Formula over the interpretation's source signature
            interpretation: Outer interpretation name
            inner: Inner interpretation names, applied innermost last
            signature: Signature for identity interpretations
            abbrev: Print templates by name

        Returns:
            The translation with both levels and the printed obligations
        """
        spec = build_interpretation(interpretation, inner, signature)
        source = parse(text, spec.source)
        target = translate(spec, source)
        printed = print_formula(target, abbrev=abbrev)
        logger.info(f"Translated along {spec.name}: {len(text)} -> {len(printed)} characters")
        return TranslationResponse(
            interpretation=spec.name,
            source_signature=spec.source.name,
            target_signature=spec.target.name,
            formula=printed,
            source_level=classify(source),
            target_level=classify(target),
            obligations=[print_formula(o, abbrev=True) for o in obligations(spec)],
        )

    def evaluate_text(
        self,
        text: str,
        signature: str = "set",
        env: Optional[Mapping[str, int]] = None,
        budget: Optional[int] = None,
        oracle: bool = False,
        closed: bool = False,
    ) -> EvaluationResponse:
        """
        Evaluate a formula text in the standard structure of its signature.

        Raises:
            MissingAssignmentException: If a free variable has no value
        """
        sig = get_signature(signature)
        evaluator = Evaluator(
            "arith" if is_arithmetic(sig) else "set",
            budget=budget,
            oracle_mode=oracle,
            closed=closed,
        )
        value = evaluator.evaluate(parse(text, sig), env)
        return EvaluationResponse(value=value.value, budget=evaluator.budget, env=dict(env or {}))
