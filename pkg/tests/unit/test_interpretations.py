"""
Unit tests for the translation engine and the interpretations a, o and b.
"""

from itertools import product

import pytest

from src.domain.models.exceptions import SignatureMismatchException, UnknownSymbolException
from src.domain.models.formula import Exists, Forall, Macro
from src.domain.models.signature import ARITH, ARITH_PLUS, SET
from src.domain.models.truth import TruthValue
from src.domain.services.complexity_classifier import classify
from src.domain.services.evaluator import eval_arith, eval_set
from src.domain.services.formula_parser import parse
from src.domain.services.formula_printer import print_formula
from src.domain.services.formula_syntax import check_formula, free_vars, is_delta0
from src.domain.services.hf_core import eps, v
from src.domain.services import interpretation_engine
from src.domain.services.interpretation_engine import (
    compose,
    identity,
    obligations,
    translate,
    translate_template,
)
from src.domain.services.interpretations import (
    eps_formula,
    get_interpretation,
    graph_formula,
    interp_a,
    interp_b,
    interp_o,
    omega_formula,
)
from src.domain.services.roundtrip import check_obligations


@pytest.mark.unit
class TestInterpretationA:
    """Test suite for sets in arithmetic."""

    def test_should_translate_membership_to_bounded_template(self) -> None:
        """
        GIVEN: x ∈ y
        WHEN: It is translated along a
        THEN: The result should be the eps template, bounded and over arith+
        """
        # Act
        target = translate(interp_a(), parse("x in y", SET))

        # Assert
        assert print_formula(target, abbrev=True) == "eps(x, y)"
        assert classify(target).is_bounded
        check_formula(target, ARITH_PLUS)

    @pytest.mark.parametrize("oracle_mode", [False, True])
    def test_should_evaluate_eps_as_bit_test(self, oracle_mode: bool) -> None:
        # Arrange
        target = translate(interp_a(), parse("x in y", SET))

        # Act & Assert
        for a, b in product(range(4), range(16)):
            expected = TruthValue.of(eps(a, b))
            assert eval_arith(target, {"x": a, "y": b}, oracle_mode=oracle_mode) is expected

    def test_should_keep_bounded_formulas_bounded(self) -> None:
        """
        GIVEN: A bounded set formula
        WHEN: It is translated along a
        THEN: The translation should be bounded and agree with the source on codes
        """
        # Arrange
        source = parse("forall z in x. z in y", SET)

        # Act
        target = translate(interp_a(), source)

        # Assert
        assert is_delta0(target)
        for x, y in product(range(16), repeat=2):
            env = {"x": x, "y": y}
            assert eval_arith(target, env, oracle_mode=True) is eval_set(source, env)

    def test_should_relativize_unbounded_quantifiers(self) -> None:
        # Arrange
        source = parse("exists z. x in z", SET)

        # Act
        target = translate(interp_a(), source)

        # Assert
        assert isinstance(target, Exists)
        assert free_vars(target) == {"x"}
        assert classify(target) == classify(source)
        assert eval_arith(target, {"x": 3}, oracle_mode=True) is TruthValue.TRUE


@pytest.mark.unit
class TestInterpretationO:
    """Test suite for arithmetic on von Neumann ordinals."""

    def test_should_translate_successor_through_graph(self) -> None:
        """
        GIVEN: S(x) = y over arith+
        WHEN: It is translated along o and evaluated on numerals
        THEN: It should hold exactly when y is the next numeral
        """
        # Arrange
        target = translate(interp_o(), parse("S(x) = y", ARITH_PLUS))

        # Act & Assert
        assert eval_set(target, {"x": v(2), "y": v(3)}, oracle_mode=True) is TruthValue.TRUE
        assert eval_set(target, {"x": v(2), "y": v(2)}, oracle_mode=True) is TruthValue.FALSE

    def test_should_recognise_numerals_with_omega_template(self) -> None:
        # Arrange
        omega = omega_formula()

        # Act & Assert
        assert is_delta0(omega)
        for code in range(16):
            expected = TruthValue.of(code in (0, 1, 3, 11))
            assert eval_set(omega, {"x": code}) is expected

    def test_should_classify_graphs_as_existential(self) -> None:
        for kind in ("add", "mul", "exp"):
            assert classify(graph_formula(kind)).e_level == 1

    def test_should_meet_successor_obligation(self) -> None:
        # Act
        report = check_obligations("o", budget=v(3) + 1, symbols=["S"])

        # Assert
        assert report.result == "pass"
        assert report.subject == "obligations:o"


@pytest.mark.unit
class TestInterpretationB:
    """Test suite for arithmetic on Ackermann codes."""

    def test_should_translate_arithmetic_into_set_language(self) -> None:
        # Act
        target = translate(interp_b(), parse("x + y = z", ARITH_PLUS))

        # Assert
        check_formula(target, SET)
        assert classify(target).e_level == 1

    @pytest.mark.parametrize("x,y,z,expected", [
        (2, 3, 5, True),
        (2, 3, 6, False),
        (0, 0, 0, True),
    ])
    def test_should_evaluate_addition_on_codes(self, x: int, y: int, z: int, expected: bool) -> None:
        target = translate(interp_b(), parse("x + y = z", ARITH_PLUS))
        assert eval_set(target, {"x": x, "y": y, "z": z}, oracle_mode=True) is TruthValue.of(expected)

    def test_should_translate_bounded_quantifier_through_below(self) -> None:
        """
        GIVEN: A bounded arithmetic formula
        WHEN: It is translated along b
        THEN: The translation should be E_1 and agree with the source
        """
        # Arrange
        source = parse("exists y < x. S(y) = x", ARITH)

        # Act
        target = translate(interp_b(), source)

        # Assert
        assert classify(target).e_level == 1
        for x in range(6):
            assert eval_set(target, {"x": x}, oracle_mode=True) is eval_arith(source, {"x": x})


@pytest.mark.unit
class TestCompositionAndIdentity:
    """Test suite for compose, identity and the obligations."""

    def test_should_compose_matching_interpretations(self) -> None:
        # Act
        composite = compose(interp_b(), interp_a())

        # Assert
        assert composite.name == "b∘a"
        assert composite.source == SET
        assert composite.target == SET

    def test_should_reject_mismatched_composition(self) -> None:
        """
        GIVEN: a, whose target arith+ is not its own source
        WHEN: It is composed with itself
        THEN: SignatureMismatchException should be raised
        """
        with pytest.raises(SignatureMismatchException) as exc_info:
            compose(interp_a(), interp_a())

        assert exc_info.value.expected == "set"
        assert exc_info.value.actual == "arith+"

    def test_should_translate_along_composite_as_nested(self) -> None:
        # Arrange
        source = parse("x in y", SET)
        nested = translate(interp_b(), translate(interp_a(), source))
        composed = translate(compose(interp_b(), interp_a()), source)

        # Act & Assert
        for x, y in product(range(4), range(8)):
            env = {"x": x, "y": y}
            expected = TruthValue.of(eps(x, y))
            assert eval_set(nested, env, oracle_mode=True) is expected
            assert eval_set(composed, env, oracle_mode=True) is expected

    def test_should_keep_terms_under_identity(self) -> None:
        # Arrange
        spec = identity(ARITH)

        # Act
        target = translate(spec, parse("forall x. S(x) = y", ARITH))

        # Assert
        assert spec.name == "identity(arith)"
        assert print_formula(target) == "forall x. x = x -> S(x) = y"

    def test_should_list_domain_obligation_first(self) -> None:
        # Act
        found = obligations(identity(ARITH))

        # Assert
        assert isinstance(found[0], Exists)
        assert len(found) == 1 + len(ARITH.functions)
        # the constant 0 has no inputs to quantify over
        assert sum(isinstance(f, Forall) for f in found) == 3

    def test_should_meet_identity_obligations(self) -> None:
        assert check_obligations("identity(arith)", budget=8).passed

    def test_should_look_up_interpretations_by_name(self) -> None:
        # Act & Assert
        assert get_interpretation("a") is interp_a()
        assert get_interpretation("identity(set)").name == "identity(set)"
        with pytest.raises(UnknownSymbolException):
            get_interpretation("c")
        with pytest.raises(UnknownSymbolException):
            get_interpretation("identity(peano)")

    def test_should_carry_oracles_across_translation(self) -> None:
        # Act
        translated = translate(interp_o(), eps_formula())

        # Assert
        assert isinstance(translated, Macro)
        assert translated.oracle is not None
        assert translated.oracle.holds(v(0), v(1)) is True
        assert translated.oracle.holds(v(1), v(1)) is False
        assert translated.oracle.holds(2, v(1)) is False
        assert translated.oracle.transported is True
        assert eps_formula().oracle.transported is False


@pytest.mark.unit
class TestTemplateTranslationCache:
    """Test suite for the per-interpretation template cache."""

    def test_should_reuse_translation_of_same_template(self) -> None:
        # Act
        first = translate_template(interp_b(), eps_formula())
        second = translate_template(interp_b(), eps_formula())

        # Assert
        assert first is second
        assert first.name == "eps^b"

    def test_should_not_grow_when_templates_are_rebuilt(self) -> None:
        """
        GIVEN: Identity interpretations rebuilt with fresh templates each time
        WHEN: They are composed with b repeatedly
        THEN: The cache should hold one entry per template name, not one per rebuild
        """
        # Arrange
        compose(interp_b(), identity(ARITH_PLUS))
        size = len(interpretation_engine._template_cache)

        # Act
        for _ in range(3):
            compose(interp_b(), identity(ARITH_PLUS))

        # Assert
        assert len(interpretation_engine._template_cache) == size

    def test_should_translate_rebuilt_template_afresh(self) -> None:
        # Arrange
        old = identity(ARITH_PLUS).function_map["S"]
        new = identity(ARITH_PLUS).function_map["S"]

        # Act
        first = translate_template(interp_b(), old)
        second = translate_template(interp_b(), new)

        # Assert
        assert first is not second
        assert second.oracle.holds(2, 3) is True
