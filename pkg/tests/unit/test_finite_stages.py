"""
Unit tests for the finite stages, the axiom checks on them and the
inductive definitions of HF.
"""

import pytest

from src.config.settings import settings
from src.domain.models.exceptions import RangeGuardException
from src.domain.services import axiom_checker
from src.domain.services.axiom_checker import AXIOMS, check_axiom
from src.domain.services.inductive import lfp_inductive, shortest_enumeration, surjections
from src.domain.services.stages import check_stage_props, dec, stage, stage_bound


@pytest.mark.unit
class TestStages:
    """Test suite for D_n and Dec."""

    def test_should_compute_stage_bounds(self) -> None:
        assert [stage_bound(n) for n in range(6)] == [0, 1, 2, 4, 16, 65536]

    def test_should_guard_unrepresentable_stage(self) -> None:
        """
        GIVEN: The stage index 6, whose bound is 2^65536
        WHEN: The stage is requested
        THEN: RangeGuardException should be raised
        """
        with pytest.raises(RangeGuardException) as exc_info:
            stage(6)

        assert exc_info.value.limit == settings.stage_limit

    def test_should_describe_stage_by_bound(self) -> None:
        # Act
        current = stage(3)

        # Assert
        assert current.n == 3
        assert current.bound == 4
        assert 3 in current

    @pytest.mark.parametrize("codes,expected", [
        ([], [0]),
        ([0], [0, 1]),
        ([0, 1], [0, 1, 2, 3]),
        ([2], [0, 4]),
    ])
    def test_should_list_all_subsets(self, codes, expected) -> None:
        assert dec(codes) == expected

    def test_should_guard_large_dec_input(self) -> None:
        with pytest.raises(RangeGuardException):
            dec(list(range(settings.dec_size_limit + 1)))

    @pytest.mark.parametrize("n", range(5))
    def test_should_pass_stage_properties(self, n: int) -> None:
        """
        GIVEN: A stage below the last one
        WHEN: Its properties are checked
        THEN: The check should pass with Dec(D_n) = D_{n+1}
        """
        # Act
        report = check_stage_props(n)

        # Assert
        assert report.result == "pass"
        assert report.subject == "stage"
        assert report.notes == []

    def test_should_only_check_transitivity_at_last_stage(self) -> None:
        # Act
        report = check_stage_props(settings.stage_limit)

        # Assert
        assert report.result == "pass"
        assert any("transitivity" in note for note in report.notes)


@pytest.mark.unit
class TestAxiomChecks:
    """Test suite for the axiom checks on finite stages."""

    def test_should_fail_pairing_without_bump(self) -> None:
        """
        GIVEN: D_2 = {0, 1} and no room for witnesses
        WHEN: Pairing is checked
        THEN: {0, 1} (code 3) should be reported outside D_2
        """
        # Act
        report = check_axiom("pairing", 2, bump=0)

        # Assert
        assert report.result == "fail"
        assert report.counterexample == {"x": 0, "y": 1, "z": 3, "stage": 2}

    def test_should_pass_pairing_with_bump(self) -> None:
        # Act
        report = check_axiom("pairing", 2, bump=1)

        # Assert
        assert report.passed
        assert report.bump == 1
        assert report.cases == 4

    @pytest.mark.parametrize("axiom", AXIOMS)
    @pytest.mark.parametrize("n", [2, 3])
    def test_should_pass_every_axiom_on_small_stages(self, axiom: str, n: int) -> None:
        # Act
        report = check_axiom(axiom, n, bump=1)

        # Assert
        assert report.result == "pass", report.counterexample
        assert report.subject == f"axiom:{axiom}"
        assert report.seed is None

    def test_should_pass_union_without_bump(self) -> None:
        """
        GIVEN: D_3 = {0, 1, 2, 3} without bump
        WHEN: Union is checked
        THEN: The check should pass, ⋃ staying inside a transitive stage
        """
        # Act
        report = check_axiom("union", 3, bump=0)

        # Assert
        assert report.passed

    def test_should_guard_stage_beyond_limit(self) -> None:
        with pytest.raises(RangeGuardException) as exc_info:
            check_axiom("pairing", settings.stage_limit, bump=1)

        assert exc_info.value.parameter == "n+bump"

    def test_should_reject_unknown_axiom(self) -> None:
        with pytest.raises(KeyError):
            check_axiom("choice", 2)

    @pytest.mark.slow
    def test_should_sample_last_stage_with_seed(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """
        GIVEN: The last stage with a small pair sample
        WHEN: Extensionality and set induction are checked with a seed
        THEN: The reports should pass and record the seed and the sampling
        """
        # Arrange
        monkeypatch.setattr(settings, "stage_sample_pairs", 100)
        monkeypatch.setattr(settings, "stage_sample_subsets", 4)

        # Act
        extensionality = check_axiom("extensionality", settings.stage_limit, seed=7)
        induction = check_axiom("set_induction", settings.stage_limit, seed=7)

        # Assert
        for report in (extensionality, induction):
            assert report.passed
            assert report.seed == 7
            assert any("seed 7" in note for note in report.notes)

    @pytest.mark.slow
    def test_should_sample_pairs_within_each_member_count(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """
        GIVEN: The last stage with 10 uniform pairs and 300 pairs per member count
        WHEN: Extensionality is checked
        THEN: Classes of at most 17 codes should be paired exhaustively, the
              other member counts sampled, and the stratification noted
        """
        # Arrange
        monkeypatch.setattr(settings, "stage_sample_pairs", 10)
        monkeypatch.setattr(settings, "stage_sample_class_pairs", 300)

        # Act
        report = check_axiom("extensionality", settings.stage_limit, seed=3)

        # Assert
        assert report.passed
        # diagonal, uniform pairs, exhaustive classes 0, 1, 15, 16, sampled classes 2..14
        assert report.cases == 65536 + 10 + (1 + 256 + 256 + 1) + 13 * 300
        assert (
            "pairs within each member count 0..16 of D_5: all pairs for counts "
            "[0, 1, 15, 16], 300 seeded pairs for the others"
        ) in report.notes

    def test_should_skip_non_functional_replacement_template(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """
        GIVEN: A replacement template x ∈ y with many values for each x
        WHEN: Replacement is checked on D_2 with bump 1
        THEN: Only the empty code should be collected and the rest noted
        """
        # Arrange
        monkeypatch.setattr(axiom_checker, "REPLACEMENT_TEMPLATES", ("x in y",))

        # Act
        replacement = check_axiom("replacement_template", 2, bump=1)
        collection = check_axiom("strong_collection_template", 2, bump=1)

        # Assert
        assert replacement.passed
        assert replacement.notes == [
            "x in y: 1 codes of D_2 have a member without exactly one y in D_3"
        ]
        assert replacement.cases == 3
        assert collection.passed
        assert collection.notes == []

    def test_should_collect_functional_replacement_template(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        # Arrange
        monkeypatch.setattr(axiom_checker, "REPLACEMENT_TEMPLATES", ("forall z in y. z != z",))

        # Act
        report = check_axiom("replacement_template", 3, bump=1)

        # Assert
        assert report.passed
        assert report.notes == []


@pytest.mark.unit
class TestInductiveDefinitions:
    """Test suite for the least fixed points generating HF."""

    @pytest.mark.parametrize("definition", ["fin", "fe", "adj"])
    def test_should_generate_every_code_below_cap(self, definition: str) -> None:
        """
        GIVEN: One of the three inductive definitions
        WHEN: Its least fixed point below 64 is computed
        THEN: Every code below 64 should be generated
        """
        assert lfp_inductive(definition, 64) == list(range(64))

    def test_should_return_nothing_below_zero_cap(self) -> None:
        assert lfp_inductive("adj", 0) == []
        assert lfp_inductive("fin", 0) == []

    def test_should_guard_large_cap(self) -> None:
        with pytest.raises(RangeGuardException):
            lfp_inductive("fin", settings.lfp_cap_limit + 1)

    def test_should_reject_unknown_definition(self) -> None:
        with pytest.raises(KeyError):
            lfp_inductive("power", 8)

    @pytest.mark.slow
    def test_should_adjoin_up_to_the_largest_cap(self) -> None:
        """
        GIVEN: The largest accepted cap
        WHEN: The adjunction fixed point is computed
        THEN: Every code below the cap should be generated
        """
        # Arrange
        cap = settings.lfp_cap_limit

        # Act
        result = lfp_inductive("adj", cap)

        # Assert
        assert result == list(range(cap))

    def test_should_keep_adjunction_inside_cap(self) -> None:
        assert lfp_inductive("adj", 5) == [0, 1, 2, 3, 4]
        assert lfp_inductive("adj", 1) == [0]


@pytest.mark.unit
class TestEnumerations:
    """Test suite for maps from a natural number onto a set."""

    def test_should_allow_repeated_values(self) -> None:
        """
        GIVEN: The set {0, 1} (code 3)
        WHEN: The maps from 3 onto it are listed
        THEN: All 2^3 - 2 of them should appear, each using both members
        """
        # Act
        maps = list(surjections(3, 3))

        # Assert
        assert len(maps) == 6
        assert maps[0] == (0, 0, 1)
        assert all(set(values) == {0, 1} for values in maps)

    @pytest.mark.parametrize("code,length,expected", [
        (0, 0, [()]),
        (0, 2, []),
        (3, 1, []),
        (4, 2, [(2, 2)]),
    ])
    def test_should_list_surjections(self, code: int, length: int, expected: list) -> None:
        assert list(surjections(code, length)) == expected

    @pytest.mark.parametrize("code,expected", [
        (0, ()),
        (1, (0,)),
        (0b101, (0, 2)),
        (0b1011, (0, 1, 3)),
    ])
    def test_should_find_shortest_enumeration(self, code: int, expected: tuple) -> None:
        assert shortest_enumeration(code) == expected
