"""
Integration tests for JsonFormulaCorpusRepository.

These tests verify the repository's interaction with real JSON files,
testing data loading, validation, and querying without mocks.
"""

import json
import tempfile
from pathlib import Path

import pytest

from src.domain.models.corpus import CorpusFormula
from src.domain.models.exceptions import InvalidCorpusDataException, RepositoryException
from src.domain.services.formula_syntax import check_formula
from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)


@pytest.mark.integration
class TestJsonRepositoryInitialization:
    """Test repository initialization and data loading."""

    def test_should_load_valid_entries_only(self, json_repository: JsonFormulaCorpusRepository) -> None:
        """
        GIVEN: The test corpus with one invalid signature and one duplicate name
        WHEN: JsonFormulaCorpusRepository is initialized
        THEN: Only the six valid entries should be loaded
        """
        # Act
        formulas = json_repository.find_all()

        # Assert
        assert json_repository.count() == 6
        assert all(isinstance(f, CorpusFormula) for f in formulas)
        assert json_repository.find_by_name("peano_only") is None

    def test_should_keep_first_of_duplicate_names(
        self, json_repository: JsonFormulaCorpusRepository
    ) -> None:
        # Act
        member = json_repository.find_by_name("member")

        # Assert
        assert member is not None
        assert member.text == "x in y"
        assert "duplicate" not in member.tags

    def test_should_raise_error_for_missing_file(self) -> None:
        """
        GIVEN: Path to non-existent file
        WHEN: JsonFormulaCorpusRepository is initialized
        THEN: RepositoryException should be raised
        """
        with pytest.raises(RepositoryException) as exc_info:
            JsonFormulaCorpusRepository(data_file_path="/tmp/nonexistent_corpus.json")

        assert "not found" in str(exc_info.value).lower()

    def test_should_raise_error_for_invalid_json(self) -> None:
        """
        GIVEN: File with invalid JSON syntax
        WHEN: JsonFormulaCorpusRepository is initialized
        THEN: RepositoryException should be raised
        """
        # Arrange
        with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
            f.write("{ invalid json content")
            temp_file = f.name

        try:
            # Act & Assert
            with pytest.raises(RepositoryException) as exc_info:
                JsonFormulaCorpusRepository(data_file_path=temp_file)

            assert "invalid json" in str(exc_info.value).lower()
        finally:
            Path(temp_file).unlink()

    @pytest.mark.parametrize("document", [
        [],
        {"entries": []},
        {"formulas": {}},
    ])
    def test_should_raise_error_for_wrong_structure(self, tmp_path: Path, document) -> None:
        # Arrange
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(document), encoding="utf-8")

        # Act & Assert
        with pytest.raises(InvalidCorpusDataException):
            JsonFormulaCorpusRepository(data_file_path=path)

    def test_should_raise_error_for_theories_list(self, tmp_path: Path) -> None:
        # Arrange
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps({"formulas": [], "theories": []}), encoding="utf-8")

        # Act & Assert
        with pytest.raises(InvalidCorpusDataException):
            JsonFormulaCorpusRepository(data_file_path=path)

    def test_should_load_empty_corpus(self, tmp_path: Path) -> None:
        # Arrange
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps({"formulas": []}), encoding="utf-8")

        # Act
        repository = JsonFormulaCorpusRepository(data_file_path=path)

        # Assert
        assert repository.count() == 0
        assert repository.theory("HA") is None


@pytest.mark.integration
class TestJsonRepositoryQueries:
    """Test the query methods over the test corpus."""

    def test_should_filter_by_signature(self, json_repository: JsonFormulaCorpusRepository) -> None:
        # Act
        set_entries = json_repository.find_by_signature("set")
        arith_entries = json_repository.find_by_signature("arith")

        # Assert
        assert [e.name for e in set_entries] == [
            "member", "subset", "superset_exists", "universal_subset"
        ]
        assert [e.name for e in arith_entries] == ["successor_graph", "even"]
        assert json_repository.find_by_signature("arith+") == []

    def test_should_filter_by_tag(self, json_repository: JsonFormulaCorpusRepository) -> None:
        atomic = json_repository.find_by_tag("atomic")
        assert {e.name for e in atomic} == {"member", "successor_graph"}

    def test_should_load_theories(self, json_repository: JsonFormulaCorpusRepository) -> None:
        """
        GIVEN: The test corpus with theories HA and T
        WHEN: They are looked up
        THEN: Their axioms should be loaded in order, as text or check ids
        """
        # Act
        ha = json_repository.theory("HA")
        t = json_repository.theory("T")

        # Assert
        assert ha is not None and t is not None
        assert ha.signature == "arith"
        assert [a.name for a in ha.axioms] == ["successor_nonzero", "add_zero"]
        assert [a.check for a in t.axioms] == ["pairing", "set_induction"]
        assert json_repository.theory("ZF") is None


@pytest.mark.integration
class TestBundledCorpus:
    """Test the corpus shipped in data/."""

    def test_should_parse_every_bundled_entry(
        self, bundled_repository: JsonFormulaCorpusRepository
    ) -> None:
        """
        GIVEN: The bundled corpus
        WHEN: Every entry is parsed over its signature
        THEN: Each should parse and be well formed
        """
        # Act & Assert
        assert bundled_repository.count() == 61
        for entry in bundled_repository.find_all():
            check_formula(entry.parse(), entry.signature_model)

    def test_should_bundle_both_theories(
        self, bundled_repository: JsonFormulaCorpusRepository
    ) -> None:
        # Act
        ha = bundled_repository.theory("HA")
        t = bundled_repository.theory("T")

        # Assert
        assert ha is not None and len(ha.axioms) == 7
        assert t is not None
        assert {a.check for a in t.axioms} <= {
            "extensionality", "pairing", "union", "binary_intersection", "set_induction", "v_eq_fin"
        }
