"""
JSON-based formula corpus repository implementation.

Adapter for FormulaCorpusRepositoryPort reading data/formula_corpus.json.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from src.domain.models.corpus import CorpusFormula, Theory
from src.domain.models.exceptions import InvalidCorpusDataException, RepositoryException
from src.domain.ports.formula_corpus_repository import FormulaCorpusRepositoryPort

logger = logging.getLogger(__name__)


class JsonFormulaCorpusRepository(FormulaCorpusRepositoryPort):
    """
    JSON file-based implementation of FormulaCorpusRepositoryPort.

    The file is read once; entries are validated with pydantic and invalid
    ones are skipped with a warning.

    Attributes:
        _data_file_path: Path to the JSON data file
        _formulas: Loaded entries by name, in file order
        _theories: Loaded theories by name
    """

    def __init__(self, data_file_path: str | Path) -> None:
        """
        Initialize the repository and load the corpus.

        Args:
            data_file_path: Path to the JSON corpus file

        Raises:
            RepositoryException: If the file cannot be loaded
            InvalidCorpusDataException: If the top-level structure is wrong
        """
        self._data_file_path = Path(data_file_path)
        self._formulas: Dict[str, CorpusFormula] = {}
        self._theories: Dict[str, Theory] = {}
        self._load_corpus()
        logger.info(
            f"JsonFormulaCorpusRepository initialized with {len(self._formulas)} formulas "
            f"and {len(self._theories)} theories"
        )

    def _load_corpus(self) -> None:
        try:
            if not self._data_file_path.exists():
                error_msg = f"Corpus file not found: {self._data_file_path}"
                logger.error(error_msg)
                raise RepositoryException(error_msg)

            logger.info(f"Loading formula corpus from {self._data_file_path}")
            with open(self._data_file_path, "r", encoding="utf-8") as file:
                data = json.load(file)

            if not isinstance(data, dict) or not isinstance(data.get("formulas"), list):
                raise InvalidCorpusDataException(
                    "Invalid JSON structure: expected {'formulas': [...]}"
                )

            for idx, entry in enumerate(data["formulas"]):
                try:
                    formula = CorpusFormula(**entry)
                except (ValidationError, TypeError) as e:
                    logger.warning(f"Skipping invalid corpus entry at index {idx}: {e}")
                    continue
                if formula.name in self._formulas:
                    logger.warning(f"Skipping duplicate corpus entry '{formula.name}'")
                    continue
                self._formulas[formula.name] = formula

            theories = data.get("theories", {})
            if not isinstance(theories, dict):
                raise InvalidCorpusDataException("'theories' must be an object")
            for name, theory_data in theories.items():
                try:
                    self._theories[name] = Theory(name=name, **theory_data)
                except (ValidationError, TypeError) as e:
                    logger.warning(f"Skipping invalid theory '{name}': {e}")

            logger.info(f"Successfully loaded {len(self._formulas)} corpus formulas")

        except json.JSONDecodeError as e:
            error_msg = f"Invalid JSON format in {self._data_file_path}: {e}"
            logger.error(error_msg)
            raise RepositoryException(error_msg) from e

        except (InvalidCorpusDataException, RepositoryException):
            raise

        except OSError as e:
            error_msg = f"Failed to load formula corpus: {e}"
            logger.error(error_msg)
            raise RepositoryException(error_msg) from e

    def find_all(self) -> List[CorpusFormula]:
        return list(self._formulas.values())

    def find_by_name(self, name: str) -> Optional[CorpusFormula]:
        return self._formulas.get(name)

    def find_by_signature(self, signature: str) -> List[CorpusFormula]:
        return [f for f in self._formulas.values() if f.signature == signature]

    def find_by_tag(self, tag: str) -> List[CorpusFormula]:
        return [f for f in self._formulas.values() if tag in f.tags]

    def theory(self, name: str) -> Optional[Theory]:
        return self._theories.get(name)

    def count(self) -> int:
        return len(self._formulas)
