"""
Infrastructure repositories package.

Adapters implementing the repository ports.
"""

from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)

__all__ = [
    "JsonFormulaCorpusRepository",
]
