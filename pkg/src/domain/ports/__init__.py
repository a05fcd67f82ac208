"""
Domain ports package.

Interfaces the domain layer requires from external adapters.
"""

from src.domain.ports.formula_corpus_repository import FormulaCorpusRepositoryPort

__all__ = [
    "FormulaCorpusRepositoryPort",
]
