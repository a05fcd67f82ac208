"""
Formula corpus repository port (interface).

The domain layer states what it needs from the corpus store through this
port; the JSON adapter in the infrastructure layer provides it.
"""

from abc import ABC, abstractmethod
from typing import List, Optional

from src.domain.models.corpus import CorpusFormula, Theory


class FormulaCorpusRepositoryPort(ABC):
    """
    Abstract interface for access to the formula corpus.
    """

    @abstractmethod
    def find_all(self) -> List[CorpusFormula]:
        """
        Retrieve every corpus formula.

        Returns:
            List of entries in file order (may be empty)

        Raises:
            RepositoryException: If data access fails
        """
        pass

    @abstractmethod
    def find_by_name(self, name: str) -> Optional[CorpusFormula]:
        """
        Retrieve an entry by name.

        Returns:
            The entry if found, None otherwise
        """
        pass

    @abstractmethod
    def find_by_signature(self, signature: str) -> List[CorpusFormula]:
        """
        Retrieve the entries over one signature.
        """
        pass

    @abstractmethod
    def find_by_tag(self, tag: str) -> List[CorpusFormula]:
        """
        Retrieve the entries carrying a tag.
        """
        pass

    @abstractmethod
    def theory(self, name: str) -> Optional[Theory]:
        """
        Retrieve a bundled theory ('HA' or 'T').

        Returns:
            The theory if present, None otherwise
        """
        pass

    @abstractmethod
    def count(self) -> int:
        """
        Get the total number of corpus formulas.
        """
        pass
