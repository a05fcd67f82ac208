"""
Three-valued truth values with the strong Kleene tables.

UNKNOWN is produced only when an unbounded quantifier search runs out of
budget; raising the budget can turn it into TRUE or FALSE but never flips
a decided value.
"""

from enum import Enum


class TruthValue(str, Enum):
    """Strong Kleene truth value."""

    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, value: bool) -> "TruthValue":
        return cls.TRUE if value else cls.FALSE

    @property
    def is_decided(self) -> bool:
        return self is not TruthValue.UNKNOWN

    def negate(self) -> "TruthValue":
        if self is TruthValue.TRUE:
            return TruthValue.FALSE
        if self is TruthValue.FALSE:
            return TruthValue.TRUE
        return TruthValue.UNKNOWN

    def conjoin(self, other: "TruthValue") -> "TruthValue":
        if self is TruthValue.FALSE or other is TruthValue.FALSE:
            return TruthValue.FALSE
        if self is TruthValue.TRUE and other is TruthValue.TRUE:
            return TruthValue.TRUE
        return TruthValue.UNKNOWN

    def disjoin(self, other: "TruthValue") -> "TruthValue":
        if self is TruthValue.TRUE or other is TruthValue.TRUE:
            return TruthValue.TRUE
        if self is TruthValue.FALSE and other is TruthValue.FALSE:
            return TruthValue.FALSE
        return TruthValue.UNKNOWN

    def implies(self, other: "TruthValue") -> "TruthValue":
        return self.negate().disjoin(other)

    def __str__(self) -> str:
        return self.value
