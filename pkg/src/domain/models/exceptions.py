"""
Domain-specific exceptions.

This module defines custom exceptions for domain-level errors: resource
guards on Ackermann codes, syntax and signature errors on formulas, and
data-access failures. Check failures are reported through CheckReport
instead of exceptions.
"""

from typing import Optional


class DomainException(Exception):
    """
    Base exception for all domain-level errors.

    All domain-specific exceptions should inherit from this base class.
    This allows for centralized exception handling at the CLI and HTTP
    boundaries.
    """

    def __init__(self, message: str) -> None:
        """
        Initialize domain exception.

        Args:
            message: Human-readable error message
        """
        self.message = message
        super().__init__(self.message)


class ResourceGuardException(DomainException):
    """
    Base exception for resource guards (bit cap, ranges, sizes).

    Raised instead of truncating or wrapping a value that would not fit.
    """

    pass


class CapExceededException(ResourceGuardException):
    """
    Exception raised when a code would exceed the configured bit cap.
    """

    def __init__(self, bits: int, cap: int) -> None:
        """
        Initialize cap exceeded exception.

        Args:
            bits: Bit length the operation would have produced
            cap: Configured bit cap
        """
        super().__init__(f"Code of {bits} bits exceeds the bit cap of {cap}")
        self.bits = bits
        self.cap = cap


class RangeGuardException(ResourceGuardException):
    """
    Exception raised when an argument lies outside a feasibility range.
    """

    def __init__(self, parameter: str, value: int, limit: int) -> None:
        """
        Initialize range guard exception.

        Args:
            parameter: Name of the guarded parameter
            value: Value that was requested
            limit: Largest accepted value
        """
        super().__init__(
            f"Parameter '{parameter}' = {value} exceeds the limit {limit}"
        )
        self.parameter = parameter
        self.value = value
        self.limit = limit


class NotAnOrdinalException(DomainException):
    """
    Exception raised when ordinal arithmetic receives a non-ordinal.
    """

    def __init__(self, operand: str) -> None:
        super().__init__(f"Operand {operand} is not a von Neumann ordinal")
        self.operand = operand


class FormulaSyntaxException(DomainException):
    """
    Exception raised when formula text cannot be parsed.

    The position is a zero-based character offset into the text.
    """

    def __init__(self, message: str, position: int, text: str = "") -> None:
        """
        Initialize formula syntax exception.

        Args:
            message: Description of the syntax error
            position: Character offset where the error was detected
            text: The text being parsed
        """
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class SetLiteralSyntaxException(DomainException):
    """
    Exception raised when a brace-notation set literal is malformed.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownSymbolException(DomainException):
    """
    Exception raised when a symbol is not part of the signature in use.
    """

    def __init__(self, symbol: str, signature: str) -> None:
        """
        Initialize unknown symbol exception.

        Args:
            symbol: The offending symbol
            signature: Name of the signature it was looked up in
        """
        super().__init__(f"Symbol '{symbol}' is not in signature '{signature}'")
        self.symbol = symbol
        self.signature = signature


class ArityMismatchException(DomainException):
    """
    Exception raised when a symbol is applied to the wrong number of arguments.
    """

    def __init__(self, symbol: str, expected: int, actual: int) -> None:
        super().__init__(
            f"Symbol '{symbol}' expects {expected} arguments, got {actual}"
        )
        self.symbol = symbol
        self.expected = expected
        self.actual = actual


class SignatureMismatchException(DomainException):
    """
    Exception raised when two signatures that must agree do not.
    """

    def __init__(self, expected: str, actual: str) -> None:
        super().__init__(f"Expected signature '{expected}', got '{actual}'")
        self.expected = expected
        self.actual = actual


class MalformedFormulaException(DomainException):
    """
    Exception raised when a formula or definition breaks a structural
    invariant (scoping, declared free variables).
    """

    pass


class MissingAssignmentException(DomainException):
    """
    Exception raised when evaluation meets a free variable without a value.
    """

    def __init__(self, variable: str) -> None:
        super().__init__(f"No value assigned to free variable '{variable}'")
        self.variable = variable


class InvalidCorpusDataException(DomainException):
    """
    Exception raised when corpus data is malformed or invalid.

    This exception indicates issues with the structure or format of the
    formula corpus, typically when loading it from disk.
    """

    pass


class RepositoryException(DomainException):
    """
    Exception raised when repository operations fail.

    This exception indicates errors at the data access layer that cannot be
    recovered from.
    """

    pass


def describe(exc: DomainException) -> dict[str, Optional[object]]:
    """
    Collect the structured attributes of a domain exception.

    Args:
        exc: The exception instance

    Returns:
        Mapping of attribute names to values, excluding the message
    """
    return {
        key: value
        for key, value in vars(exc).items()
        if key != "message" and not key.startswith("_")
    }
