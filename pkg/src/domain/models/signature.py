"""
Signatures of the first-order languages in use.

A signature fixes the function and predicate symbols with their arities
and the relation that bounded quantifiers use ('<' for arithmetic, 'in'
for set theory). Equality is built into every language.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.models.exceptions import ArityMismatchException, UnknownSymbolException


class Signature(BaseModel):
    """
    First-order signature.

    Attributes:
        name: Identifier of the signature ('arith', 'arith+', 'set')
        functions: Function symbols with their arities
        predicates: Predicate symbols with their arities
        bound_relation: Relation used by bounded quantifiers
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    functions: dict[str, int] = Field(default_factory=dict)
    predicates: dict[str, int] = Field(default_factory=dict)
    bound_relation: Literal["<", "in"]

    @model_validator(mode="after")
    def validate_unique_symbols(self) -> "Signature":
        """
        Ensure no symbol is both a function and a predicate.

        Returns:
            The validated signature
        """
        shared = set(self.functions) & set(self.predicates)
        if shared:
            raise ValueError(f"Symbols used twice: {sorted(shared)}")
        return self

    def check_function(self, symbol: str, arity: int) -> None:
        """
        Check a function application against the signature.

        Raises:
            UnknownSymbolException: If the symbol is not a function symbol
            ArityMismatchException: If the arity differs
        """
        if symbol not in self.functions:
            raise UnknownSymbolException(symbol, self.name)
        if self.functions[symbol] != arity:
            raise ArityMismatchException(symbol, self.functions[symbol], arity)

    def check_predicate(self, symbol: str, arity: int) -> None:
        """
        Check a predicate application against the signature.

        Raises:
            UnknownSymbolException: If the symbol is not a predicate symbol
            ArityMismatchException: If the arity differs
        """
        if symbol not in self.predicates:
            raise UnknownSymbolException(symbol, self.name)
        if self.predicates[symbol] != arity:
            raise ArityMismatchException(symbol, self.predicates[symbol], arity)

    def __hash__(self) -> int:
        return hash(self.name)


ARITH = Signature(
    name="arith",
    functions={"0": 0, "S": 1, "+": 2, "*": 2},
    bound_relation="<",
)

ARITH_PLUS = Signature(
    name="arith+",
    functions={"0": 0, "S": 1, "+": 2, "*": 2, "exp": 2},
    bound_relation="<",
)

SET = Signature(
    name="set",
    predicates={"in": 2},
    bound_relation="in",
)

SIGNATURES: dict[str, Signature] = {sig.name: sig for sig in (ARITH, ARITH_PLUS, SET)}


def get_signature(name: str) -> Signature:
    """
    Look up a built-in signature by name.

    Raises:
        UnknownSymbolException: If no signature has that name
    """
    try:
        return SIGNATURES[name]
    except KeyError:
        raise UnknownSymbolException(name, "signatures") from None


def is_arithmetic(signature: Signature) -> bool:
    return signature.bound_relation == "<"
