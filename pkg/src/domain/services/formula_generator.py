"""
Seeded random generation of well-scoped formulas.

Generated formulas feed the parse/print round-trip corpus and the Δ0
totality corpus. In Δ0 mode every quantifier is bounded and every bound
is a variable, 0 or S of a variable, so a bounded range never exceeds the
largest assigned value plus the quantifier depth.
"""

import logging
import random
from typing import Iterator, Optional

from src.domain.models.formula import (
    ZERO,
    And,
    App,
    Atom,
    BExists,
    BForall,
    Bound,
    Eq,
    Exists,
    Falsum,
    Forall,
    Formula,
    Implies,
    Or,
    Term,
    Var,
    neg,
)
from src.domain.models.signature import Signature, is_arithmetic

logger = logging.getLogger(__name__)

DEFAULT_VARIABLES: tuple[str, ...] = ("x", "y", "z", "u", "w")


class FormulaGenerator:
    """
    Random formula source over one signature.

    Attributes:
        signature: Signature of the generated formulas
        seed: Seed of the private random stream
        max_depth: Largest nesting depth of connectives and quantifiers
        delta0: Generate bounded quantifiers only
        variables: Variable pool; free variables are drawn from it
    """

    def __init__(
        self,
        signature: Signature,
        seed: int = 0,
        max_depth: int = 4,
        delta0: bool = False,
        variables: tuple[str, ...] = DEFAULT_VARIABLES,
    ) -> None:
        self.signature = signature
        self.seed = seed
        self.max_depth = max_depth
        self.delta0 = delta0
        self.variables = variables
        self.rng = random.Random(seed)
        self.arithmetic = is_arithmetic(signature)

    def generate(self) -> Formula:
        """One random formula."""
        return self._formula(self.max_depth)

    def generate_many(self, count: int) -> Iterator[Formula]:
        """count random formulas from the same stream."""
        logger.debug(
            f"Generating {count} formulas over {self.signature.name} "
            f"(seed {self.seed}, delta0 {self.delta0})"
        )
        for _ in range(count):
            yield self.generate()

    # ==================== Terms ====================

    def _variable(self) -> Var:
        return Var(self.rng.choice(self.variables))

    def _term(self, depth: int) -> Term:
        if not self.arithmetic:
            return self._variable()
        if depth <= 0 or self.rng.random() < 0.4:
            return ZERO if self.rng.random() < 0.2 else self._variable()
        symbols = ["S", "+", "*"]
        if "exp" in self.signature.functions and not self.delta0:
            symbols.append("exp")
        symbol = self.rng.choice(symbols)
        arity = self.signature.functions[symbol]
        return App(symbol, tuple(self._term(depth - 1) for _ in range(arity)))

    def _bound_term(self, var: str) -> Optional[Term]:
        """Bound for a quantifier over var, or None when no other variable is available."""
        others = [name for name in self.variables if name != var]
        if not others:
            return None
        other = Var(self.rng.choice(others))
        if not self.arithmetic:
            return other
        roll = self.rng.random()
        if roll < 0.1:
            return ZERO
        if roll < 0.5:
            return App("S", (other,))
        return other

    # ==================== Formulas ====================

    def _atomic(self) -> Formula:
        roll = self.rng.random()
        if roll < 0.05:
            return Falsum()
        term_depth = 1 if self.delta0 else 2
        if self.arithmetic or roll < 0.35:
            return Eq(self._term(term_depth), self._term(term_depth))
        return Atom("in", (self._variable(), self._variable()))

    def _formula(self, depth: int) -> Formula:
        if depth <= 0 or self.rng.random() < 0.25:
            return self._atomic()
        kind = self.rng.choice(("and", "or", "implies", "not", "quantifier", "quantifier"))
        if kind == "and":
            return And(self._formula(depth - 1), self._formula(depth - 1))
        if kind == "or":
            return Or(self._formula(depth - 1), self._formula(depth - 1))
        if kind == "implies":
            return Implies(self._formula(depth - 1), self._formula(depth - 1))
        if kind == "not":
            return neg(self._formula(depth - 1))
        return self._quantifier(depth)

    def _quantifier(self, depth: int) -> Formula:
        var = self.rng.choice(self.variables)
        universal = self.rng.random() < 0.5
        bounded = self.delta0 or self.rng.random() < 0.5
        body = self._formula(depth - 1)
        if bounded:
            term = self._bound_term(var)
            if term is not None:
                bound = Bound(self.signature.bound_relation, term)
                return BForall(var, bound, body) if universal else BExists(var, bound, body)
            if self.delta0:
                return body
        return Forall(var, body) if universal else Exists(var, body)


def random_formulas(
    signature: Signature,
    count: int,
    seed: int = 0,
    delta0: bool = False,
    max_depth: int = 4,
) -> list[Formula]:
    """
    A seeded corpus of random formulas.

    Args:
        signature: Signature of the formulas
        count: Number of formulas
        seed: Seed of the random stream
        delta0: Bounded quantifiers only
        max_depth: Largest nesting depth

    Returns:
        The formulas, deterministic given the arguments
    """
    generator = FormulaGenerator(signature, seed=seed, max_depth=max_depth, delta0=delta0)
    return list(generator.generate_many(count))
