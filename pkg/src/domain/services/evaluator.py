"""
Standard-model evaluation of formulas.

Two structures are supported: the natural numbers with 0, S, +, · and
exp, and the hereditarily finite sets read through their Ackermann codes,
where a ∈ b is bit a of b. Bounded quantifiers range over a finite set
and are always decided. Unbounded quantifiers search the values below a
budget and yield UNKNOWN when the search does not settle them, unless the
evaluation is closed, in which case the domain is taken to be exactly the
values below the budget together with the values oracles compute.

With oracle_mode on, a Macro carrying an Oracle is decided by the oracle
instead of by its body, and a quantifier whose variable is pinned down
by a computing oracle (∃y(G(x, y) ∧ φ) or ∀y(G(x, y) → φ)) is evaluated
at the computed value only.
"""

import logging
from typing import Literal, Mapping, Optional

from src.config.settings import settings
from src.domain.models.exceptions import (
    CapExceededException,
    MissingAssignmentException,
    RangeGuardException,
    ResourceGuardException,
    UnknownSymbolException,
)
from src.domain.models.formula import (
    And,
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
    Macro,
    Or,
    Term,
    Var,
)
from src.domain.models.hf_set import Nat
from src.domain.models.truth import TruthValue
from src.domain.services.formula_syntax import free_vars, term_vars
from src.domain.services.hf_core import eps, power_of_two
from src.domain.services.recursion import members

logger = logging.getLogger(__name__)

StructureKind = Literal["arith", "set"]


def apply_function(symbol: str, values: tuple[Nat, ...]) -> Nat:
    """
    Value of an arithmetic function symbol on natural numbers.

    Raises:
        CapExceededException: If exp would build a number beyond the bit cap
        UnknownSymbolException: For a symbol outside the arithmetic signatures
    """
    match symbol, values:
        case "0", ():
            return 0
        case "S", (x,):
            return x + 1
        case "+", (x, y):
            return x + y
        case "*", (x, y):
            return x * y
        case "exp", (x, y):
            return _power(x, y)
    raise UnknownSymbolException(symbol, "arith+")


def _power(base: Nat, exponent: Nat) -> Nat:
    if base < 2 or exponent == 0:
        return base**exponent
    if base == 2:
        return power_of_two(exponent)
    bits = exponent * (base.bit_length() - 1) + 1
    if bits > settings.bit_cap:
        raise CapExceededException(bits, settings.bit_cap)
    return base**exponent


def _conjuncts(formula: Formula) -> list[Formula]:
    if isinstance(formula, And):
        return _conjuncts(formula.left) + _conjuncts(formula.right)
    return [formula]


def _antecedents(formula: Formula) -> list[Formula]:
    found: list[Formula] = []
    while isinstance(formula, Implies) and not isinstance(formula.consequent, Falsum):
        found.extend(_conjuncts(formula.antecedent))
        formula = formula.consequent
    return found


class Evaluator:
    """
    Three-valued evaluator over one of the two standard structures.

    Attributes:
        structure: 'arith' for the naturals, 'set' for HF codes
        budget: Unbounded quantifiers search the values below it
        oracle_mode: Decide oracle-carrying macros by their oracle
        closed: Treat the values below the budget as the whole domain
    """

    def __init__(
        self,
        structure: StructureKind,
        budget: Optional[int] = None,
        oracle_mode: bool = False,
        closed: bool = False,
    ) -> None:
        self.structure = structure
        self.budget = settings.default_budget if budget is None else budget
        self.oracle_mode = oracle_mode
        self.closed = closed

    def evaluate(self, formula: Formula, env: Optional[Mapping[str, int]] = None) -> TruthValue:
        """
        Evaluate a formula under an assignment of its free variables.

        Raises:
            MissingAssignmentException: If a free variable is unassigned
            ResourceGuardException: If a term value or a bounded range
                exceeds its guard
        """
        assignment = dict(env or {})
        for variable in sorted(free_vars(formula)):
            if variable not in assignment:
                raise MissingAssignmentException(variable)
        return self._eval(formula, assignment)

    # ==================== Terms ====================

    def term_value(self, term: Term, env: Mapping[str, int]) -> int:
        if isinstance(term, Var):
            if term.name not in env:
                raise MissingAssignmentException(term.name)
            return env[term.name]
        if self.structure == "set":
            raise UnknownSymbolException(term.symbol, "set")
        return apply_function(term.symbol, tuple(self.term_value(a, env) for a in term.args))

    # ==================== Formulas ====================

    def _eval(self, formula: Formula, env: dict[str, int]) -> TruthValue:
        match formula:
            case Falsum():
                return TruthValue.FALSE
            case Eq(left=left, right=right):
                return TruthValue.of(self.term_value(left, env) == self.term_value(right, env))
            case Atom(predicate=predicate, args=args):
                return self._atom(predicate, args, env)
            case And(left=left, right=right):
                first = self._eval(left, env)
                if first is TruthValue.FALSE:
                    return first
                return first.conjoin(self._eval(right, env))
            case Or(left=left, right=right):
                first = self._eval(left, env)
                if first is TruthValue.TRUE:
                    return first
                return first.disjoin(self._eval(right, env))
            case Implies(antecedent=antecedent, consequent=consequent):
                first = self._eval(antecedent, env)
                if first is TruthValue.FALSE:
                    return TruthValue.TRUE
                return first.implies(self._eval(consequent, env))
            case BForall(var=var, bound=bound, body=body):
                return self._bounded(var, bound, body, env, universal=True)
            case BExists(var=var, bound=bound, body=body):
                return self._bounded(var, bound, body, env, universal=False)
            case Forall(var=var, body=body):
                return self._unbounded(var, body, env, universal=True)
            case Exists(var=var, body=body):
                return self._unbounded(var, body, env, universal=False)
            case Macro():
                return self._macro(formula, env)
        raise TypeError(f"Not a formula: {formula!r}")

    def _atom(self, predicate: str, args: tuple[Term, ...], env: dict[str, int]) -> TruthValue:
        if self.structure != "set" or predicate != "in" or len(args) != 2:
            raise UnknownSymbolException(predicate, self.structure)
        left, right = (self.term_value(a, env) for a in args)
        return TruthValue.of(eps(left, right))

    def _range(self, bound: Bound, env: dict[str, int]):
        limit = self.term_value(bound.term, env)
        if bound.relation == "in":
            return members(limit)
        if limit > settings.bounded_search_limit:
            raise RangeGuardException("bound", limit, settings.bounded_search_limit)
        return range(limit)

    def _bounded(
        self, var: str, bound: Bound, body: Formula, env: dict[str, int], universal: bool
    ) -> TruthValue:
        stop = TruthValue.FALSE if universal else TruthValue.TRUE
        return self._search(var, self._range(bound, env), body, env, stop, exhausted=stop.negate())

    def _unbounded(self, var: str, body: Formula, env: dict[str, int], universal: bool) -> TruthValue:
        stop = TruthValue.FALSE if universal else TruthValue.TRUE
        if self.oracle_mode:
            pinned = self._pinned_value(var, body, env, universal)
            if pinned is not None:
                return pinned
        exhausted = stop.negate() if self.closed else TruthValue.UNKNOWN
        return self._search(var, range(self.budget), body, env, stop, exhausted)

    def _search(self, var, values, body, env, stop: TruthValue, exhausted: TruthValue) -> TruthValue:
        saved = env.get(var)
        had = var in env
        result = exhausted
        try:
            for value in values:
                env[var] = value
                outcome = self._eval(body, env)
                if outcome is stop:
                    return stop
                if outcome is TruthValue.UNKNOWN:
                    result = TruthValue.UNKNOWN
            return result
        finally:
            if had:
                env[var] = saved
            else:
                env.pop(var, None)

    def _pinned_value(
        self, var: str, body: Formula, env: dict[str, int], universal: bool
    ) -> Optional[TruthValue]:
        """
        Evaluate ∃var(G ∧ φ) or ∀var(G → φ) at the value G computes.

        Returns None when no computing oracle pins var or the oracle hits
        a guard; the caller then searches normally.
        """
        candidates = _antecedents(body) if universal else _conjuncts(body)
        for candidate in candidates:
            if not self._computes(candidate, var, env):
                continue
            inputs = tuple(self.term_value(a, env) for a in candidate.args[:-1])
            try:
                value = candidate.oracle.compute(*inputs)
            except ResourceGuardException as exc:
                logger.debug(f"Oracle {candidate.oracle.name} hit a guard: {exc.message}")
                return None
            if value is None:
                return TruthValue.of(universal)
            return self._search(
                var, (value,), body, env,
                stop=TruthValue.of(not universal),
                exhausted=TruthValue.of(universal),
            )
        return None

    def _computes(self, candidate: Formula, var: str, env: Mapping[str, int]) -> bool:
        if not isinstance(candidate, Macro) or candidate.oracle is None:
            return False
        if candidate.oracle.compute is None or not candidate.args:
            return False
        if candidate.args[-1] != Var(var):
            return False
        for arg in candidate.args[:-1]:
            names = term_vars(arg)
            if var in names or not names <= env.keys():
                return False
        return True

    def _macro(self, macro: Macro, env: dict[str, int]) -> TruthValue:
        values = tuple(self.term_value(a, env) for a in macro.args)
        if self.oracle_mode and macro.oracle is not None:
            try:
                return TruthValue.of(bool(macro.oracle.holds(*values)))
            except ResourceGuardException as exc:
                logger.debug(f"Oracle {macro.oracle.name} hit a guard, evaluating the body: {exc.message}")
        return self._eval(macro.body, dict(zip(macro.params, values)))


def eval_arith(
    formula: Formula,
    env: Optional[Mapping[str, int]] = None,
    budget: Optional[int] = None,
    oracle_mode: bool = False,
    closed: bool = False,
) -> TruthValue:
    """Evaluate an arithmetic formula over the natural numbers."""
    return Evaluator("arith", budget, oracle_mode, closed).evaluate(formula, env)


def eval_set(
    formula: Formula,
    env: Optional[Mapping[str, int]] = None,
    budget: Optional[int] = None,
    oracle_mode: bool = False,
    closed: bool = False,
) -> TruthValue:
    """Evaluate a set-theoretic formula over HF codes."""
    return Evaluator("set", budget, oracle_mode, closed).evaluate(formula, env)
