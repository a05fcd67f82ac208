"""
Syntactic operations on terms and formulas.

Free variables, capture-avoiding substitution, fresh names, Δ0 detection
and signature checking. All functions are pure; derived values that are
expensive on large translated formulas are cached on the nodes.
"""

import logging
from itertools import count
from typing import Iterable, Mapping, Optional

from src.domain.models.exceptions import (
    MalformedFormulaException,
    SignatureMismatchException,
)
from src.domain.models.formula import (
    App,
    Atom,
    And,
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
    node_cache,
)
from src.domain.models.signature import Signature

logger = logging.getLogger(__name__)


def term_vars(term: Term) -> frozenset[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    return frozenset().union(*(term_vars(arg) for arg in term.args))


def term_symbols(term: Term) -> Iterable[tuple[str, int]]:
    """Yield (symbol, arity) for every application inside a term."""
    if isinstance(term, App):
        yield term.symbol, len(term.args)
        for arg in term.args:
            yield from term_symbols(arg)


def free_vars(formula: Formula) -> frozenset[str]:
    """
    Free variables of a formula.

    Args:
        formula: Any formula

    Returns:
        Names occurring free
    """
    return node_cache(formula, "_free_vars", lambda: _free_vars(formula))


def _free_vars(formula: Formula) -> frozenset[str]:
    match formula:
        case Atom(args=args) | Macro(args=args):
            return frozenset().union(*(term_vars(arg) for arg in args))
        case Eq(left=left, right=right):
            return term_vars(left) | term_vars(right)
        case Falsum():
            return frozenset()
        case And(left=left, right=right) | Or(left=left, right=right):
            return free_vars(left) | free_vars(right)
        case Implies(antecedent=left, consequent=right):
            return free_vars(left) | free_vars(right)
        case Forall(var=var, body=body) | Exists(var=var, body=body):
            return free_vars(body) - {var}
        case BForall(var=var, bound=bound, body=body) | BExists(
            var=var, bound=bound, body=body
        ):
            return (free_vars(body) - {var}) | term_vars(bound.term)
    raise MalformedFormulaException(f"Not a formula: {formula!r}")


def variables(formula: Formula) -> frozenset[str]:
    """
    Every variable name used in a formula, free or bound.

    Macro bodies are closed templates and are not looked into.
    """
    return node_cache(formula, "_variables", lambda: _variables(formula))


def _variables(formula: Formula) -> frozenset[str]:
    match formula:
        case Forall(var=var, body=body) | Exists(var=var, body=body):
            return variables(body) | {var}
        case BForall(var=var, bound=bound, body=body) | BExists(
            var=var, bound=bound, body=body
        ):
            return variables(body) | {var} | term_vars(bound.term)
        case And(left=left, right=right) | Or(left=left, right=right):
            return variables(left) | variables(right)
        case Implies(antecedent=left, consequent=right):
            return variables(left) | variables(right)
    return free_vars(formula)


def fresh_variable(base: str, avoid: Iterable[str]) -> str:
    """
    Return base_k for the least k ≥ 1 not in avoid.

    Args:
        base: Name to derive from; an existing _k suffix is dropped
        avoid: Names that must not be returned

    Returns:
        A fresh variable name
    """
    taken = set(avoid)
    stem, _, suffix = base.rpartition("_")
    if not (stem and suffix.isdigit()):
        stem = base
    for k in count(1):
        candidate = f"{stem}_{k}"
        if candidate not in taken:
            return candidate
    raise AssertionError("unreachable")


class FreshNames:
    """
    Deterministic fresh-name supply confined to one translation.

    Attributes:
        taken: Names already in use, extended by every name handed out
    """

    def __init__(self, avoid: Iterable[str] = ()) -> None:
        self.taken: set[str] = set(avoid)

    def next(self, base: str) -> str:
        name = fresh_variable(base, self.taken)
        self.taken.add(name)
        return name


def substitute_term(term: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if not term.args:
        return term
    return App(term.symbol, tuple(substitute_term(arg, mapping) for arg in term.args))


def substitute_many(formula: Formula, mapping: Mapping[str, Term]) -> Formula:
    """
    Simultaneous capture-avoiding substitution.

    A bound variable that would capture a variable of a substituted term is
    renamed to a fresh name first.

    Args:
        formula: Formula to substitute into
        mapping: Variable names to replacement terms

    Returns:
        The substituted formula (the same object when nothing changes)
    """
    active = {name: term for name, term in mapping.items() if name in free_vars(formula)}
    if not active:
        return formula

    match formula:
        case Atom(predicate=predicate, args=args):
            return Atom(predicate, tuple(substitute_term(arg, active) for arg in args))
        case Eq(left=left, right=right):
            return Eq(substitute_term(left, active), substitute_term(right, active))
        case Macro():
            return formula.instantiate(
                tuple(substitute_term(arg, active) for arg in formula.args)
            )
        case And(left=left, right=right):
            return And(substitute_many(left, active), substitute_many(right, active))
        case Or(left=left, right=right):
            return Or(substitute_many(left, active), substitute_many(right, active))
        case Implies(antecedent=left, consequent=right):
            return Implies(substitute_many(left, active), substitute_many(right, active))
        case Forall(var=var, body=body) | Exists(var=var, body=body):
            var, body = _rebind(var, body, active)
            return type(formula)(var, substitute_many(body, active))
        case BForall(var=var, bound=bound, body=body) | BExists(
            var=var, bound=bound, body=body
        ):
            new_bound = Bound(bound.relation, substitute_term(bound.term, active))
            inner = {k: t for k, t in active.items() if k != var}
            var, body = _rebind(var, body, inner)
            return type(formula)(var, new_bound, substitute_many(body, inner))
    raise MalformedFormulaException(f"Not a formula: {formula!r}")


def _rebind(
    var: str, body: Formula, mapping: dict[str, Term]
) -> tuple[str, Formula]:
    """
    Drop var from mapping and rename it when a replacement would be captured.
    """
    mapping.pop(var, None)
    body_free = free_vars(body)
    captured = any(
        var in term_vars(term) for name, term in mapping.items() if name in body_free
    )
    if not captured:
        return var, body
    avoid = set(body_free) | variables(body) | {var}
    for term in mapping.values():
        avoid |= term_vars(term)
    renamed = fresh_variable(var, avoid)
    logger.debug(f"Renaming bound variable {var} to {renamed}")
    return renamed, substitute_many(body, {var: Var(renamed)})


def substitute(
    formula: Formula,
    var: str,
    term: Term,
    signature: Optional[Signature] = None,
) -> Formula:
    """
    Capture-avoiding substitution formula[var := term].

    Args:
        formula: Formula to substitute into
        var: Variable to replace
        term: Replacement term
        signature: When given, the term must be over this signature

    Returns:
        The substituted formula

    Raises:
        SignatureMismatchException: If the term uses a symbol outside the
            signature
    """
    if signature is not None:
        for symbol, arity in term_symbols(term):
            if signature.functions.get(symbol) != arity:
                raise SignatureMismatchException(signature.name, f"term using '{symbol}'")
    return substitute_many(formula, {var: term})


def expand_macro(macro: Macro) -> Formula:
    """The macro body with parameters replaced by the arguments."""
    return substitute_many(macro.body, dict(zip(macro.params, macro.args)))


def is_delta0(formula: Formula) -> bool:
    """
    True iff every quantifier is bounded (macros count as their bodies).
    """
    return node_cache(formula, "_delta0", lambda: _is_delta0(formula))


def _is_delta0(formula: Formula) -> bool:
    match formula:
        case Forall() | Exists():
            return False
        case Macro(body=body):
            return is_delta0(body)
        case And(left=left, right=right) | Or(left=left, right=right):
            return is_delta0(left) and is_delta0(right)
        case Implies(antecedent=left, consequent=right):
            return is_delta0(left) and is_delta0(right)
        case BForall(body=body) | BExists(body=body):
            return is_delta0(body)
    return True


def formula_depth(formula: Formula) -> int:
    match formula:
        case And(left=left, right=right) | Or(left=left, right=right):
            return 1 + max(formula_depth(left), formula_depth(right))
        case Implies(antecedent=left, consequent=right):
            return 1 + max(formula_depth(left), formula_depth(right))
        case Forall(body=body) | Exists(body=body) | BForall(body=body) | BExists(
            body=body
        ):
            return 1 + formula_depth(body)
    return 0


def formula_size(formula: Formula) -> int:
    """Number of nodes, counting a macro as one node."""
    match formula:
        case And(left=left, right=right) | Or(left=left, right=right):
            return 1 + formula_size(left) + formula_size(right)
        case Implies(antecedent=left, consequent=right):
            return 1 + formula_size(left) + formula_size(right)
        case Forall(body=body) | Exists(body=body) | BForall(body=body) | BExists(
            body=body
        ):
            return 1 + formula_size(body)
    return 1


def check_formula(formula: Formula, signature: Signature) -> None:
    """
    Check that a formula is over a signature and well scoped.

    Raises:
        UnknownSymbolException: For symbols outside the signature
        ArityMismatchException: For wrong arities
        MalformedFormulaException: For a bound mentioning its own variable
            or a macro whose body has undeclared free variables
    """
    match formula:
        case Atom(predicate=predicate, args=args):
            signature.check_predicate(predicate, len(args))
            _check_terms(args, signature)
        case Eq(left=left, right=right):
            _check_terms((left, right), signature)
        case Macro(params=params, args=args, body=body):
            if len(params) != len(args):
                raise MalformedFormulaException(
                    f"Macro '{formula.name}' takes {len(params)} arguments"
                )
            if not free_vars(body) <= set(params):
                raise MalformedFormulaException(
                    f"Macro '{formula.name}' has undeclared free variables"
                )
            _check_terms(args, signature)
        case And(left=left, right=right) | Or(left=left, right=right):
            check_formula(left, signature)
            check_formula(right, signature)
        case Implies(antecedent=left, consequent=right):
            check_formula(left, signature)
            check_formula(right, signature)
        case Forall(body=body) | Exists(body=body):
            check_formula(body, signature)
        case BForall(var=var, bound=bound, body=body) | BExists(
            var=var, bound=bound, body=body
        ):
            if bound.relation != signature.bound_relation:
                raise SignatureMismatchException(
                    signature.name, f"bound relation '{bound.relation}'"
                )
            if var in term_vars(bound.term):
                raise MalformedFormulaException(
                    f"Bound of '{var}' mentions the bound variable"
                )
            _check_terms((bound.term,), signature)
            check_formula(body, signature)


def _check_terms(terms: Iterable[Term], signature: Signature) -> None:
    for term in terms:
        for symbol, arity in term_symbols(term):
            signature.check_function(symbol, arity)
