"""
Canonical text rendering of terms and formulas.

The output is accepted by the parser and parses back to the same AST.
Binary connectives and '+', '*' associate to the left, '->' to the right;
quantifiers extend as far right as possible, so a quantifier that is an
operand of a connective is always parenthesised.
"""

from src.domain.models.formula import (
    And,
    Atom,
    BExists,
    BForall,
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
    is_negation,
)
from src.domain.services.formula_syntax import expand_macro

_QUANT, _IMPL, _DISJ, _CONJ, _NEG, _ATOM = range(6)
_SUM, _PROD, _PRIMARY = range(1, 4)


def format_term(term: Term) -> str:
    return _term(term, 0)


def _term(term: Term, context: int) -> str:
    if isinstance(term, Var):
        return term.name
    if term.symbol in ("+", "*"):
        level = _SUM if term.symbol == "+" else _PROD
        left, right = term.args
        text = f"{_term(left, level)} {term.symbol} {_term(right, level + 1)}"
        return f"({text})" if level < context else text
    if not term.args:
        return term.symbol
    return f"{term.symbol}({', '.join(_term(arg, 0) for arg in term.args)})"


def print_formula(formula: Formula, abbrev: bool = False) -> str:
    """
    Render a formula as canonical text.

    Args:
        formula: Formula to render
        abbrev: Print macros as name(args) instead of their expansion

    Returns:
        The text
    """
    return _formula(formula, _QUANT, abbrev)


def _formula(formula: Formula, context: int, abbrev: bool) -> str:
    level, text = _render(formula, abbrev, context)
    return f"({text})" if level < context else text


def _render(formula: Formula, abbrev: bool, context: int) -> tuple[int, str]:
    match formula:
        case Falsum():
            return _ATOM, "false"
        case Eq(left=left, right=right):
            return _ATOM, f"{format_term(left)} = {format_term(right)}"
        case Atom(predicate="in", args=(left, right)):
            return _ATOM, f"{format_term(left)} in {format_term(right)}"
        case Atom(predicate=predicate, args=args):
            return _ATOM, f"{predicate}({', '.join(format_term(a) for a in args)})"
        case Macro() if abbrev:
            args = ", ".join(format_term(arg) for arg in formula.args)
            return _ATOM, f"{formula.name}({args})"
        case Macro():
            expanded = expand_macro(formula)
            return _render(expanded, abbrev, context)
        case Implies(antecedent=operand) if is_negation(formula):
            return _NEG, "~" + _formula(operand, _NEG, abbrev)
        case And(left=left, right=right):
            return _CONJ, (
                f"{_formula(left, _CONJ, abbrev)} /\\ {_formula(right, _NEG, abbrev)}"
            )
        case Or(left=left, right=right):
            return _DISJ, (
                f"{_formula(left, _DISJ, abbrev)} \\/ {_formula(right, _CONJ, abbrev)}"
            )
        case Implies(antecedent=left, consequent=right):
            return _IMPL, (
                f"{_formula(left, _DISJ, abbrev)} -> {_formula(right, _IMPL, abbrev)}"
            )
        case Forall(var=var, body=body):
            return _QUANT, f"forall {var}. {_formula(body, _QUANT, abbrev)}"
        case Exists(var=var, body=body):
            return _QUANT, f"exists {var}. {_formula(body, _QUANT, abbrev)}"
        case BForall(var=var, bound=bound, body=body):
            head = f"forall {var} {bound.relation} {format_term(bound.term)}"
            return _QUANT, f"{head}. {_formula(body, _QUANT, abbrev)}"
        case BExists(var=var, bound=bound, body=body):
            head = f"exists {var} {bound.relation} {format_term(bound.term)}"
            return _QUANT, f"{head}. {_formula(body, _QUANT, abbrev)}"
    raise TypeError(f"Not a formula: {formula!r}")
