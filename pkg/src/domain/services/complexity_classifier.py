"""
The E_n / U_n complexity classifier.

E_0 = U_0 is the class of bounded formulas. For n ≥ 1, E_n is the closure
of U_{n-1} under ∧, ∨, bounded quantifiers and ∃, and U_n is the closure of
E_{n-1} under ∧, ∨, bounded quantifiers, ∀ and ψ → φ with ψ in E_{n-1}.

classify computes both least levels in one structural pass. in_closure
decides membership by matching the closure rules directly and serves as
an independent oracle for classify.
"""

import logging

from src.domain.models.complexity import ComplexityLevel, HierarchyClass
from src.domain.models.formula import (
    And,
    BExists,
    BForall,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Macro,
    Or,
    Var,
    node_cache,
)
from src.domain.services.formula_syntax import is_delta0

logger = logging.getLogger(__name__)


def classify(formula: Formula) -> ComplexityLevel:
    """
    Least syntactic E and U levels of a formula.

    Args:
        formula: Well-formed formula

    Returns:
        The complexity level
    """
    e_level, u_level = _levels(formula)
    return ComplexityLevel(e_level=e_level, u_level=u_level)


def _levels(formula: Formula) -> tuple[int, int]:
    return node_cache(formula, "_levels", lambda: _compute_levels(formula))


def _compute_levels(formula: Formula) -> tuple[int, int]:
    if is_delta0(formula):
        return 0, 0
    match formula:
        case Macro(body=body):
            return _levels(body)
        case And(left=left, right=right) | Or(left=left, right=right):
            (e1, u1), (e2, u2) = _levels(left), _levels(right)
            e, u = max(e1, e2), max(u1, u2)
        case BForall(body=body) | BExists(body=body):
            e, u = _levels(body)
        case Exists(body=body):
            e = max(1, _levels(body)[0])
            u = e + 1
        case Forall(body=body):
            u = max(1, _levels(body)[1])
            e = u + 1
        case Implies(antecedent=antecedent, consequent=consequent):
            u = max(1, _levels(antecedent)[0] + 1, _levels(consequent)[1])
            e = u + 1
        case _:
            raise TypeError(f"Not a formula: {formula!r}")
    return min(e, u + 1), min(u, e + 1)


def member_of(formula: Formula, cls: HierarchyClass, n: int) -> bool:
    """
    True iff the formula lies in E_n (cls 'E') or U_n (cls 'U').
    """
    return classify(formula).level(cls) <= n


def in_closure(formula: Formula, cls: HierarchyClass, n: int) -> bool:
    """
    Decide membership in E_n or U_n by the closure rules alone.

    Args:
        formula: Formula to test
        cls: 'E' or 'U'
        n: Level

    Returns:
        True iff some derivation by the closure rules puts the formula in
        the class
    """
    if is_delta0(formula):
        return True
    if n == 0:
        return False
    if isinstance(formula, Macro):
        return in_closure(formula.body, cls, n)
    # the base of each closure is the other class one level down
    other: HierarchyClass = "U" if cls == "E" else "E"
    if in_closure(formula, other, n - 1):
        return True
    match formula:
        case And(left=left, right=right) | Or(left=left, right=right):
            return in_closure(left, cls, n) and in_closure(right, cls, n)
        case BForall(body=body) | BExists(body=body):
            return in_closure(body, cls, n)
        case Exists(body=body):
            return cls == "E" and in_closure(body, "E", n)
        case Forall(body=body):
            return cls == "U" and in_closure(body, "U", n)
        case Implies(antecedent=antecedent, consequent=consequent):
            return (
                cls == "U"
                and in_closure(antecedent, "E", n - 1)
                and in_closure(consequent, "U", n)
            )
    return False


def least_closure_level(formula: Formula, cls: HierarchyClass, limit: int) -> int | None:
    """Least n ≤ limit with in_closure true, or None."""
    for n in range(limit + 1):
        if in_closure(formula, cls, n):
            return n
    return None


def prenex_template(k: int, first: HierarchyClass, variables: tuple[str, ...] = ()) -> Formula:
    """
    Prenex formula with k alternating unbounded quantifier blocks.

    The blocks start with ∃ when first is 'E' and with ∀ when it is 'U';
    the matrix is the atomic formula x_k = x_k for the innermost
    variable (x = x when k is 0).

    Args:
        k: Number of blocks
        first: Quantifier of the outermost block
        variables: Names for the quantified variables (x1, x2, ... by default)

    Returns:
        The template formula
    """
    names = variables or tuple(f"x{i}" for i in range(1, k + 1))
    last = names[k - 1] if k else "x"
    formula: Formula = Eq(Var(last), Var(last))
    existential = (first == "E") == (k % 2 == 1)
    for name in reversed(names[:k]):
        formula = Exists(name, formula) if existential else Forall(name, formula)
        existential = not existential
    return formula
