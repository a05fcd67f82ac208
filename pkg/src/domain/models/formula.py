"""
First-order terms and formulas.

Terms and formulas are frozen dataclasses. Negation is not a node of its
own: ¬φ is Implies(φ, Falsum()). Bounded quantifiers are first-class so
that Δ0 detection and the complexity classifier stay syntactic.

A Macro is a named closed template applied to argument terms. It stands
for the body with its parameters replaced by the arguments and may carry
an Oracle that decides it directly on the values of the standard model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Optional, Union

BoundRelation = Literal["<", "in"]


@dataclass(frozen=True)
class Var:
    """Variable occurrence."""

    name: str


@dataclass(frozen=True)
class App:
    """
    Function application; constants are applications with no arguments.

    Attributes:
        symbol: Function symbol, e.g. '0', 'S', '+', '*', 'exp'
        args: Argument terms
    """

    symbol: str
    args: tuple[Term, ...] = ()


Term = Union[Var, App]

ZERO = App("0")


@dataclass(frozen=True)
class Atom:
    """Predicate applied to terms (the set-theoretic 'in')."""

    predicate: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Falsum:
    pass


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True)
class Bound:
    """
    Bound specification of a bounded quantifier: '< t' or 'in t'.
    """

    relation: BoundRelation
    term: Term


@dataclass(frozen=True)
class BForall:
    var: str
    bound: Bound
    body: Formula


@dataclass(frozen=True)
class BExists:
    var: str
    bound: Bound
    body: Formula


@dataclass(frozen=True)
class Oracle:
    """
    Computational decision procedure attached to a Macro.

    Attributes:
        name: Label used in logs
        holds: Decides the macro on argument values
        compute: For graph macros, maps the input values to the value of
            the last argument (None when no value satisfies the graph)
        transported: True when the oracle was read through an interpretation
    """

    name: str
    holds: Callable[..., bool]
    compute: Optional[Callable[..., Any]] = None
    transported: bool = False


@dataclass(frozen=True)
class Macro:
    """
    Named template applied to arguments.

    Attributes:
        name: Template name
        params: Parameter names, the only free variables of body
        args: Argument terms, one per parameter
        body: Template body
        oracle: Optional decision procedure on standard-model values
    """

    name: str
    params: tuple[str, ...]
    args: tuple[Term, ...]
    body: Formula
    oracle: Optional[Oracle] = field(default=None, compare=False, repr=False)

    def instantiate(self, args: tuple[Term, ...]) -> Macro:
        """Apply the same template to other arguments."""
        return Macro(self.name, self.params, args, self.body, self.oracle)


Formula = Union[
    Atom, Eq, Falsum, And, Or, Implies, Forall, Exists, BForall, BExists, Macro
]

QUANTIFIERS = (Forall, Exists)
BOUNDED_QUANTIFIERS = (BForall, BExists)
BINARY_CONNECTIVES = (And, Or, Implies)


def neg(formula: Formula) -> Formula:
    """¬φ as φ → ⊥."""
    return Implies(formula, Falsum())


def is_negation(formula: Formula) -> bool:
    return isinstance(formula, Implies) and isinstance(formula.consequent, Falsum)


def template(
    name: str,
    params: tuple[str, ...],
    body: Formula,
    oracle: Optional[Oracle] = None,
) -> Macro:
    """Macro applied to its own parameters."""
    return Macro(name, params, tuple(Var(p) for p in params), body, oracle)


def node_cache(node: object, key: str, compute: Callable[[], Any]) -> Any:
    """
    Cache a derived value on an AST node.

    Nodes are frozen, so the value is stored next to the dataclass fields
    and never takes part in equality or hashing.
    """
    cache = node.__dict__
    if key not in cache:
        object.__setattr__(node, key, compute())
    return cache[key]
