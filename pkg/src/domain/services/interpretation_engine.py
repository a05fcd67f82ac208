"""
Translation of formulas along an interpretation.

translate relativizes quantifiers to the domain formula (∀ through →, ∃
through ∧), replaces predicates by their templates and unfolds function
applications innermost first:

    P(f(s), t)  ↦  ∃y (π_∀(y) ∧ π_f(s, y) ∧ π_P(y, t))

Bounded quantifiers are rendered according to the bound strategy of the
interpretation, so that a bounded source formula stays bounded, or E_1
where the target has no bounded counterpart. Macros are translated once
per interpretation and carry their oracle across, read through the
interpretation's value maps.
"""

import logging
from typing import Callable, Iterable, Optional

from src.domain.models.exceptions import SignatureMismatchException, UnknownSymbolException
from src.domain.models.formula import (
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
    Macro,
    Or,
    Oracle,
    Term,
    Var,
    template,
)
from src.domain.models.interpretation import InterpretationSpec
from src.domain.models.signature import Signature
from src.domain.services.evaluator import apply_function
from src.domain.services.formula_syntax import FreshNames, expand_macro, variables

logger = logging.getLogger(__name__)

# (interpretation name, template name, parameters) -> (source body, source
# oracle, translated template); a new source template replaces the entry
_template_cache: dict[tuple[str, str, tuple[str, ...]], tuple[Formula, Optional[Oracle], Macro]] = {}


def instantiate(pattern: Macro, args: tuple[Term, ...]) -> Formula:
    """
    Apply a template to arguments.

    Templates with an oracle stay macros so that the oracle can be used;
    the others are expanded in place.
    """
    applied = pattern.instantiate(args)
    if pattern.oracle is None:
        return expand_macro(applied)
    return applied


def translate(spec: InterpretationSpec, formula: Formula) -> Formula:
    """
    Translate a source formula into the target language.

    Args:
        spec: The interpretation
        formula: Formula over spec.source

    Returns:
        Formula over spec.target with the same free variables

    Raises:
        UnknownSymbolException: If a symbol has no template in the maps
    """
    return _Translator(spec, FreshNames(variables(formula))).formula(formula)


class _Translator:
    def __init__(self, spec: InterpretationSpec, fresh: FreshNames) -> None:
        self.spec = spec
        self.fresh = fresh

    def domain(self, var: str) -> Formula:
        return instantiate(self.spec.domain, (Var(var),))

    def formula(self, formula: Formula) -> Formula:
        spec = self.spec
        match formula:
            case Falsum():
                return formula
            case And(left=left, right=right):
                return And(self.formula(left), self.formula(right))
            case Or(left=left, right=right):
                return Or(self.formula(left), self.formula(right))
            case Implies(antecedent=antecedent, consequent=consequent):
                return Implies(self.formula(antecedent), self.formula(consequent))
            case Forall(var=var, body=body):
                return Forall(var, Implies(self.domain(var), self.formula(body)))
            case Exists(var=var, body=body):
                return Exists(var, And(self.domain(var), self.formula(body)))
            case Eq(left=left, right=right):
                if not spec.unfold_terms:
                    return formula
                bindings: list[tuple[str, Formula]] = []
                left_var, right_var = self.unfold(left, bindings), self.unfold(right, bindings)
                return self.wrap(bindings, Eq(left_var, right_var))
            case Atom(predicate=predicate, args=args):
                pattern = spec.predicate_map.get(predicate)
                if pattern is None:
                    raise UnknownSymbolException(predicate, spec.name)
                if not spec.unfold_terms:
                    return instantiate(pattern, args)
                bindings = []
                names = tuple(self.unfold(arg, bindings) for arg in args)
                return self.wrap(bindings, instantiate(pattern, names))
            case Macro(args=args):
                translated = translate_template(spec, formula)
                if not spec.unfold_terms:
                    return translated.instantiate(args)
                bindings = []
                names = tuple(self.unfold(arg, bindings) for arg in args)
                return self.wrap(bindings, translated.instantiate(names))
            case BForall() | BExists():
                return self.bounded(formula)
        raise TypeError(f"Not a formula: {formula!r}")

    # ==================== Terms ====================

    def unfold(self, term: Term, bindings: list[tuple[str, Formula]]) -> Var:
        """
        Replace a term by a variable, recording one graph per application.

        Arguments are unfolded before the application that uses them, so
        bindings lists the innermost application first.
        """
        if isinstance(term, Var):
            return term
        graph = self.spec.function_map.get(term.symbol)
        if graph is None:
            raise UnknownSymbolException(term.symbol, self.spec.name)
        args = tuple(self.unfold(arg, bindings) for arg in term.args)
        value = self.fresh.next("y")
        bindings.append((value, instantiate(graph, (*args, Var(value)))))
        return Var(value)

    def wrap(self, bindings: list[tuple[str, Formula]], core: Formula) -> Formula:
        for value, graph in reversed(bindings):
            core = Exists(value, And(self.domain(value), And(graph, core)))
        return core

    # ==================== Bounded quantifiers ====================

    def bounded(self, formula: BForall | BExists) -> Formula:
        spec = self.spec
        if spec.bounded == "compose":
            outer, inner = spec.components
            return translate(outer, translate(inner, formula))
        universal = isinstance(formula, BForall)
        var, bound = formula.var, formula.bound
        body = self.formula(formula.body)
        node = BForall if universal else BExists

        match spec.bounded:
            case "keep":
                return node(var, bound, body)
            case "ackermann":
                # SET terms are variables
                w = bound.term
                if universal:
                    guard = instantiate(spec.complement, (Var(var), w))
                    return BForall(var, Bound("<", w), Or(guard, body))
                member = instantiate(spec.predicate_map["in"], (Var(var), w))
                return BExists(var, Bound("<", w), And(member, body))
            case "ordinal":
                bindings: list[tuple[str, Formula]] = []
                w = self.unfold(bound.term, bindings)
                return self.wrap(bindings, node(var, Bound("in", w), body))
            case "below":
                bindings = []
                w = self.unfold(bound.term, bindings)
                below_set = self.fresh.next("b")
                below = instantiate(spec.below, (w, Var(below_set)))
                ranged = node(var, Bound("in", Var(below_set)), body)
                core = Exists(below_set, And(self.domain(below_set), And(below, ranged)))
                return self.wrap(bindings, core)
        raise ValueError(f"Unknown bound strategy {spec.bounded!r}")


# ==================== Templates and oracles ====================


def translate_template(spec: InterpretationSpec, macro: Macro) -> Macro:
    """
    Translate a macro's template once per interpretation.

    The result is a template over the same parameters whose oracle, when
    the source template has one, decides the translation on target values.
    """
    key = (spec.name, macro.name, macro.params)
    cached = _template_cache.get(key)
    if cached is not None and cached[0] is macro.body and cached[1] is macro.oracle:
        return cached[2]
    body = translate(spec, macro.body)
    translated = template(
        f"{macro.name}^{spec.name}", macro.params, body, transport(spec, macro.oracle)
    )
    _template_cache[key] = (macro.body, macro.oracle, translated)
    return translated


def transport(spec: InterpretationSpec, oracle: Optional[Oracle]) -> Optional[Oracle]:
    """
    Read a source-side oracle on target values.

    holds is false on values outside the domain; compute maps its result
    back to the target representation.
    """
    if oracle is None:
        return None

    def sources(values: tuple) -> Optional[tuple]:
        read = tuple(spec.to_source(v) for v in values)
        return None if any(r is None for r in read) else read

    def holds(*values) -> bool:
        read = sources(values)
        return read is not None and oracle.holds(*read)

    compute: Optional[Callable] = None
    if oracle.compute is not None:
        source_compute = oracle.compute

        def compute(*values):
            read = sources(values)
            if read is None:
                return None
            result = source_compute(*read)
            return None if result is None else spec.from_source(result)

    return Oracle(f"{oracle.name}^{spec.name}", holds, compute, transported=True)


# ==================== Composition and identity ====================


def compose(outer: InterpretationSpec, inner: InterpretationSpec) -> InterpretationSpec:
    """
    The interpretation that translates along inner, then along outer.

    Raises:
        SignatureMismatchException: If inner does not land in outer's source
    """
    if inner.target.name != outer.source.name:
        raise SignatureMismatchException(outer.source.name, inner.target.name)

    domain_body = And(
        instantiate(outer.domain, (Var("x"),)), translate(outer, inner.domain)
    )

    def read(value):
        middle = outer.to_source(value)
        return None if middle is None else inner.to_source(middle)

    def write(value):
        return outer.from_source(inner.from_source(value))

    name = f"{outer.name}∘{inner.name}"
    logger.debug(f"Composing {name}")
    return InterpretationSpec(
        name=name,
        source=inner.source,
        target=outer.target,
        domain=template("dom", ("x",), domain_body),
        predicate_map={p: translate(outer, m) for p, m in inner.predicate_map.items()},
        function_map={f: translate(outer, m) for f, m in inner.function_map.items()},
        bounded="compose",
        unfold_terms=inner.unfold_terms or outer.unfold_terms,
        to_source=read,
        from_source=write,
        components=(outer, inner),
    )


def _value_oracle(symbol: str) -> Oracle:
    def holds(*values: int) -> bool:
        return values[-1] == apply_function(symbol, values[:-1])

    def compute(*values: int) -> int:
        return apply_function(symbol, values)

    return Oracle(f"graph_{symbol}", holds, compute)


def identity(signature: Signature) -> InterpretationSpec:
    """
    Interpretation of a signature in itself with domain x = x.

    Terms are kept as they are; the graph templates are only used by the
    obligations, and carry the arithmetic as their oracle.
    """
    function_map = {}
    for symbol, arity in signature.functions.items():
        params = tuple(f"x{i}" for i in range(arity))
        graph = Eq(App(symbol, tuple(Var(p) for p in params)), Var("y"))
        function_map[symbol] = template(
            f"graph_{symbol}", (*params, "y"), graph, _value_oracle(symbol)
        )
    predicate_map = {}
    for symbol, arity in signature.predicates.items():
        params = tuple(f"x{i}" for i in range(arity))
        predicate_map[symbol] = template(symbol, params, Atom(symbol, tuple(Var(p) for p in params)))
    return InterpretationSpec(
        name=f"identity({signature.name})",
        source=signature,
        target=signature,
        domain=template("dom", ("x",), Eq(Var("x"), Var("x"))),
        predicate_map=predicate_map,
        function_map=function_map,
        bounded="keep",
        unfold_terms=False,
    )


def obligations(
    spec: InterpretationSpec, symbols: Optional[Iterable[str]] = None
) -> list[Formula]:
    """
    Conditions making the translation well defined.

    The first says the domain is non-empty; then, per function symbol,
    that its graph is total and single-valued on the domain.

    Args:
        spec: The interpretation
        symbols: Restrict the functionality conditions to these symbols

    Returns:
        The obligation formulas over spec.target
    """
    def dom(var: str) -> Formula:
        return instantiate(spec.domain, (Var(var),))

    found: list[Formula] = [Exists("x", dom("x"))]
    chosen = sorted(spec.function_map if symbols is None else set(symbols) & spec.function_map.keys())
    for symbol in chosen:
        graph = spec.function_map[symbol]
        inputs = tuple(f"x{i}" for i in range(len(graph.params) - 1))
        args = tuple(Var(name) for name in inputs)
        unique = Forall(
            "z",
            Implies(dom("z"), Implies(instantiate(graph, (*args, Var("z"))), Eq(Var("z"), Var("y")))),
        )
        core: Formula = Exists(
            "y", And(dom("y"), And(instantiate(graph, (*args, Var("y"))), unique))
        )
        for name in reversed(inputs):
            core = Forall(name, Implies(dom(name), core))
        found.append(core)
    return found
