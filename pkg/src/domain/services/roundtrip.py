"""
Round-trip and graph validation checks for the interpretations.

roundtrip_check compares a formula with its translation along b then a
(or a then b), both as nested translations and through compose, over all
assignments in a range; the two composites must act as the identity.
graph_micro_check validates a graph template against its oracle by a
blind search for the witness function on tiny arguments.
transport_check evaluates the body of a translated template on small
arguments against the oracle it carries across the interpretation; every
round-trip check runs it first, so the full-range comparison that follows
may decide those templates by their oracles.
"""

import logging
import time
from itertools import product
from typing import Iterable, Literal, Optional

from src.config.settings import settings
from src.domain.models.exceptions import RangeGuardException, ResourceGuardException
from src.domain.models.formula import (
    And,
    BExists,
    BForall,
    Exists,
    Forall,
    Formula,
    Implies,
    Macro,
    Or,
)
from src.domain.models.hf_set import AckCode
from src.domain.models.report import CheckReport
from src.domain.models.signature import ARITH_PLUS, SET
from src.domain.models.truth import TruthValue
from src.domain.services.evaluator import (
    Evaluator,
    StructureKind,
    apply_function,
    eval_arith,
    eval_set,
)
from src.domain.services.formula_parser import parse
from src.domain.services.hf_core import (
    MAX_VON_NEUMANN_INDEX,
    is_von_neumann,
    ordered_pair,
    power_of_two,
    tc,
    v,
)
from src.domain.services.interpretation_engine import compose, obligations, translate
from src.domain.services.interpretations import (
    GRAPH_KINDS,
    get_interpretation,
    graph_formula,
    interp_a,
    interp_b,
    p_graph_formula,
)
from src.domain.services.recursion import members

logger = logging.getLogger(__name__)

RoundtripKind = Literal["ba_membership", "ab_successor", "ab_add", "ab_mul", "p_is_v"]
MicroKind = Literal["add", "mul", "exp", "p_graph"]

ROUNDTRIP_KINDS: tuple[str, ...] = ("ba_membership", "ab_successor", "ab_add", "ab_mul", "p_is_v")

# largest range each kind accepts
RANGE_LIMITS = {
    "ba_membership": 256,
    "ab_successor": 256,
    "ab_add": 16,
    "ab_mul": 16,
    "p_is_v": 64,
}

_SOURCES = {
    "ba_membership": "x in y",
    "ab_successor": "S(x) = y",
    "ab_add": "x + y = z",
    "ab_mul": "x * y = z",
}


def _assignments(kind: str, limit: int) -> Iterable[dict[str, int]]:
    if kind in ("ba_membership", "ab_successor"):
        for x, y in product(range(limit), repeat=2):
            yield {"x": x, "y": y}
        return
    symbol = "+" if kind == "ab_add" else "*"
    for x, y, z in product(range(limit + 1), repeat=3):
        if apply_function(symbol, (x, y)) <= limit:
            yield {"x": x, "y": y, "z": z}


def _report(subject: str, n: int, started: float, cases: int, failure: Optional[dict],
            unknown: int, notes: list[str]) -> CheckReport:
    if failure is not None:
        result = "fail"
    elif unknown:
        result = "unknown"
        notes.append(f"{unknown} cases were not decided")
    else:
        result = "pass"
    return CheckReport(
        subject=subject,
        n=n,
        result=result,
        cases=cases,
        counterexample=failure,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        notes=notes,
    )


def roundtrip_check(kind: RoundtripKind, limit: Optional[int] = None) -> CheckReport:
    """
    Check that a composite of the two interpretations acts as the identity.

    ba_membership translates x ∈ y along a then b and compares over codes;
    ab_successor, ab_add and ab_mul translate along b then a and compare
    over naturals (for add and mul, triples whose result stays in range);
    p_is_v checks that the a-translation of P(x, y) holds exactly when y
    is the von Neumann numeral of x.

    Args:
        kind: The check to run
        limit: Range of the values (settings.default_range by default)

    Returns:
        The check report; it fails on the first translated template whose
        body contradicts its oracle on small arguments, and the full range
        is then decided with the checked oracles

    Raises:
        RangeGuardException: If the range exceeds the limit of the kind
    """
    limit = settings.default_range if limit is None else limit
    if limit > RANGE_LIMITS[kind]:
        raise RangeGuardException("range", limit, RANGE_LIMITS[kind])
    started = time.perf_counter()
    logger.info(f"Round-trip check {kind} over range {limit}")
    if kind == "p_is_v":
        return _p_is_v(limit, started)

    a, b = interp_a(), interp_b()
    if kind == "ba_membership":
        source = parse(_SOURCES[kind], SET)
        nested = translate(b, translate(a, source))
        composed = translate(compose(b, a), source)
        evaluate_source, evaluate_target = eval_set, eval_set
    else:
        source = parse(_SOURCES[kind], ARITH_PLUS)
        nested = translate(a, translate(b, source))
        composed = translate(compose(a, b), source)
        evaluate_source, evaluate_target = eval_arith, eval_arith

    subject = f"roundtrip:{kind}"
    structure: StructureKind = "set" if kind == "ba_membership" else "arith"
    rejected, notes = _check_templates(subject, limit, started, structure, nested, composed)
    if rejected is not None:
        return rejected

    cases = unknown = 0
    for env in _assignments(kind, limit):
        cases += 1
        expected = evaluate_source(source, env)
        got_nested = evaluate_target(nested, env, oracle_mode=True)
        got_composed = evaluate_target(composed, env, oracle_mode=True)
        outcomes = {got_nested, got_composed}
        if TruthValue.UNKNOWN in outcomes:
            unknown += 1
            continue
        if outcomes != {expected}:
            failure = {
                **env,
                "source": expected.value,
                "nested": got_nested.value,
                "composed": got_composed.value,
            }
            logger.error(f"Round-trip {kind} fails at {env}")
            return _report(subject, limit, started, cases, failure, unknown, notes)
    return _report(subject, limit, started, cases, None, unknown, notes)


def _p_is_v(limit: int, started: float) -> CheckReport:
    translated = translate(interp_a(), p_graph_formula())
    rejected, notes = _check_templates("roundtrip:p_is_v", limit, started, "arith", translated)
    if rejected is not None:
        return rejected
    numerals = {v(n) for n in range(MAX_VON_NEUMANN_INDEX + 1)}
    candidates = sorted(set(range(limit)) | numerals)
    cases = unknown = 0
    for x in range(limit):
        expected_y = v(x) if x <= MAX_VON_NEUMANN_INDEX else None
        for y in candidates:
            cases += 1
            got = eval_arith(translated, {"x": x, "y": y}, oracle_mode=True)
            if got is TruthValue.UNKNOWN:
                unknown += 1
                continue
            if got is not TruthValue.of(y == expected_y):
                failure = {"x": x, "y": y, "value": got.value}
                return _report("roundtrip:p_is_v", limit, started, cases, failure, unknown, notes)
    return _report("roundtrip:p_is_v", limit, started, cases, None, unknown, notes)


def v_arithmetic_check(kind: str, limit: int = MAX_VON_NEUMANN_INDEX) -> CheckReport:
    """
    Check that the a-translation of an ordinal graph computes arithmetic
    on von Neumann numerals: G(v(x), v(y), v(z)) holds iff x∘y = z.

    Args:
        kind: 'add', 'mul' or 'exp'
        limit: Largest result considered
    """
    started = time.perf_counter()
    subject = f"v_arithmetic:{kind}"
    translated = translate(interp_a(), graph_formula(kind))
    rejected, notes = _check_templates(subject, limit, started, "arith", translated)
    if rejected is not None:
        return rejected
    symbol = GRAPH_KINDS[kind]
    cases = 0
    span = range(limit + 1)
    for x, y, z in product(span, repeat=3):
        if apply_function(symbol, (x, y)) > limit:
            continue
        cases += 1
        env = {"x": v(x), "y": v(y), "z": v(z)}
        got = eval_arith(translated, env, oracle_mode=True)
        if got is not TruthValue.of(apply_function(symbol, (x, y)) == z):
            failure = {"x": x, "y": y, "z": z, "value": got.value}
            return _report(subject, limit, started, cases, failure, 0, notes)
    return _report(subject, limit, started, cases, None, 0, notes)


# ==================== Translated templates ====================


def translated_templates(*formulas: Formula) -> list[Macro]:
    """
    The outermost macros whose oracle was carried across an interpretation,
    one per template name, in order of appearance.
    """
    found: dict[str, Macro] = {}
    for formula in formulas:
        _collect_translated(formula, found)
    return list(found.values())


def _collect_translated(formula: Formula, found: dict[str, Macro]) -> None:
    match formula:
        case Macro(oracle=oracle) if oracle is not None and oracle.transported:
            found.setdefault(formula.name, formula)
        case And(left=left, right=right) | Or(left=left, right=right):
            _collect_translated(left, found)
            _collect_translated(right, found)
        case Implies(antecedent=left, consequent=right):
            _collect_translated(left, found)
            _collect_translated(right, found)
        case Forall(body=body) | Exists(body=body) | BForall(body=body) | BExists(body=body):
            _collect_translated(body, found)


def transport_check(
    macro: Macro,
    structure: StructureKind,
    max_value: Optional[int] = None,
    budget: Optional[int] = None,
) -> CheckReport:
    """
    Validate a translated template against its transported oracle.

    The body is evaluated on every argument tuple below max_value with the
    templates nested in it decided by their own oracles, so one level of
    translation is checked at a time. A decided body must agree with the
    oracle; tuples the body leaves undecided within the budget are counted
    in the notes.

    Args:
        macro: A template (or an application of one) carrying an oracle
        structure: 'arith' or 'set', the target of the interpretation
        max_value: Arguments range below it (settings.transport_arguments by default)
        budget: Witness budget (settings.transport_budget by default)

    Returns:
        The check report, failing with the disagreeing arguments
    """
    max_value = settings.transport_arguments if max_value is None else max_value
    budget = settings.transport_budget if budget is None else budget
    started = time.perf_counter()
    subject = f"transport:{macro.name}"
    evaluator = Evaluator(structure, budget=budget, oracle_mode=True)
    cases = undecided = 0

    for args in product(range(max_value), repeat=len(macro.params)):
        cases += 1
        env = dict(zip(macro.params, args))
        try:
            oracle = bool(macro.oracle.holds(*args))
            body = evaluator.evaluate(macro.body, env)
        except ResourceGuardException as exc:
            logger.debug(f"{macro.name} at {env} hit a guard: {exc.message}")
            undecided += 1
            continue
        if body is TruthValue.UNKNOWN:
            undecided += 1
        elif body is not TruthValue.of(oracle):
            failure = {"template": macro.name, **env, "oracle": oracle, "body": body.value}
            logger.error(f"Translated template {macro.name} disagrees with its oracle at {env}")
            return _report(subject, max_value, started, cases, failure, 0, [])

    notes = [f"{undecided} argument tuples undecided within budget {budget}"] if undecided else []
    return _report(subject, max_value, started, cases, None, 0, notes)


def _check_templates(
    subject: str, n: int, started: float, structure: StructureKind, *formulas: Formula
) -> tuple[Optional[CheckReport], list[str]]:
    notes: list[str] = []
    for macro in translated_templates(*formulas):
        report = transport_check(macro, structure)
        if report.result == "fail":
            notes = [f"translated template {macro.name} disagrees with its oracle"]
            return _report(subject, n, started, report.cases, report.counterexample, 0, notes), notes
        notes.append(f"{macro.name} checked against its oracle on {report.cases} argument tuples")
    return None, notes


# ==================== Graph micro-validation ====================


def graph_witness(kind: str, x: AckCode, y: AckCode) -> Optional[AckCode]:
    """
    Code of the least witness function for a graph at ordinal arguments.

    f = {⟨k, v(x∘k)⟩ : k ≤ y}; None when an argument is not an ordinal.

    Raises:
        ResourceGuardException: When a numeral or the code is out of range
    """
    nx, ny = is_von_neumann(x), is_von_neumann(y)
    if nx is None or ny is None:
        return None
    symbol = GRAPH_KINDS[kind]
    code = 0
    for k in range(ny + 1):
        code |= power_of_two(ordered_pair(v(k), v(apply_function(symbol, (nx, k)))))
    return code


def p_witness(x: AckCode) -> AckCode:
    """
    Code of the witness g = {⟨u, v(u)⟩ : u ∈ TC({x})} for P(x, v(x)).

    Raises:
        ResourceGuardException: When a numeral or the code is out of range
    """
    code = 0
    for u in members(tc(power_of_two(x))):
        code |= power_of_two(ordered_pair(u, v(u)))
    return code


def graph_micro_check(
    kind: MicroKind, max_code: int = 2, budget: Optional[int] = None
) -> CheckReport:
    """
    Validate a graph template against its oracle by blind witness search.

    The template body is evaluated with its own witness quantifier searched
    blindly up to the budget; nested templates are decided by their
    oracles. For every argument tuple with codes up to max_code: a blind
    True needs an oracle True, an oracle False forbids a blind True, and
    an oracle True whose witness code lies below the budget needs a blind
    True.

    Args:
        kind: 'add', 'mul', 'exp' or 'p_graph'
        max_code: Largest argument code
        budget: Witness budget (settings.micro_budget by default)

    Returns:
        The check report
    """
    budget = settings.micro_budget if budget is None else budget
    started = time.perf_counter()
    macro: Macro = p_graph_formula() if kind == "p_graph" else graph_formula(kind)
    evaluator = Evaluator("set", budget=budget, oracle_mode=True)
    arity = len(macro.params)
    cases = 0
    notes: list[str] = []
    logger.info(f"Micro-validating {macro.name} up to code {max_code} at budget {budget}")

    for args in product(range(max_code + 1), repeat=arity):
        cases += 1
        env = dict(zip(macro.params, args))
        oracle = bool(macro.oracle.holds(*args))
        blind = evaluator.evaluate(macro.body, env)
        witness = _witness(kind, args) if oracle else None
        failure = None
        if blind is TruthValue.TRUE and not oracle:
            failure = "blind search found a witness the oracle rejects"
        elif witness is not None and witness < budget and blind is not TruthValue.TRUE:
            failure = f"no witness found below the budget although {witness} is one"
        if failure is not None:
            counterexample = {**env, "oracle": oracle, "blind": blind.value, "reason": failure}
            return _report(f"micro:{kind}", max_code, started, cases, counterexample, 0, notes)
        if oracle and blind is not TruthValue.TRUE:
            notes.append(f"{env}: witness beyond the budget")
    return _report(f"micro:{kind}", max_code, started, cases, None, 0, notes)


def _witness(kind: str, args: tuple[int, ...]) -> Optional[AckCode]:
    try:
        if kind == "p_graph":
            return p_witness(args[0])
        return graph_witness(kind, args[0], args[1])
    except ResourceGuardException:
        return None


def check_obligations(
    spec_name: str,
    budget: Optional[int] = None,
    symbols: Optional[Iterable[str]] = None,
) -> CheckReport:
    """
    Evaluate the obligations of an interpretation in closed oracle mode.

    Args:
        spec_name: 'a', 'o', 'b' or 'identity(<signature>)'
        budget: Unbounded quantifiers range over the values below it
        symbols: Function symbols whose obligations are checked (all by default)

    Returns:
        The check report; a guard trip makes the result unknown
    """
    spec = get_interpretation(spec_name)
    structure = "arith" if spec.target.bound_relation == "<" else "set"
    evaluator = Evaluator(structure, budget=budget, oracle_mode=True, closed=True)
    started = time.perf_counter()
    cases = 0
    for index, formula in enumerate(obligations(spec, symbols)):
        cases += 1
        try:
            value = evaluator.evaluate(formula)
        except ResourceGuardException as exc:
            return _report(f"obligations:{spec.name}", evaluator.budget, started, cases, None, 1, [exc.message])
        if value is not TruthValue.TRUE:
            failure = {"obligation": index, "value": value.value}
            return _report(f"obligations:{spec.name}", evaluator.budget, started, cases, failure, 0, [])
    return _report(f"obligations:{spec.name}", evaluator.budget, started, cases, None, 0, [])
