"""
Verification domain service.

Orchestrates the finite checks into corpus runs and the self-test suite.
Each run returns CheckReports; the self-test groups them by acceptance
criterion and passes when every primary criterion passes.
"""

import logging
import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

from src.config.settings import settings
from src.domain.models.corpus import CorpusFormula, CorpusSummary
from src.domain.models.exceptions import UnknownSymbolException
from src.domain.models.hf_set import HfSet
from src.domain.models.report import CheckReport, CriterionResult, SelftestReport
from src.domain.models.signature import ARITH, ARITH_PLUS, SET
from src.domain.models.truth import TruthValue
from src.domain.ports.formula_corpus_repository import FormulaCorpusRepositoryPort
from src.domain.services.axiom_checker import AXIOMS, check_axiom
from src.domain.services.complexity_classifier import (
    classify,
    in_closure,
    member_of,
    prenex_template,
)
from src.domain.services.evaluator import eval_arith, eval_set
from src.domain.services.formula_generator import DEFAULT_VARIABLES, random_formulas
from src.domain.services.formula_parser import parse
from src.domain.services.formula_printer import print_formula
from src.domain.services.formula_syntax import free_vars, is_delta0
from src.domain.services.hf_core import (
    MAX_VON_NEUMANN_INDEX,
    bininter,
    bininter_recursive,
    binunion,
    binunion_recursive,
    decode,
    encode,
    eps,
    eps_oracle,
    is_von_neumann,
    pair,
    rank,
    setunion,
    setunion_recursive,
    sigma,
    sigma_recursive,
    sum_members,
    sum_members_direct,
    tc,
    v,
)
from src.domain.services.inductive import lfp_inductive
from src.domain.services.interpretation_engine import translate
from src.domain.services.interpretations import interp_a, interp_b, omega_formula
from src.domain.services.ordinal_arithmetic import ord_arith, ordinal_index, von_neumann_set
from src.domain.services.roundtrip import (
    check_obligations,
    graph_micro_check,
    roundtrip_check,
    v_arithmetic_check,
)
from src.domain.services.stages import check_stage_props, stage_bound

logger = logging.getLogger(__name__)

STAGE_BOUNDS = [0, 1, 2, 4, 16, 65536]
VON_NEUMANN_CODES = [0, 1, 3, 11, 2059]


@dataclass(frozen=True)
class SelftestScale:
    """Ranges used by one self-test run."""

    codec_limit: int
    eps_bits: int
    eps_codes: int
    algebra_limit: int
    algebra_pairs: int
    algebra_samples: int
    classifier_samples: int
    roundtrip_membership: int
    roundtrip_arith: int
    roundtrip_p: int
    micro_budget: int
    axiom_stage: int
    sampled_stage: bool
    lfp_cap: int
    corpus_size: int


FULL_SCALE = SelftestScale(
    codec_limit=2**16,
    eps_bits=12,
    eps_codes=4096,
    algebra_limit=2**12,
    algebra_pairs=64,
    algebra_samples=4096,
    classifier_samples=2000,
    roundtrip_membership=64,
    roundtrip_arith=5,
    roundtrip_p=16,
    micro_budget=2**17,
    axiom_stage=4,
    sampled_stage=True,
    lfp_cap=1024,
    corpus_size=10**4,
)

QUICK_SCALE = SelftestScale(
    codec_limit=2**10,
    eps_bits=8,
    eps_codes=256,
    algebra_limit=2**8,
    algebra_pairs=16,
    algebra_samples=256,
    classifier_samples=200,
    roundtrip_membership=16,
    roundtrip_arith=3,
    roundtrip_p=8,
    micro_budget=2**10,
    axiom_stage=3,
    sampled_stage=False,
    lfp_cap=64,
    corpus_size=500,
)


class _Failed(Exception):
    def __init__(self, counterexample: dict) -> None:
        super().__init__(str(counterexample))
        self.counterexample = counterexample


def _run(subject: str, n: Optional[int], body: Callable[[list[str]], int]) -> CheckReport:
    """
    Run a check body and wrap its outcome in a report.

    body receives a notes list and returns the number of cases; it raises
    _Failed with a counterexample to refute.
    """
    started = time.perf_counter()
    notes: list[str] = []
    try:
        cases = body(notes)
        result, counterexample = "pass", None
    except _Failed as failed:
        cases, result, counterexample = 0, "fail", failed.counterexample
        logger.error(f"{subject} fails: {counterexample}")
    return CheckReport(
        subject=subject,
        n=n,
        result=result,
        cases=cases,
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        notes=notes,
    )


def _expect(condition: bool, **counterexample) -> None:
    if not condition:
        raise _Failed(counterexample)


# ==================== hf-core checks ====================


def codec_check(limit: int) -> CheckReport:
    """encode ∘ decode is the identity below limit, and decode ∘ encode on the images."""

    def body(notes: list[str]) -> int:
        for a in range(limit):
            x = decode(a)
            _expect(encode(x) == a, a=a, encoded=encode(x))
            _expect(decode(encode(x)) == x, a=a)
        return limit

    return _run("codec", limit, body)


def eps_check(bits: int, codes: int) -> CheckReport:
    """eps, eps_oracle and the bit test agree for a < bits, b < codes."""

    def body(notes: list[str]) -> int:
        for a, b in product(range(bits), range(codes)):
            expected = (b >> a) & 1 == 1
            _expect(eps(a, b) == expected == eps_oracle(a, b), a=a, b=b)
        return bits * codes

    return _run("eps", codes, body)


def boolean_algebra_check(
    limit: int, pair_limit: int, samples: int, seed: int = 0
) -> CheckReport:
    """
    Set operations agree with their recursions and with structural sets.

    Unary operations are checked on every code below limit; binary ones on
    every pair below pair_limit and on a seeded sample of pairs below limit.
    """
    decoded: dict[int, HfSet] = {}

    def structural(a: int) -> HfSet:
        if a not in decoded:
            decoded[a] = decode(a)
        return decoded[a]

    def body(notes: list[str]) -> int:
        cases = 0
        for a in range(limit):
            cases += 1
            x = structural(a)
            _expect(setunion(a) == setunion_recursive(a) == encode(x.big_union()), op="union", a=a)
            _expect(sigma(a) == sigma_recursive(a) == len(x), op="sigma", a=a)
            _expect(sum_members(a) == sum_members_direct(a), op="sum_members", a=a)

        rng = random.Random(seed)
        sampled = [(rng.randrange(limit), rng.randrange(limit)) for _ in range(samples)]
        notes.append(f"pairs below {pair_limit} plus {samples} sampled pairs with seed {seed}")
        for a, b in [*product(range(pair_limit), repeat=2), *sampled]:
            cases += 1
            x, y = structural(a), structural(b)
            union = binunion(a, b)
            _expect(union == a | b == binunion_recursive(a, b) == encode(x.union(y)),
                    op="binunion", a=a, b=b)
            meet = bininter(a, b)
            _expect(meet == a & b == bininter_recursive(a, b) == encode(x.intersection(y)),
                    op="bininter", a=a, b=b)
            if a < pair_limit and b < pair_limit:
                _expect(setunion(pair(a, b)) == union, op="union_of_pair", a=a, b=b)
        return cases

    return _run("boolean_algebra", limit, body)


def von_neumann_check() -> CheckReport:
    """The von Neumann ladder, its inverse, ranks and transitive closures."""

    def body(notes: list[str]) -> int:
        ladder = [v(n) for n in range(len(VON_NEUMANN_CODES))]
        _expect(ladder == VON_NEUMANN_CODES, ladder=ladder)
        for n in range(MAX_VON_NEUMANN_INDEX + 1):
            _expect(is_von_neumann(v(n)) == n, n=n, op="is_von_neumann")
        for n in range(len(VON_NEUMANN_CODES)):
            _expect(rank(v(n)) == n, n=n, op="rank")
            _expect(tc(v(n)) == v(n), n=n, op="tc")
        return 2 * len(VON_NEUMANN_CODES) + MAX_VON_NEUMANN_INDEX + 1

    return _run("von_neumann", MAX_VON_NEUMANN_INDEX, body)


def ordinal_arithmetic_check(code_limits: dict[str, int], operand_limit: int = 8,
                             result_limit: int = 16) -> CheckReport:
    """
    ord_arith against arithmetic: through encode for results within
    code_limits, structurally for operands up to operand_limit.
    """
    expected = {"add": lambda x, y: x + y, "mul": lambda x, y: x * y, "exp": lambda x, y: x**y}

    def body(notes: list[str]) -> int:
        cases = 0
        for kind, compute in expected.items():
            for x, y in product(range(operand_limit + 1), repeat=2):
                value = compute(x, y)
                if value > result_limit:
                    continue
                cases += 1
                result = ord_arith(kind, von_neumann_set(x), von_neumann_set(y))
                _expect(ordinal_index(result) == value, kind=kind, x=x, y=y)
                if value <= code_limits[kind]:
                    _expect(encode(result) == v(value), kind=kind, x=x, y=y, op="encode")
        return cases

    return _run("ordinal_arithmetic", operand_limit, body)


# ==================== Hierarchy checks ====================


def calibration_check(samples: int, seed: int = 0, max_level: int = 3) -> CheckReport:
    """
    Prenex templates classify at their alternation count; classify agrees
    with the closure rules on random formulas of depth ≤ 4; φ_ω is E_1.
    """

    def body(notes: list[str]) -> int:
        cases = 0
        for k in range(max_level + 1):
            for first in ("E", "U"):
                cases += 1
                level = classify(prenex_template(k, first)).level(first)
                _expect(level == k, template=f"{first}{k}", level=level)
        corpus = [
            f for sig in (ARITH, SET)
            for f in random_formulas(sig, samples, seed=seed, max_depth=4)
        ]
        for formula in corpus:
            for cls, n in product(("E", "U"), range(max_level + 1)):
                cases += 1
                _expect(
                    in_closure(formula, cls, n) == member_of(formula, cls, n),
                    formula=print_formula(formula), cls=cls, n=n,
                )
        cases += 1
        e_level = classify(omega_formula()).e_level
        _expect(e_level <= 1, formula="omega", e_level=e_level)
        return cases

    return _run("classifier_calibration", max_level, body)


# ==================== Corpus runs ====================


class VerificationService:
    """
    Service running the corpus checks and the self-test suite.

    Attributes:
        _repository: Source of the bundled formula corpus
    """

    def __init__(self, corpus_repository: FormulaCorpusRepositoryPort) -> None:
        self._repository = corpus_repository
        logger.info("VerificationService initialized")

    def corpus_summary(self) -> CorpusSummary:
        """Formula counts per signature and the bundled theory names."""
        formulas = self._repository.find_all()
        by_signature: dict[str, int] = {}
        for entry in formulas:
            by_signature[entry.signature] = by_signature.get(entry.signature, 0) + 1
        theories = [name for name in ("HA", "T") if self._repository.theory(name) is not None]
        return CorpusSummary(formulas=len(formulas), by_signature=by_signature, theories=theories)

    def corpus_entries(self, signature: Optional[str] = None, tag: Optional[str] = None) -> list[CorpusFormula]:
        entries = (
            self._repository.find_by_signature(signature) if signature else self._repository.find_all()
        )
        return [e for e in entries if tag is None or tag in e.tags]

    def _preservation_entries(self) -> list[CorpusFormula]:
        return [f for f in self._repository.find_all() if "axiom" not in f.tags]

    def complexity_preservation(self) -> CheckReport:
        """
        Translated E-level stays within max(1, source E-level): along a for
        set formulas, along b for arithmetic ones.
        """

        def body(notes: list[str]) -> int:
            entries = self._preservation_entries()
            for entry in entries:
                source = entry.parse()
                spec = interp_a() if entry.signature == SET.name else interp_b()
                target = translate(spec, source)
                source_level, target_level = classify(source), classify(target)
                logger.debug(f"{entry.name}: {source_level} -> {target_level} along {spec.name}")
                _expect(
                    target_level.e_level <= max(1, source_level.e_level),
                    name=entry.name,
                    interpretation=spec.name,
                    source=str(source_level),
                    target=str(target_level),
                )
            return len(entries)

        return _run("complexity_preservation", None, body)

    def soundness(
        self,
        limit: Optional[int] = None,
        exhaustive: Optional[int] = None,
        samples: Optional[int] = None,
        budget: int = 16,
        seed: Optional[int] = None,
    ) -> CheckReport:
        """
        Set formulas of the corpus with at most two free variables evaluate
        as their a-translations on codes below limit.

        One-variable formulas are checked on every code; two-variable ones on
        every pair below exhaustive plus a seeded sample below limit. Where
        both sides are decided they must agree; Δ0 formulas must be decided.
        """
        limit = settings.soundness_range if limit is None else limit
        exhaustive = settings.soundness_exhaustive if exhaustive is None else exhaustive
        samples = settings.soundness_samples if samples is None else samples
        seed = settings.default_seed if seed is None else seed

        def assignments(names: list[str], rng: random.Random) -> Iterable[dict[str, int]]:
            if len(names) < 2:
                values = range(limit) if names else [0]
                return ({n: value for n in names} for value in values)
            pairs = [*product(range(min(exhaustive, limit)), repeat=2)]
            pairs += [(rng.randrange(limit), rng.randrange(limit)) for _ in range(samples)]
            return ({names[0]: a, names[1]: b} for a, b in pairs)

        def body(notes: list[str]) -> int:
            cases = undecided = 0
            rng = random.Random(seed)
            for entry in self._repository.find_by_signature(SET.name):
                source = entry.parse()
                names = sorted(free_vars(source))
                if len(names) > 2:
                    continue
                target = translate(interp_a(), source)
                bounded = is_delta0(source)
                for env in assignments(names, rng):
                    cases += 1
                    expected = eval_set(source, env, budget)
                    got = eval_arith(target, env, budget, oracle_mode=True)
                    if bounded:
                        _expect(TruthValue.UNKNOWN not in (expected, got),
                                name=entry.name, **env, reason="undecided bounded formula")
                    if expected.is_decided and got.is_decided:
                        _expect(expected is got, name=entry.name, **env,
                                source=expected.value, target=got.value)
                    else:
                        undecided += 1
            notes.append(f"{undecided} cases undecided at budget {budget}")
            notes.append(f"pairs below {exhaustive} plus {samples} sampled with seed {seed}")
            return cases

        return _run("soundness:a", limit, body)

    def delta0_totality(self, count: Optional[int] = None, seed: Optional[int] = None) -> CheckReport:
        """No random Δ0 formula evaluates to UNKNOWN in either structure."""
        count = settings.random_corpus_size if count is None else count
        seed = settings.default_seed if seed is None else seed

        def body(notes: list[str]) -> int:
            rng = random.Random(seed)
            cases = 0
            for sig, structure, span in ((ARITH, "arith", 8), (SET, "set", 256)):
                evaluate = eval_arith if structure == "arith" else eval_set
                for formula in random_formulas(sig, count, seed=seed, delta0=True):
                    cases += 1
                    env = {name: rng.randrange(span) for name in DEFAULT_VARIABLES}
                    value = evaluate(formula, env)
                    _expect(value.is_decided, signature=sig.name,
                            formula=print_formula(formula), **env)
            notes.append(f"{count} formulas per structure with seed {seed}")
            return cases

        return _run("delta0_totality", count, body)

    def parse_print_roundtrip(self, count: Optional[int] = None, seed: Optional[int] = None) -> CheckReport:
        """parse ∘ print is the identity on random formulas of every signature."""
        count = settings.random_corpus_size if count is None else count
        seed = settings.default_seed if seed is None else seed

        def body(notes: list[str]) -> int:
            cases = 0
            for sig in (ARITH, ARITH_PLUS, SET):
                for formula in random_formulas(sig, count, seed=seed):
                    cases += 1
                    text = print_formula(formula)
                    parsed = parse(text, sig)
                    _expect(parsed == formula, signature=sig.name, text=text)
                    _expect(print_formula(parsed) == text, signature=sig.name, text=text)
            return cases

        return _run("parse_print", count, body)

    def check_theory(self, name: str, budget: int = 8, n: int = 3) -> CheckReport:
        """
        Check a bundled theory: HA axioms evaluate true along b in closed
        oracle mode below the budget; T axioms pass their finite checks on
        D_n with witnesses from D_{n+1}.

        Raises:
            UnknownSymbolException: If the theory is not in the corpus
        """
        theory = self._repository.theory(name)
        if theory is None:
            raise UnknownSymbolException(name, "theories")

        def body(notes: list[str]) -> int:
            cases = 0
            for axiom in theory.axioms:
                cases += 1
                if axiom.check is not None:
                    report = check_axiom(axiom.check, n, bump=1)
                    _expect(report.passed, axiom=axiom.name, result=report.result)
                elif axiom.text is not None:
                    source = parse(axiom.text, ARITH_PLUS)
                    target = translate(interp_b(), source)
                    value = eval_set(target, {}, budget, oracle_mode=True, closed=True)
                    _expect(value is TruthValue.TRUE, axiom=axiom.name, value=value.value)
            return cases

        return _run(f"theory:{name}", budget if theory.signature != SET.name else n, body)

    # ==================== Self-test ====================

    def selftest(self, quick: bool = False, seed: Optional[int] = None) -> SelftestReport:
        """
        Run the acceptance suite.

        Args:
            quick: Use reduced ranges with the same code paths
            seed: Seed for sampled checks (settings.default_seed by default)

        Returns:
            The suite report; passed iff every primary criterion passed
        """
        scale = QUICK_SCALE if quick else FULL_SCALE
        seed = settings.default_seed if seed is None else seed
        logger.info(f"Running self-test ({'quick' if quick else 'full'}, seed {seed})")

        criteria: list[tuple[str, Callable[[], list[CheckReport]], bool]] = [
            ("codec bijection", lambda: [codec_check(scale.codec_limit)], True),
            ("eps agreement", lambda: [eps_check(scale.eps_bits, scale.eps_codes)], True),
            ("boolean-algebra agreement", lambda: [boolean_algebra_check(
                scale.algebra_limit, scale.algebra_pairs, scale.algebra_samples, seed)], True),
            ("von Neumann ladder", lambda: [von_neumann_check()], True),
            ("v-arithmetic", lambda: [
                ordinal_arithmetic_check({"add": 5, "mul": 5, "exp": 4}),
                v_arithmetic_check("add", 5),
                v_arithmetic_check("mul", 5),
                v_arithmetic_check("exp", 4),
            ], True),
            ("classifier calibration", lambda: [calibration_check(scale.classifier_samples, seed)], True),
            ("round-trip identities", lambda: [
                roundtrip_check("ba_membership", scale.roundtrip_membership),
                roundtrip_check("ab_successor", scale.roundtrip_membership),
                roundtrip_check("ab_add", scale.roundtrip_arith),
                roundtrip_check("ab_mul", scale.roundtrip_arith),
                roundtrip_check("p_is_v", scale.roundtrip_p),
            ], True),
            ("graph micro-validation", lambda: [
                graph_micro_check("p_graph", 2, scale.micro_budget),
                graph_micro_check("add", 2, scale.micro_budget),
            ], True),
            ("stage suite", lambda: self._stage_suite(scale, seed), True),
            ("inductive definitions", lambda: [self._lfp_agreement(scale.lfp_cap)], True),
            ("complexity preservation", lambda: [self.complexity_preservation()], True),
            ("delta0 totality", lambda: [self.delta0_totality(scale.corpus_size, seed)], True),
            ("a soundness", lambda: [self.soundness(
                samples=scale.algebra_samples // 16, seed=seed)], False),
            ("parse/print round-trip", lambda: [self.parse_print_roundtrip(scale.corpus_size, seed)], False),
            ("interpretation obligations", lambda: [
                check_obligations("identity(arith)", budget=4),
                check_obligations("o", budget=v(4) + 1, symbols=["S"]),
                check_obligations("a", budget=4),
            ], False),
            ("HA along b", lambda: [self.check_theory("HA")], False),
        ]

        results = []
        for number, (title, run, primary) in enumerate(criteria, start=1):
            started = time.perf_counter()
            reports = run()
            result = CriterionResult.from_reports(
                number, title, reports, (time.perf_counter() - started) * 1000, primary
            )
            logger.info(f"Criterion {number} ({title}): {result.result}")
            if result.result != "pass":
                level = logging.ERROR if primary else logging.WARNING
                logger.log(level, f"Criterion {number} ({title}) did not pass")
            results.append(result)
        return SelftestReport(quick=quick, criteria=results)

    def _stage_suite(self, scale: SelftestScale, seed: int) -> list[CheckReport]:
        def bounds(notes: list[str]) -> int:
            found = [stage_bound(n) for n in range(len(STAGE_BOUNDS))]
            _expect(found == STAGE_BOUNDS, bounds=found)
            return len(found)

        reports = [_run("stage_bounds", len(STAGE_BOUNDS) - 1, bounds)]
        reports += [check_stage_props(n) for n in range(settings.stage_limit + 1)]
        for axiom, n in product(AXIOMS, range(scale.axiom_stage + 1)):
            reports.append(check_axiom(axiom, n, bump=1, seed=seed))
        if scale.sampled_stage:
            last = settings.stage_limit
            reports.append(check_axiom("extensionality", last, bump=0, seed=seed))
            reports.append(check_axiom("set_induction", last, bump=0, seed=seed))
        return reports

    @staticmethod
    def _lfp_agreement(cap: int) -> CheckReport:
        def body(notes: list[str]) -> int:
            expected = list(range(cap))
            for defn in ("fin", "fe", "adj"):
                _expect(lfp_inductive(defn, cap) == expected, definition=defn, cap=cap)
            return 3

        return _run("lfp_inductive", cap, body)

