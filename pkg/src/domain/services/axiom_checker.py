"""
Axioms of finitary constructive set theory checked on the finite stages.

Each axiom is relativized to D_n; existential witnesses may come from
D_{n+bump}. Witnesses are constructed with the hf-core operations, then
confirmed against the bounded formula that defines them with eval_set.
At the last representable stage the quadratic checks are sampled with an
explicit seed.

Set Induction is checked through its classical finite equivalent: every
inhabited subset of D_n has an ∈-minimal element.
"""

import logging
import random
import time
from collections import defaultdict
from itertools import product
from typing import Callable, Iterable, Iterator, Literal, Optional

from src.config.settings import settings
from src.domain.models.exceptions import RangeGuardException, ResourceGuardException
from src.domain.models.formula import And, BExists, BForall, Bound, Formula, Var
from src.domain.models.hf_set import AckCode, Nat
from src.domain.models.report import CheckReport
from src.domain.models.signature import SET
from src.domain.models.truth import TruthValue
from src.domain.services.evaluator import eval_set
from src.domain.services.formula_parser import parse
from src.domain.services.hf_core import (
    bininter,
    fin_bijection,
    fin_bijection_inverse,
    pair,
    power_of_two,
    setunion,
    sigma,
    unpair,
    v,
)
from src.domain.services.recursion import members
from src.domain.services.stages import stage_bound

logger = logging.getLogger(__name__)

AxiomName = Literal[
    "extensionality",
    "pairing",
    "union",
    "binary_intersection",
    "set_induction",
    "v_eq_fin",
    "strong_collection_template",
    "replacement_template",
]

EXTENSIONALITY = "(forall z in x. z in y) /\\ (forall z in y. z in x) -> x = y"
PAIR_SET = "x in z /\\ y in z /\\ (forall w in z. w = x \\/ w = y)"
UNION_SET = "(forall w in u. exists y in x. w in y) /\\ (forall y in x. forall w in y. w in u)"
INTERSECTION_SET = "(forall w in z. w in x /\\ w in y) /\\ (forall w in x. w notin y \\/ w in z)"

# φ(x, y) for Strong Collection: every x has some y
COLLECTION_TEMPLATES = (
    "y = x",
    "x in y",
    "forall z in y. z in x",
    "exists z in y. z = z",
    "(forall z in y. z in x \\/ z = x) /\\ (forall z in x. z in y) /\\ x in y",
)

# functional φ(x, y) for Replacement
REPLACEMENT_TEMPLATES = (
    "y = x",
    "x in y /\\ (forall z in y. z = x)",
    "forall z in y. z != z",
    "(forall z in y. z in x \\/ z = x) /\\ (forall z in x. z in y) /\\ x in y",
)


class _Refuted(Exception):
    def __init__(self, counterexample: dict) -> None:
        super().__init__(str(counterexample))
        self.counterexample = counterexample


class _AxiomRun:
    """Bookkeeping for one check_axiom call."""

    def __init__(self, n: Nat, bump: Nat, seed: int) -> None:
        self.n = n
        self.bump = bump
        self.seed = seed
        self.bound = stage_bound(n)
        self.witness_bound = stage_bound(n + bump)
        self.rng = random.Random(seed)
        self.sampled = n >= settings.stage_limit
        self.cases = 0
        self.unknown = 0
        self.notes: list[str] = []

    def codes(self, sample: Optional[int] = None) -> Iterable[AckCode]:
        """Codes of D_n, or a seeded sample of them at the last stage."""
        if self.sampled and sample is not None:
            self.notes.append(f"sampled {sample} codes of D_{self.n} with seed {self.seed}")
            return [self.rng.randrange(self.bound) for _ in range(sample)]
        return range(self.bound)

    def pairs(self) -> Iterator[tuple[AckCode, AckCode]]:
        """
        All pairs from D_n, or a seeded sample at the last stage.

        The sample is the diagonal, uniform random pairs, and pairs drawn
        within each class of codes with the same number of members.
        """
        if not self.sampled:
            yield from product(range(self.bound), repeat=2)
            return
        count = settings.stage_sample_pairs
        self.notes.append(f"diagonal plus {count} random pairs of D_{self.n} with seed {self.seed}")
        for x in range(self.bound):
            yield x, x
        for _ in range(count):
            yield self.rng.randrange(self.bound), self.rng.randrange(self.bound)
        yield from self._same_size_pairs(settings.stage_sample_class_pairs)

    def _same_size_pairs(self, per_class: int) -> Iterator[tuple[AckCode, AckCode]]:
        classes: dict[Nat, list[AckCode]] = defaultdict(list)
        for code in range(self.bound):
            classes[sigma(code)].append(code)
        exhaustive = [size for size, codes in classes.items() if len(codes) ** 2 <= per_class]
        self.notes.append(
            f"pairs within each member count 0..{max(classes)} of D_{self.n}: all pairs for "
            f"counts {sorted(exhaustive)}, {per_class} seeded pairs for the others"
        )
        for size in sorted(classes):
            codes = classes[size]
            if size in exhaustive:
                yield from product(codes, repeat=2)
                continue
            for _ in range(per_class):
                yield self.rng.choice(codes), self.rng.choice(codes)

    def witness(self, name: str, code: AckCode, **context: AckCode) -> None:
        if code >= self.witness_bound:
            raise _Refuted({**context, name: code, "stage": self.n + self.bump})

    def holds(self, formula: Formula, env: dict[str, AckCode]) -> None:
        self.cases += 1
        value = eval_set(formula, env)
        if value is not TruthValue.TRUE:
            raise _Refuted({**env, "value": value.value})


def _extensionality(run: _AxiomRun) -> None:
    formula = parse(EXTENSIONALITY, SET)
    for x, y in run.pairs():
        run.holds(formula, {"x": x, "y": y})


def _pairing(run: _AxiomRun) -> None:
    formula = parse(PAIR_SET, SET)
    for x, y in run.pairs():
        z = pair(x, y)
        run.witness("z", z, x=x, y=y)
        run.holds(formula, {"x": x, "y": y, "z": z})


def _union(run: _AxiomRun) -> None:
    formula = parse(UNION_SET, SET)
    for x in run.codes():
        u = setunion(x)
        run.witness("u", u, x=x)
        run.holds(formula, {"x": x, "u": u})


def _binary_intersection(run: _AxiomRun) -> None:
    formula = parse(INTERSECTION_SET, SET)
    for x, y in run.pairs():
        z = bininter(x, y)
        run.witness("z", z, x=x, y=y)
        run.holds(formula, {"x": x, "y": y, "z": z})


def _minimal_member(subset: int) -> Optional[AckCode]:
    for x in members(subset):
        if x & subset == 0:
            return x
    return None


def _set_induction(run: _AxiomRun) -> None:
    if run.sampled:
        count = settings.stage_sample_subsets
        run.notes.append(f"sampled {count} inhabited subsets of D_{run.n} with seed {run.seed}")
        subsets: Iterable[int] = (
            run.rng.getrandbits(run.bound) | power_of_two(run.rng.randrange(run.bound))
            for _ in range(count)
        )
    else:
        subsets = range(1, power_of_two(run.bound))
    for subset in subsets:
        run.cases += 1
        if _minimal_member(subset) is None:
            raise _Refuted({"X": subset})


def _is_bijection(pairs: list[AckCode], domain: set[int], image: set[int]) -> bool:
    components = [unpair(p) for p in pairs]
    if any(c is None for c in components):
        return False
    left = [c[0] for c in components]
    right = [c[1] for c in components]
    return (
        len(set(left)) == len(left) == len(domain)
        and set(left) == domain
        and len(set(right)) == len(right)
        and set(right) == image
    )


def _v_eq_fin(run: _AxiomRun) -> None:
    exceeded = False
    for x in run.codes():
        run.cases += 1
        try:
            f = fin_bijection(x)
            g = fin_bijection_inverse(x)
            numeral = v(sigma(x))
        except ResourceGuardException as exc:
            run.unknown += 1
            logger.debug(f"v_eq_fin at {x}: {exc.message}")
            continue
        domain, image = set(members(x)), set(members(numeral))
        if not _is_bijection(f, domain, image):
            raise _Refuted({"x": x, "map": "f"})
        if not _is_bijection(g, image, domain):
            raise _Refuted({"x": x, "map": "g"})
        exceeded = exceeded or (bool(f) and f[-1] + 1 > settings.bit_cap)
    if exceeded:
        run.notes.append("some bijection codes exceed the bit cap; checked through their pair codes")


def _witnesses(run: _AxiomRun, phi: Formula, x: AckCode, most: int) -> list[AckCode]:
    """The least codes y of D_{n+bump} with φ(x, y), at most `most` of them."""
    found: list[AckCode] = []
    for y in range(run.witness_bound):
        if eval_set(phi, {"x": x, "y": y}) is TruthValue.TRUE:
            found.append(y)
            if len(found) == most:
                break
    return found


def _cover(phi: Formula) -> Formula:
    """∀x∈a ∃y∈b φ ∧ ∀y∈b ∃x∈a φ"""
    return And(
        BForall("x", Bound("in", Var("a")), BExists("y", Bound("in", Var("b")), phi)),
        BForall("y", Bound("in", Var("b")), BExists("x", Bound("in", Var("a")), phi)),
    )


def _collect(run: _AxiomRun, templates: tuple[str, ...], functional: bool = False) -> None:
    """
    Collect witnesses for each template over the codes a of D_n.

    With functional set, the premise is ∀x∈a ∃!y φ inside D_{n+bump}, so a
    template with two values at some member of a is not collected there;
    otherwise the premise is ∀x∈a ∃y φ and the least witness is used.
    """
    sample = settings.stage_sample_subsets
    premise = "exactly one" if functional else "some"
    for text in templates:
        phi = parse(text, SET)
        cover = _cover(phi)
        found: dict[AckCode, list[AckCode]] = {}
        skipped = 0
        for a in run.codes(sample):
            run.cases += 1
            for x in members(a):
                if x not in found:
                    found[x] = _witnesses(run, phi, x, most=2 if functional else 1)
            if any(len(found[x]) != 1 for x in members(a)):
                skipped += 1
                continue
            b = 0
            for x in members(a):
                b |= power_of_two(found[x][0])
            run.witness("b", b, a=a)
            run.holds(cover, {"a": a, "b": b})
        if skipped:
            run.notes.append(
                f"{text}: {skipped} codes of D_{run.n} have a member without {premise} "
                f"y in D_{run.n + run.bump}"
            )


_CHECKS: dict[str, Callable[[_AxiomRun], None]] = {
    "extensionality": _extensionality,
    "pairing": _pairing,
    "union": _union,
    "binary_intersection": _binary_intersection,
    "set_induction": _set_induction,
    "v_eq_fin": _v_eq_fin,
    "strong_collection_template": lambda run: _collect(run, COLLECTION_TEMPLATES),
    "replacement_template": lambda run: _collect(run, REPLACEMENT_TEMPLATES, functional=True),
}

AXIOMS: tuple[str, ...] = tuple(_CHECKS)


def check_axiom(axiom: AxiomName, n: Nat, bump: Nat = 0, seed: Optional[int] = None) -> CheckReport:
    """
    Check one axiom on D_n with witnesses from D_{n+bump}.

    Args:
        axiom: Axiom identifier, one of AXIOMS
        n: Stage index
        bump: Stage offset for existential witnesses
        seed: Seed for sampled checks (settings.default_seed by default)

    Returns:
        The check report; a witness outside D_{n+bump} is a failure

    Raises:
        RangeGuardException: If n + bump is beyond the stage limit
        KeyError: For an unknown axiom
    """
    check = _CHECKS[axiom]
    if n + bump > settings.stage_limit:
        raise RangeGuardException("n+bump", n + bump, settings.stage_limit)
    seed = settings.default_seed if seed is None else seed
    started = time.perf_counter()
    run = _AxiomRun(n, bump, seed)
    logger.info(f"Checking {axiom} on D_{n} with bump {bump}")

    counterexample = None
    try:
        check(run)
        result = "unknown" if run.unknown else "pass"
    except _Refuted as refuted:
        counterexample = refuted.counterexample
        result = "fail"
        logger.info(f"{axiom} fails on D_{n}: {counterexample}")
    if run.unknown:
        run.notes.append(f"{run.unknown} cases hit a resource guard")
        logger.warning(f"{axiom} on D_{n}: {run.unknown} cases hit a resource guard")

    return CheckReport(
        subject=f"axiom:{axiom}",
        n=n,
        bump=bump,
        result=result,
        cases=run.cases,
        counterexample=counterexample,
        seed=seed if run.sampled else None,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        notes=run.notes,
    )
