"""
Finite stages D_0 = ∅, D_{n+1} = Dec(D_n) of the hereditarily finite sets.

Classically every subset of a finite set is decidable, so Dec is the
power set and the codes of D_n are exactly the numbers below t_n, where
t_0 = 0 and t_{n+1} = 2^{t_n}. Stages are represented by that bound;
their element lists are produced only when a check needs them.
"""

import logging
import time

from src.config.settings import settings
from src.domain.models.exceptions import RangeGuardException
from src.domain.models.hf_set import AckCode, Nat
from src.domain.models.report import CheckReport, Stage
from src.domain.services.hf_core import power_of_two
from src.domain.services.recursion import members, recurse_omega

logger = logging.getLogger(__name__)


def stage_bound(n: Nat) -> AckCode:
    """
    t_n.

    Raises:
        RangeGuardException: For n beyond the stage limit
    """
    if n > settings.stage_limit:
        raise RangeGuardException("n", n, settings.stage_limit)
    return recurse_omega(0, lambda _k, t: power_of_two(t), n)


def stage(n: Nat) -> Stage:
    """The stage D_n."""
    return Stage(n=n, bound=stage_bound(n))


def dec(codes: list[AckCode]) -> list[AckCode]:
    """
    Codes of all subsets of the set whose members are codes.

    Args:
        codes: Distinct member codes

    Returns:
        The 2^len(codes) subset codes, ascending

    Raises:
        RangeGuardException: If more codes are given than dec_size_limit
    """
    if len(codes) > settings.dec_size_limit:
        raise RangeGuardException("codes", len(codes), settings.dec_size_limit)
    subsets = [0]
    for code in codes:
        bit = power_of_two(code)
        subsets += [subset | bit for subset in subsets]
    return sorted(subsets)


def check_stage_props(n: Nat) -> CheckReport:
    """
    Check that D_n is transitive, strictly below D_{n+1}, and that Dec of it
    gives exactly the codes of D_{n+1}.

    D_6 is not representable, so at the last stage only transitivity is
    checked.

    Args:
        n: Stage index

    Returns:
        The check report
    """
    started = time.perf_counter()
    logger.info(f"Checking stage properties of D_{n}")
    current = stage(n)
    cases = 0
    notes: list[str] = []

    def report(result: str, counterexample: dict | None = None) -> CheckReport:
        return CheckReport(
            subject="stage",
            n=n,
            result=result,
            cases=cases,
            counterexample=counterexample,
            elapsed_ms=(time.perf_counter() - started) * 1000,
            notes=notes,
        )

    for code in current.codes():
        cases += 1
        for member in members(code):
            if member not in current:
                logger.error(f"D_{n} is not transitive at {code}")
                return report("fail", {"x": code, "member": member})

    if n >= settings.stage_limit:
        notes.append(f"D_{n + 1} is not representable; transitivity checked only")
        return report("pass")

    following = stage(n + 1)
    cases += 1
    if not current.bound < following.bound:
        return report("fail", {"t_n": current.bound, "t_n+1": following.bound})

    subsets = dec(list(current.codes()))
    cases += len(subsets)
    if subsets != list(following.codes()):
        missing = sorted(set(following.codes()) - set(subsets))
        return report("fail", {"missing": missing[:1], "dec_size": len(subsets)})

    return report("pass")
