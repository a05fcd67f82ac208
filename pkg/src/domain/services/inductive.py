"""
Least fixed points of the inductive definitions generating HF.

Each definition is a set of rules (premises, conclusion): a class closed
under the rules contains the conclusion whenever it contains every
premise. The least closed class is computed by saturation, restricted to
the codes below a cap.

    fin:  ({a}, a) for a finite       (a enters once all its members have)
    fe:   ({a}, a) for a finitely enumerable  (some k maps onto a)
    adj:  ({a, b}, a ∪ {b}) for all a, b
"""

import logging
from typing import Iterator, Literal, Optional

from src.config.settings import settings
from src.domain.models.exceptions import RangeGuardException
from src.domain.models.hf_set import AckCode
from src.domain.services.hf_core import power_of_two, sigma
from src.domain.services.recursion import members

logger = logging.getLogger(__name__)

InductiveDefinition = Literal["fin", "fe", "adj"]


def surjections(a: AckCode, length: int) -> Iterator[tuple[AckCode, ...]]:
    """
    Every map from {0, ..., length-1} onto the members of a.

    A map is given by its tuple of values; values may repeat, and the maps
    come in lexicographic order of the member codes. Partial maps that can
    no longer cover every member are abandoned.
    """
    values = list(members(a))
    chosen: list[AckCode] = []

    def extend(uncovered: int) -> Iterator[tuple[AckCode, ...]]:
        remaining = length - len(chosen)
        if uncovered > remaining:
            return
        if remaining == 0:
            yield tuple(chosen)
            return
        for value in values:
            fresh = value not in chosen
            chosen.append(value)
            yield from extend(uncovered - fresh)
            chosen.pop()

    yield from extend(len(values))


def shortest_enumeration(a: AckCode) -> Optional[tuple[AckCode, ...]]:
    """The first map from the least possible k onto the members of a."""
    for length in range(sigma(a) + 1):
        for enumeration in surjections(a, length):
            return enumeration
    return None


def _saturate_members(cap: int, admits) -> set[AckCode]:
    closed: set[AckCode] = set()
    changed = True
    while changed:
        changed = False
        for a in range(cap):
            if a not in closed and admits(a, closed):
                closed.add(a)
                changed = True
    return closed


def _fin(cap: int) -> set[AckCode]:
    return _saturate_members(cap, lambda a, closed: all(m in closed for m in members(a)))


def _fe(cap: int) -> set[AckCode]:
    def enumerable(a: AckCode, closed: set[AckCode]) -> bool:
        enumeration = shortest_enumeration(a)
        return enumeration is not None and all(value in closed for value in enumeration)

    return _saturate_members(cap, enumerable)


def _adj(cap: int) -> set[AckCode]:
    if cap == 0:
        return set()
    # only b below the bit length of cap can be adjoined without passing it
    bits = cap.bit_length()
    closed = {0}
    adjoinable = [0]
    pending = [0]

    def close(result: AckCode) -> None:
        if result < cap and result not in closed:
            closed.add(result)
            pending.append(result)
            if result < bits:
                adjoinable.append(result)

    while pending:
        new = pending.pop()
        for b in list(adjoinable):
            close(new | power_of_two(b))
        if new < bits:
            for a in list(closed):
                close(a | power_of_two(new))
    return closed


_DEFINITIONS = {"fin": _fin, "fe": _fe, "adj": _adj}


def lfp_inductive(defn: InductiveDefinition, cap: int) -> list[AckCode]:
    """
    Least fixed point of an inductive definition below a cap.

    Args:
        defn: 'fin', 'fe' or 'adj'
        cap: Codes considered are those below cap

    Returns:
        The ascending list of codes in the least closed class

    Raises:
        RangeGuardException: If cap exceeds settings.lfp_cap_limit
        KeyError: For an unknown definition
    """
    saturate = _DEFINITIONS[defn]
    if cap > settings.lfp_cap_limit:
        raise RangeGuardException("cap", cap, settings.lfp_cap_limit)
    result = sorted(saturate(cap))
    logger.debug(f"lfp {defn} below {cap}: {len(result)} codes")
    return result
