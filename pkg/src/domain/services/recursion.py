"""
Recursion combinators over ω and over membership.

recurse_omega is primitive recursion H(0) = base, H(k+1) = step(k, H(k)).
recurse_membership is well-founded recursion on the Ackermann membership
relation: F(y) = g(y, {z: F(z) | z ∈ y}). The hf-core operations v, tc,
sum_members, rank, decode are written with these two combinators.
"""

import logging
from typing import Callable, Mapping, TypeVar

from src.domain.models.hf_set import AckCode, Nat

logger = logging.getLogger(__name__)

T = TypeVar("T")


def members(a: AckCode):
    """
    Iterate the members of the coded set in ascending order.

    Args:
        a: Ackermann code

    Yields:
        Bit positions set in a, lowest first
    """
    while a:
        low = a & -a
        yield low.bit_length() - 1
        a ^= low


def recurse_omega(base: T, step: Callable[[Nat, T], T], n: Nat) -> T:
    """
    Evaluate a primitive recursion up to n.

    Args:
        base: Value at 0
        step: Function (k, H(k)) -> H(k+1)
        n: Number of steps

    Returns:
        H(n)
    """
    value = base
    for k in range(n):
        value = step(k, value)
    return value


def recurse_membership(
    g: Callable[[AckCode, Mapping[AckCode, T]], T], a: AckCode
) -> T:
    """
    Evaluate a set recursion on the membership structure below a.

    Values are memoized per call, so a member shared by several sets is
    computed once.

    Args:
        g: Function (y, table of F on members of y) -> F(y)
        a: Ackermann code to evaluate at

    Returns:
        F(a)
    """
    table: dict[AckCode, T] = {}

    def evaluate(y: AckCode) -> T:
        if y in table:
            return table[y]
        below = {z: evaluate(z) for z in members(y)}
        table[y] = g(y, below)
        return table[y]

    return evaluate(a)
