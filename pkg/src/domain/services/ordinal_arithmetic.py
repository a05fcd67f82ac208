"""
Arithmetic on structural von Neumann ordinals.

Ordinals are built as HfSet values that share their predecessors, so the
n-th ordinal costs n nodes even though its Ackermann code stops fitting
any cap at n = 6.
"""

import logging
from typing import Literal, Optional

from src.config.settings import settings
from src.domain.models.exceptions import NotAnOrdinalException, RangeGuardException
from src.domain.models.hf_set import EMPTY, HfSet, Nat
from src.domain.services.recursion import recurse_omega

logger = logging.getLogger(__name__)

ArithmeticKind = Literal["add", "mul", "exp"]


def successor(x: HfSet) -> HfSet:
    """
    Return x ∪ {x}.

    x is the largest element of its successor, so the children stay in
    canonical order without sorting.
    """
    return HfSet.from_sorted(x.children + (x,))


def von_neumann_set(n: Nat) -> HfSet:
    """
    Build the n-th von Neumann ordinal with shared substructure.

    Raises:
        RangeGuardException: If n exceeds the configured ordinal limit
    """
    if n > settings.ordinal_result_limit:
        raise RangeGuardException("n", n, settings.ordinal_result_limit)
    return recurse_omega(EMPTY, lambda _k, alpha: successor(alpha), n)


def ordinal_index(x: HfSet) -> Optional[Nat]:
    """
    Return n when x is the n-th von Neumann ordinal, else None.

    x is the ordinal n exactly when it has n children and its i-th child
    is the ordinal i.
    """
    memo: dict[int, Optional[Nat]] = {}

    def index(node: HfSet) -> Optional[Nat]:
        key = id(node)
        if key not in memo:
            result: Optional[Nat] = len(node)
            for i, child in enumerate(node.children):
                if index(child) != i:
                    result = None
                    break
            memo[key] = result
        return memo[key]

    return index(x)


def _expected(kind: ArithmeticKind, x: Nat, y: Nat) -> Nat:
    if kind == "add":
        return x + y
    if kind == "mul":
        return x * y
    return x**y


def ord_arith(kind: ArithmeticKind, x: HfSet, y: HfSet) -> HfSet:
    """
    Ordinal addition, multiplication or exponentiation by recursion on y.

    α+0 = α and α+β⁺ = (α+β)⁺; α·0 = 0 and α·β⁺ = α·β + α; α^0 = 1 and
    α^β⁺ = α^β · α.

    Args:
        kind: One of 'add', 'mul', 'exp'
        x: Left operand, a von Neumann ordinal
        y: Right operand, a von Neumann ordinal

    Returns:
        The von Neumann ordinal of the result

    Raises:
        NotAnOrdinalException: If an operand is not an ordinal
        RangeGuardException: If the result exceeds the ordinal limit
    """
    nx = ordinal_index(x)
    if nx is None:
        raise NotAnOrdinalException("x")
    ny = ordinal_index(y)
    if ny is None:
        raise NotAnOrdinalException("y")

    # Intermediate values never exceed the result except for 0^y.
    result = _expected(kind, nx, ny)
    if result > settings.ordinal_result_limit:
        raise RangeGuardException("result", result, settings.ordinal_result_limit)

    logger.debug(f"ord_arith {kind}({nx}, {ny}) = {result}")

    if kind == "add":
        return recurse_omega(x, lambda _k, acc: successor(acc), ny)
    if kind == "mul":
        return recurse_omega(EMPTY, lambda _k, acc: ord_arith("add", acc, x), ny)
    return recurse_omega(successor(EMPTY), lambda _k, acc: ord_arith("mul", acc, x), ny)
