"""
Ackermann coding of hereditarily finite sets.

A natural number a codes the set whose members are the codes c with bit c
of a set. Every set operation here works on codes directly with integer
bit operations; the primitive recursions that define them (binunion,
bininter, union, σ) are kept next to them as oracles and are
cross-checked in the tests and by the selftest suite.

Every operation that produces a code goes through check_cap or
power_of_two, which raise CapExceededException instead of building a
number longer than settings.bit_cap bits.
"""

import logging
from typing import Callable, Optional

from src.config.settings import settings
from src.domain.models.exceptions import CapExceededException, RangeGuardException
from src.domain.models.hf_set import AckCode, HfSet, Nat
from src.domain.services.recursion import members, recurse_membership, recurse_omega

logger = logging.getLogger(__name__)

# v(5) is the last ordinal whose code fits any realistic cap
MAX_VON_NEUMANN_INDEX = 5


def check_cap(value: AckCode) -> AckCode:
    """
    Enforce the configured bit cap on a code.

    Args:
        value: Code to check

    Returns:
        The same code

    Raises:
        CapExceededException: If the code is longer than the cap
    """
    bits = value.bit_length()
    if bits > settings.bit_cap:
        raise CapExceededException(bits, settings.bit_cap)
    return value


def power_of_two(exponent: Nat) -> AckCode:
    """
    Compute 2^exponent under the bit cap.

    Raises:
        CapExceededException: If 2^exponent needs more than the cap
    """
    if exponent + 1 > settings.bit_cap:
        raise CapExceededException(exponent + 1, settings.bit_cap)
    return 1 << exponent


def top_member(a: AckCode) -> Nat:
    """Largest member of a non-empty coded set."""
    return a.bit_length() - 1


def eps(a: AckCode, b: AckCode) -> bool:
    """
    Ackermann membership: a ε b iff bit a of b is 1.

    Raises:
        CapExceededException: If a is not below the bit cap
    """
    if a >= settings.bit_cap:
        raise CapExceededException(a + 1, settings.bit_cap)
    return (b >> a) & 1 == 1


def eps_oracle(a: AckCode, b: AckCode) -> bool:
    """
    Decide a ε b by searching for m with b = (2m+1)·2^a + r and r < 2^a.

    The search walks m upwards and checks the remainder directly; it uses
    no bit tests on b.

    Raises:
        CapExceededException: If 2^a exceeds the cap
    """
    block = power_of_two(a)
    for m in range(b + 1):
        base = (2 * m + 1) * block
        if base > b:
            return False
        if b - base < block:
            return True
    return False


def pair(a: AckCode, b: AckCode) -> AckCode:
    """
    Code of {a, b}: 2^a when a = b, else 2^a + 2^b.
    """
    if a == b:
        return power_of_two(a)
    return check_cap(power_of_two(a) + power_of_two(b))


def ordered_pair(a: AckCode, b: AckCode) -> AckCode:
    """
    Code of the Kuratowski pair ⟨a,b⟩ = pair(pair(a,a), pair(a,b)).
    """
    return pair(pair(a, a), pair(a, b))


def unpair(p: AckCode) -> Optional[tuple[AckCode, AckCode]]:
    """
    Read a code as an ordered pair.

    Args:
        p: Candidate pair code

    Returns:
        (a, b) with ordered_pair(a, b) = p, or None when p codes no pair
    """
    outer = list(members(p))
    if len(outer) == 1:
        inner = list(members(outer[0]))
        if len(inner) == 1:
            return inner[0], inner[0]
        return None
    if len(outer) != 2:
        return None
    first, second = (list(members(s)) for s in outer)
    if len(first) == 1 and len(second) == 2 and first[0] in second:
        a = first[0]
        b = second[1] if second[0] == a else second[0]
        return a, b
    return None


def binunion(a: AckCode, b: AckCode) -> AckCode:
    """Code of a ∪ b (bitwise OR)."""
    return a | b


def bininter(a: AckCode, b: AckCode) -> AckCode:
    """Code of a ∩ b (bitwise AND)."""
    return a & b


def binunion_recursive(a: AckCode, b: AckCode) -> AckCode:
    """
    Binary union by recursion on b = 2^c + b′ with b′ < 2^c.

    The single-bit cases adjoin c unless c ε a. The composite case unions
    a∪{c} with b′; the accumulator form keeps the recursion on the second
    argument strictly decreasing.
    """
    if b == 0:
        return a
    c = top_member(b)
    rest = b - power_of_two(c)
    if rest == 0:
        return a if eps(c, a) else a + power_of_two(c)
    return binunion_recursive(binunion_recursive(a, power_of_two(c)), rest)


def bininter_recursive(a: AckCode, b: AckCode) -> AckCode:
    """
    Binary intersection by recursion on b = 2^c + b′ with b′ < 2^c.
    """
    if b == 0:
        return 0
    c = top_member(b)
    rest = b - power_of_two(c)
    if rest == 0:
        return power_of_two(c) if eps(c, a) else 0
    return binunion_recursive(
        bininter_recursive(a, power_of_two(c)), bininter_recursive(a, rest)
    )


def setunion(a: AckCode) -> AckCode:
    """
    Code of ⋃a: the OR of all members of a.
    """
    result = 0
    for c in members(a):
        result |= c
    return result


def setunion_recursive(a: AckCode) -> AckCode:
    """
    ⋃ by recursion: union(0) = 0, union(2^c + a′) = binunion(c, union(a′)).
    """
    if a == 0:
        return 0
    c = top_member(a)
    return binunion_recursive(c, setunion_recursive(a - power_of_two(c)))


def sigma(a: AckCode) -> Nat:
    """Cardinality of the coded set (number of set bits)."""
    return a.bit_count()


def sigma_recursive(a: AckCode) -> Nat:
    """
    σ(0) = 0 and σ(2^c + a′) = 1 + σ(a′), unrolled from the top bit.
    """
    count = 0
    while a:
        a -= power_of_two(top_member(a))
        count += 1
    return count


def v(n: Nat) -> AckCode:
    """
    Code of the n-th von Neumann ordinal: v(0)=0, v(n+1)=v(n) ∪ {v(n)}.

    Raises:
        RangeGuardException: For n ≥ 6
    """
    if n > MAX_VON_NEUMANN_INDEX:
        raise RangeGuardException("n", n, MAX_VON_NEUMANN_INDEX)
    return recurse_omega(0, lambda _k, h: binunion(h, power_of_two(h)), n)


def is_von_neumann(a: AckCode) -> Optional[Nat]:
    """
    Find n with v(n) = a.

    Returns:
        n, or None when a codes no von Neumann ordinal
    """
    for n in range(MAX_VON_NEUMANN_INDEX + 1):
        candidate = v(n)
        if candidate == a:
            return n
        if candidate > a:
            return None
    return None


def encode(x: HfSet) -> AckCode:
    """
    Ackermann code of a structural set: Σ 2^encode(y) over members y.

    Raises:
        CapExceededException: If the code exceeds the cap
    """
    memo: dict[HfSet, AckCode] = {}

    def code_of(node: HfSet) -> AckCode:
        if node in memo:
            return memo[node]
        total = 0
        for child in node:
            total += power_of_two(code_of(child))
        memo[node] = check_cap(total)
        return memo[node]

    return code_of(x)


def decode(a: AckCode) -> HfSet:
    """
    Structural set with code a, in canonical form.

    Members are produced in ascending code order, which is the canonical
    order, so no sorting is needed.
    """
    check_cap(a)
    return recurse_membership(
        lambda _y, table: HfSet.from_sorted(tuple(table.values())), a
    )


def adjoin(a: AckCode, b: AckCode) -> AckCode:
    """Code of a ∪ {b}."""
    return check_cap(a | power_of_two(b))


def rank(a: AckCode) -> Nat:
    """
    Rank of the coded set: max(rank(y)+1) over members, 0 for ∅.
    """
    return recurse_membership(
        lambda _y, table: max((r + 1 for r in table.values()), default=0), a
    )


def tc(a: AckCode) -> AckCode:
    """
    Transitive closure by iterating H(x,0)=x, H(x,n+1)=x ∪ ⋃H(x,n).

    The iteration is stable after rank(a) steps.
    """
    return recurse_omega(a, lambda _k, h: binunion(a, setunion(h)), rank(a))


def sum_members(a: AckCode) -> Nat:
    """
    Sum of the members of a as numbers, by the Σ̂ recursion.

    Σ̂(0,x) = 0 and Σ̂(c+1,x) = Σ̂(c,x) + (c+1 if c+1 ε x); the sum is
    Σ̂ evaluated at the largest member.
    """
    if a == 0:
        return 0
    return recurse_omega(
        0,
        lambda c, total: total + (c + 1 if eps(c + 1, a) else 0),
        top_member(a),
    )


def sum_members_direct(a: AckCode) -> Nat:
    """Sum of the members of a, added up directly."""
    return sum(members(a))


def fin_bijection(a: AckCode) -> list[AckCode]:
    """
    Members of the bijection f between the coded set and v(σ(a)).

    f(0) = ∅ and f(2^c + a′) = f(a′) ∪ {⟨c, v(σ(a′))⟩}. The result is the
    ascending list of pair codes; the code of f itself may be far beyond
    the cap even when every pair fits.
    """
    pairs: list[AckCode] = []
    rest = a
    while rest:
        c = top_member(rest)
        rest -= power_of_two(c)
        pairs.append(ordered_pair(c, v(sigma(rest))))
    return sorted(pairs)


def fin_bijection_inverse(a: AckCode) -> list[AckCode]:
    """
    Members of the inverse g: g(2^c + a′) = g(a′) ∪ {⟨v(σ(a′)), c⟩}.
    """
    pairs: list[AckCode] = []
    rest = a
    while rest:
        c = top_member(rest)
        rest -= power_of_two(c)
        pairs.append(ordered_pair(v(sigma(rest)), c))
    return sorted(pairs)


# name -> (arity, operation) for the command line and HTTP front ends
CODE_OPERATIONS: dict[str, tuple[int, Callable[..., object]]] = {
    "eps": (2, eps),
    "eps_oracle": (2, eps_oracle),
    "pair": (2, pair),
    "op": (2, ordered_pair),
    "unpair": (1, unpair),
    "binunion": (2, binunion),
    "bininter": (2, bininter),
    "union": (1, setunion),
    "sigma": (1, sigma),
    "v": (1, v),
    "is_von_neumann": (1, is_von_neumann),
    "adjoin": (2, adjoin),
    "tc": (1, tc),
    "rank": (1, rank),
    "sum_members": (1, sum_members),
}
