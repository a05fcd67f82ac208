"""
Structural hereditarily finite sets.

HfSet is the canonical tree form of an HF set: children are pairwise
distinct and sorted ascending in the Ackermann order. The order is
computed structurally (the larger set is the one holding the largest
element of the symmetric difference), so sets whose codes are far beyond
the bit cap, such as large von Neumann ordinals, still have a canonical
form. Equal subtrees may be shared; sharing never changes equality.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, Iterator, TypeAlias

AckCode: TypeAlias = int
Nat: TypeAlias = int


def ackermann_compare(left: "HfSet", right: "HfSet") -> int:
    """
    Compare two sets in the order of their Ackermann codes.

    Results are memoized per call on node identity, so comparing two
    separately built ordinals with heavy sharing stays linear.

    Args:
        left: First set
        right: Second set

    Returns:
        -1, 0 or 1 as left is below, equal to or above right
    """
    memo: dict[tuple[int, int], int] = {}

    def walk(a: HfSet, b: HfSet) -> int:
        if a is b:
            return 0
        key = (id(a), id(b))
        if key in memo:
            return memo[key]
        xs, ys = a.children, b.children
        i, j = len(xs) - 1, len(ys) - 1
        order = 0
        while i >= 0 and j >= 0:
            order = walk(xs[i], ys[j])
            if order != 0:
                break
            i -= 1
            j -= 1
        if order == 0:
            order = (i >= 0) - (j >= 0)
        memo[key] = order
        return order

    return walk(left, right)


def structurally_equal(left: "HfSet", right: "HfSet") -> bool:
    """
    Extensional equality of two canonical sets.

    Pairs already proven equal are remembered on node identity.
    """
    proven: set[tuple[int, int]] = set()

    def walk(a: HfSet, b: HfSet) -> bool:
        if a is b:
            return True
        if a._hash != b._hash or len(a._children) != len(b._children):
            return False
        key = (id(a), id(b))
        if key in proven:
            return True
        if all(walk(x, y) for x, y in zip(a._children, b._children)):
            proven.add(key)
            return True
        return False

    return walk(left, right)


_ACKERMANN_KEY = cmp_to_key(ackermann_compare)


class HfSet:
    """
    Immutable hereditarily finite set in canonical form.

    Attributes:
        children: Members, distinct and ascending in the Ackermann order
    """

    __slots__ = ("_children", "_hash")

    def __init__(self, children: Iterable[HfSet] = ()) -> None:
        unique = list(dict.fromkeys(children))
        unique.sort(key=_ACKERMANN_KEY)
        self._init(tuple(unique))

    def _init(self, children: tuple[HfSet, ...]) -> None:
        self._children = children
        self._hash = hash((len(children),) + tuple(hash(c) for c in children))

    @classmethod
    def from_sorted(cls, children: tuple[HfSet, ...]) -> HfSet:
        """
        Build a set from children already distinct and ascending.

        Args:
            children: Canonically ordered members

        Returns:
            The set, without re-sorting
        """
        node = cls.__new__(cls)
        node._init(children)
        return node

    @property
    def children(self) -> tuple[HfSet, ...]:
        return self._children

    def __len__(self) -> int:
        return len(self._children)

    def __iter__(self) -> Iterator[HfSet]:
        return iter(self._children)

    def __contains__(self, item: object) -> bool:
        return any(child == item for child in self._children)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, HfSet):
            return NotImplemented
        return structurally_equal(self, other)

    def __lt__(self, other: HfSet) -> bool:
        return ackermann_compare(self, other) < 0

    def __le__(self, other: HfSet) -> bool:
        return ackermann_compare(self, other) <= 0

    def __repr__(self) -> str:
        return f"HfSet({self})"

    def __str__(self) -> str:
        return "{" + ",".join(str(child) for child in self._children) + "}"

    @property
    def is_empty(self) -> bool:
        return not self._children

    def union(self, other: HfSet) -> HfSet:
        return HfSet(self._children + other._children)

    def intersection(self, other: HfSet) -> HfSet:
        kept = set(other._children)
        return HfSet.from_sorted(tuple(c for c in self._children if c in kept))

    def adjoin(self, element: HfSet) -> HfSet:
        """
        Return self ∪ {element}.

        Args:
            element: Set to adjoin

        Returns:
            The enlarged set (self when element is already a member)
        """
        if element in self:
            return self
        return HfSet(self._children + (element,))

    def big_union(self) -> HfSet:
        return HfSet(grandchild for child in self._children for grandchild in child)


EMPTY = HfSet()
