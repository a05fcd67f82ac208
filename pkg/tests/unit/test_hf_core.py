"""
Unit tests for the Ackermann coding and the set operations on codes.

Algebraic laws are checked with hypothesis over small codes; the
primitive recursions are compared with the bitwise implementations.
"""

import inspect

import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.domain.models.exceptions import CapExceededException, RangeGuardException
from src.domain.models.hf_set import EMPTY, HfSet
from src.domain.services import hf_core
from src.domain.services.hf_core import (
    adjoin,
    bininter,
    bininter_recursive,
    binunion,
    binunion_recursive,
    decode,
    encode,
    eps,
    eps_oracle,
    fin_bijection,
    fin_bijection_inverse,
    is_von_neumann,
    ordered_pair,
    pair,
    rank,
    setunion,
    setunion_recursive,
    sigma,
    sigma_recursive,
    sum_members,
    sum_members_direct,
    tc,
    unpair,
    v,
)
from src.domain.services.recursion import members, recurse_membership, recurse_omega

codes = st.integers(min_value=0, max_value=2**12 - 1)
small_codes = st.integers(min_value=0, max_value=6)


@pytest.mark.unit
class TestCodec:
    """Test suite for encode and decode."""

    @pytest.mark.parametrize("code,literal", [
        (0, "{}"),
        (1, "{{}}"),
        (2, "{{{}}}"),
        (3, "{{},{{}}}"),
        (11, "{{},{{}},{{},{{}}}}"),
    ])
    def test_should_decode_known_codes(self, code: int, literal: str) -> None:
        """
        GIVEN: A small code
        WHEN: It is decoded
        THEN: The brace literal should list the members in ascending code order
        """
        # Act & Assert
        assert str(decode(code)) == literal

    def test_should_encode_structural_set(self) -> None:
        # Arrange
        one = HfSet([EMPTY])

        # Act & Assert
        assert encode(EMPTY) == 0
        assert encode(HfSet([one, EMPTY])) == 3

    @given(codes)
    def test_should_round_trip_every_code(self, a: int) -> None:
        assert encode(decode(a)) == a

    @given(codes, codes)
    def test_should_keep_code_order_as_set_order(self, a: int, b: int) -> None:
        """
        GIVEN: Two codes
        WHEN: Their sets are compared structurally
        THEN: The comparison should agree with the numeric order
        """
        assert (decode(a) < decode(b)) == (a < b)
        assert (decode(a) == decode(b)) == (a == b)

    def test_should_reject_code_beyond_cap(self, small_bit_cap: int) -> None:
        # Act & Assert
        with pytest.raises(CapExceededException) as exc_info:
            decode(2**small_bit_cap)

        assert exc_info.value.cap == small_bit_cap


@pytest.mark.unit
class TestMembership:
    """Test suite for eps and its arithmetic oracle."""

    @given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=255))
    def test_should_agree_with_bit_test_and_oracle(self, a: int, b: int) -> None:
        expected = (b >> a) & 1 == 1
        assert eps(a, b) is expected
        assert eps_oracle(a, b) is expected

    def test_should_reject_member_beyond_cap(self, small_bit_cap: int) -> None:
        """
        GIVEN: A bit cap of 64
        WHEN: eps is asked about the member 64
        THEN: CapExceededException should be raised
        """
        # Act & Assert
        with pytest.raises(CapExceededException):
            eps(small_bit_cap, 0)

    def test_should_list_members_in_ascending_order(self) -> None:
        assert list(members(0)) == []
        assert list(members(10)) == [1, 3]
        assert list(members(2**40 + 1)) == [0, 40]


@pytest.mark.unit
class TestPairs:
    """Test suite for pairs and Kuratowski ordered pairs."""

    def test_should_code_singleton_pair_as_power_of_two(self) -> None:
        assert pair(3, 3) == 8
        assert pair(0, 2) == 5

    def test_should_code_ordered_pair(self) -> None:
        """
        GIVEN: The arguments (1, 1) and (0, 1)
        WHEN: Ordered pairs are built
        THEN: The codes should follow pair(pair(a,a), pair(a,b))
        """
        assert ordered_pair(1, 1) == 4
        assert ordered_pair(0, 1) == pair(1, 3)

    @given(small_codes, small_codes)
    def test_should_unpair_ordered_pair(self, a: int, b: int) -> None:
        assert unpair(ordered_pair(a, b)) == (a, b)

    @pytest.mark.parametrize("code", [0, 1, 3, 7, 11])
    def test_should_return_none_for_codes_that_are_no_pair(self, code: int) -> None:
        assert unpair(code) is None


@pytest.mark.unit
class TestBooleanAlgebra:
    """Test suite for unions, intersections and cardinality."""

    def test_should_compute_known_values(self) -> None:
        assert binunion(5, 6) == 7
        assert bininter(5, 6) == 4
        assert setunion(pair(1, 2)) == 3
        assert adjoin(1, 3) == 9
        assert sigma(11) == 3

    @given(codes, codes)
    def test_should_match_recursive_binary_operations(self, a: int, b: int) -> None:
        assert binunion_recursive(a, b) == binunion(a, b) == a | b
        assert bininter_recursive(a, b) == bininter(a, b) == a & b

    @given(codes, codes)
    def test_should_match_structural_operations(self, a: int, b: int) -> None:
        """
        GIVEN: Two codes
        WHEN: Union and intersection are taken on codes and on decoded sets
        THEN: Both should describe the same set
        """
        x, y = decode(a), decode(b)
        assert decode(binunion(a, b)) == x.union(y)
        assert decode(bininter(a, b)) == x.intersection(y)

    @given(codes)
    def test_should_match_recursive_unary_operations(self, a: int) -> None:
        assert setunion_recursive(a) == setunion(a) == encode(decode(a).big_union())
        assert sigma_recursive(a) == sigma(a) == len(decode(a))
        assert sum_members(a) == sum_members_direct(a)

    @given(small_codes, small_codes)
    def test_should_take_union_of_pair_as_binary_union(self, a: int, b: int) -> None:
        assert setunion(pair(a, b)) == binunion(a, b)


@pytest.mark.unit
class TestVonNeumann:
    """Test suite for the von Neumann ladder, rank and closure."""

    def test_should_produce_known_ladder(self) -> None:
        assert [v(n) for n in range(5)] == [0, 1, 3, 11, 2059]

    def test_should_guard_beyond_last_index(self) -> None:
        """
        GIVEN: The index 6, whose code does not fit any cap
        WHEN: v is called
        THEN: RangeGuardException should be raised
        """
        with pytest.raises(RangeGuardException) as exc_info:
            v(6)

        assert exc_info.value.limit == 5

    @pytest.mark.parametrize("n", range(5))
    def test_should_recognise_numerals_with_rank_and_closure(self, n: int) -> None:
        assert is_von_neumann(v(n)) == n
        assert rank(v(n)) == n
        assert tc(v(n)) == v(n)

    @pytest.mark.parametrize("code", [2, 4, 5, 12])
    def test_should_reject_non_numerals(self, code: int) -> None:
        assert is_von_neumann(code) is None

    def test_should_close_nested_singleton(self) -> None:
        # {{{}}} has code 4; its closure adds {{}} and {}
        assert tc(4) == 7
        assert rank(4) == 3


@pytest.mark.unit
class TestFiniteBijection:
    """Test suite for the bijection between a set and its numeral."""

    def test_should_map_members_to_numeral(self) -> None:
        """
        GIVEN: The set {0, 1} (code 3)
        WHEN: The bijection with v(2) and its inverse are built
        THEN: Each should unpair to a bijection
        """
        # Act
        forward = sorted(unpair(p) for p in fin_bijection(3))
        backward = sorted(unpair(p) for p in fin_bijection_inverse(3))

        # Assert
        assert forward == [(0, 0), (1, 1)]
        assert backward == [(0, 0), (1, 1)]

    def test_should_map_single_member_to_zero(self) -> None:
        assert [unpair(p) for p in fin_bijection(4)] == [(2, 0)]
        assert [unpair(p) for p in fin_bijection_inverse(4)] == [(0, 2)]
        assert fin_bijection(0) == []


@pytest.mark.unit
class TestRecursionCombinators:
    """Test suite for the two recursion combinators."""

    def test_should_iterate_primitive_recursion(self) -> None:
        assert recurse_omega(0, lambda k, h: h + k, 4) == 6
        assert recurse_omega("x", lambda k, h: h, 0) == "x"

    def test_should_evaluate_membership_recursion(self) -> None:
        # nodes of the membership tree below 11
        size = recurse_membership(lambda _y, table: sum(1 + t for t in table.values()), 11)
        assert size == 1 + 2 + 4


@pytest.mark.unit
class TestCodeOperationTable:
    """Test suite for the operation table of the front ends."""

    def test_should_expose_operations_with_arity(self) -> None:
        # Arrange
        table = hf_core.CODE_OPERATIONS

        # Act & Assert
        assert table["op"] == (2, ordered_pair)
        assert table["union"][0] == 1
        assert table["binunion"][1](5, 6) == 7
        assert table["unpair"][1](3) is None

    def test_should_document_every_public_function(self) -> None:
        # Arrange
        public = [
            function
            for name, function in inspect.getmembers(hf_core, inspect.isfunction)
            if not name.startswith("_") and function.__module__ == hf_core.__name__
        ]

        # Act
        undocumented = [function.__name__ for function in public if not function.__doc__]

        # Assert
        assert "sum_members_direct" in {function.__name__ for function in public}
        assert undocumented == []

    def test_should_sum_members_directly(self) -> None:
        assert sum_members_direct(0) == 0
        assert sum_members_direct(0b1011) == 0 + 1 + 3
