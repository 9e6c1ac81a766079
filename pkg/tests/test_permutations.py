#!/usr/bin/env python3
"""
Unit tests for permutation arithmetic
"""

import pytest
import sys
import os
from itertools import permutations
from math import factorial

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.errors import CapacityError, RangeError
from core.permutations import (
    Parity,
    apply_reversal,
    check_enumerable,
    format_permutation,
    identity,
    iter_rank_range,
    lex_rank,
    lex_unrank,
    make_permutation,
    parity,
    parse_permutation,
    reversal_parity,
)


def test_prefix_reversal():
    """r_4 on [12345] reverses the first four entries."""
    result = apply_reversal((1, 2, 3, 4, 5), 4)
    assert result == (4, 3, 2, 1, 5), f"Expected [43215], got {format_permutation(result)}"


def test_reversal_is_an_involution():
    """Applying r_i twice gives the permutation back."""
    perm = (3, 1, 5, 2, 4)
    for i in range(2, 6):
        assert apply_reversal(apply_reversal(perm, i), i) == perm, f"r_{i} is not an involution"


def test_reversal_length_out_of_range():
    """r_1 and r_{n+1} are not generators."""
    with pytest.raises(RangeError):
        apply_reversal((1, 2, 3), 1)
    with pytest.raises(RangeError):
        apply_reversal((1, 2, 3), 4)


def test_lex_rank_examples():
    """Identity ranks 0, [213] ranks 2, the reversal ranks n! - 1."""
    assert lex_rank((1, 2, 3)) == 0
    assert lex_rank((2, 1, 3)) == 2, f"Expected rank 2, got {lex_rank((2, 1, 3))}"
    assert lex_rank((5, 4, 3, 2, 1)) == factorial(5) - 1


def test_rank_follows_lexicographic_order():
    """lex_rank agrees with sorted order and lex_unrank inverts it."""
    for rank, perm in enumerate(permutations(range(1, 6))):
        assert lex_rank(perm) == rank
        assert lex_unrank(rank, 5) == perm


def test_unrank_out_of_range():
    """Ranks must lie in [0, n!)."""
    with pytest.raises(RangeError):
        lex_unrank(24, 4)
    with pytest.raises(RangeError):
        lex_unrank(-1, 4)


def test_iter_rank_range_matches_unrank():
    """A rank window yields exactly the unranked permutations, in order."""
    window = list(iter_rank_range(6, 100, 130))
    assert window == [lex_unrank(r, 6) for r in range(100, 130)]
    assert list(iter_rank_range(3, 5, 99)) == [(3, 2, 1)], "stop is clamped to n!"
    assert list(iter_rank_range(3, 4, 4)) == []


def test_reversal_parity_rule():
    """r_i is even exactly when i = 0 or 1 (mod 4)."""
    for n in range(2, 10):
        perm = identity(n)
        for i in range(2, n + 1):
            expected = Parity.EVEN if i % 4 in (0, 1) else Parity.ODD
            assert reversal_parity(i) is expected
            assert parity(apply_reversal(perm, i)) is expected, f"parity of r_{i} in Sym_{n}"


def test_parse_and_format():
    """Compact and spaced forms parse to the same tuple."""
    assert parse_permutation("[14352]") == (1, 4, 3, 5, 2)
    assert parse_permutation("1 4 3 5 2") == (1, 4, 3, 5, 2)
    assert parse_permutation("[1, 4, 3, 5, 2]") == (1, 4, 3, 5, 2)
    assert format_permutation((1, 4, 3, 5, 2)) == "[14352]"
    assert format_permutation(tuple(range(1, 11))) == "[1 2 3 4 5 6 7 8 9 10]"


class TestPermutationValidation:
    """Malformed permutations are rejected."""

    def test_repeated_entry(self):
        with pytest.raises(RangeError):
            make_permutation([1, 1, 2])

    def test_missing_value(self):
        with pytest.raises(RangeError):
            make_permutation([1, 2, 4])

    def test_garbage_text(self):
        with pytest.raises(RangeError):
            parse_permutation("[1 x 2]")

    def test_empty_text(self):
        with pytest.raises(RangeError):
            parse_permutation("[]")

    def test_enumeration_bound(self):
        check_enumerable(12)
        with pytest.raises(CapacityError):
            check_enumerable(13)
