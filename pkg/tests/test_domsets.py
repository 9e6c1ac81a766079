#!/usr/bin/env python3
"""
Unit tests for efficient dominating sets D_i and D_i^j
"""

import pytest
import sys
import os
from math import factorial

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.errors import CapacityError, IdentityConflictError, MembershipError, RangeError
from core.pancake import PancakeView, copy_view
from core.verify import verify_proper
from colorings.domsets import (
    DomSetId,
    dom_set,
    first_element_coloring,
    is_efficient_dominating,
    partition_check,
)


def test_small_dom_set_example():
    """D_2^3 in P_4 is [2143], [2413]."""
    members = dom_set(4, DomSetId(2, 3))
    assert members == [(2, 1, 4, 3), (2, 4, 1, 3)], f"Unexpected members {members}"


def test_dom_set_sizes():
    """|D_i| = (n-1)! and |D_i^j| = (n-2)!."""
    assert len(dom_set(6, DomSetId(3))) == factorial(5)
    assert len(dom_set(6, DomSetId(3, 1))) == factorial(4)


def test_every_d_i_is_efficient():
    """Each D_i is an efficient dominating set of P_n."""
    for n in (3, 4, 5, 6):
        for i in range(1, n + 1):
            certificate = is_efficient_dominating(PancakeView(n), dom_set(n, DomSetId(i)))
            assert certificate.efficient, f"D_{i} not efficient in P_{n}: {certificate.witnesses}"
            assert certificate.vertices_checked == factorial(n)


def test_every_d_i_is_efficient_on_p7_and_p8():
    for n in (7, 8):
        for i in range(1, n + 1):
            certificate = is_efficient_dominating(PancakeView(n), dom_set(n, DomSetId(i)), workers=2)
            assert certificate.efficient, f"D_{i} not efficient in P_{n}: {certificate.witnesses}"
            assert certificate.set_size == factorial(n - 1)


def test_every_d_i_j_is_efficient_in_its_copy():
    """D_i^j is an efficient dominating set of the copy P_{n-1}(j)."""
    n = 5
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if i == j:
                continue
            certificate = is_efficient_dominating(copy_view(n, j), dom_set(n, DomSetId(i, j)))
            assert certificate.efficient, f"D_{i}^{j} not efficient in P_4({j})"


def test_non_dominating_candidate_has_witnesses():
    """Half of D_1 leaves vertices undominated."""
    members = dom_set(4, DomSetId(1))[:3]
    certificate = is_efficient_dominating(PancakeView(4), members)
    assert certificate.independent
    assert not certificate.unique_domination
    assert certificate.witnesses and certificate.witnesses[0]['violates'] == 'domination'


def test_partition_of_sym_n():
    """The D_i^j partition Sym_n into n(n-1) parts of size (n-2)!."""
    for n in (3, 5, 7):
        report = partition_check(n)
        assert report.ok, f"partition check failed for n={n}: {report.problems}"
        assert report.parts == n * (n - 1)
        assert report.part_size == factorial(n - 2)


def test_first_element_coloring_is_proper():
    report = verify_proper(PancakeView(6), first_element_coloring(6))
    assert report.proper
    assert report.class_sizes == [factorial(5)] * 6


class TestDomSetErrors:
    """Invalid set names and sizes."""

    def test_identity_conflict(self):
        with pytest.raises(IdentityConflictError):
            DomSetId(2, 2)

    def test_out_of_range(self):
        with pytest.raises(RangeError):
            dom_set(4, DomSetId(5))

    def test_too_small(self):
        with pytest.raises(RangeError):
            dom_set(2, DomSetId(1))

    def test_foreign_member(self):
        with pytest.raises(MembershipError):
            is_efficient_dominating(copy_view(4, 4), [(1, 2, 4, 3)])

    def test_domination_limit(self):
        with pytest.raises(CapacityError):
            is_efficient_dominating(PancakeView(11), [])
