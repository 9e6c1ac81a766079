#!/usr/bin/env python3
"""
Unit tests for the quotient graph Q_n and the equitable (n-1)-coloring
"""

import pytest
import sys
import os
from io import StringIO
from math import factorial

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.dimacs import read_dimacs, write_graph_dimacs
from core.errors import DomainError, RangeError
from core.pancake import PancakeView
from core.verify import verify_equitable
from colorings.quotient import (
    HalfPoint,
    build_quotient,
    c_value,
    f_value,
    greedy_quotient_coloring,
    hamiltonian_order,
    lift,
    quotient_adjacent,
    quotient_coloring,
    quotient_conflicts,
    quotient_from_pancake,
    same_partition,
)


def test_quotient_sizes():
    """Q_n has n(n-1) vertices and n(n-1)^2/2 edges."""
    q4 = build_quotient(4)
    assert q4.vertex_count == 12 and q4.edge_count == 18
    q6 = build_quotient(6)
    assert q6.vertex_count == 30 and q6.edge_count == 75
    for n in range(3, 10):
        q = build_quotient(n)
        assert q.edge_count == n * (n - 1) ** 2 // 2


def test_adjacency_rule():
    """Same copy or swapped pair."""
    assert quotient_adjacent((1, 3), (2, 3))
    assert quotient_adjacent((1, 3), (3, 1))
    assert not quotient_adjacent((1, 3), (1, 2))
    assert not quotient_adjacent((1, 3), (2, 1))


def test_quotient_matches_contracted_pancake():
    """Contracting every D_i^j of P_n gives exactly Q_n."""
    for n in (3, 4, 5, 6):
        built = build_quotient(n)
        contracted = quotient_from_pancake(n)
        built_edges = {frozenset(e) for e in built.graph.edges()}
        contracted_edges = {frozenset(e) for e in contracted.graph.edges()}
        assert built_edges == contracted_edges, f"Q_{n} differs from the contraction of P_{n}"


def test_f_and_c_examples():
    """Worked values of f and the corrected color c."""
    assert f_value(5, 1, 3) == 3
    assert c_value(6, 2, 5) == 4, "f = 3 = n/2 in a copy with j > n/2 moves up"
    assert c_value(6, 3, 5) == 3, "f = 4 = n/2 + 1 moves down"
    assert c_value(6, 2, 3) == f_value(6, 2, 3), "copies with j <= n/2 are unchanged"


def test_half_point_is_exact():
    assert HalfPoint(6).integral and HalfPoint(6).k == 3
    assert not HalfPoint(7).integral
    assert HalfPoint(7).k * 2 == 7


def test_c_is_a_proper_coloring_of_q_n():
    """c uses n-1 colors and has no conflicts on Q_n."""
    for n in range(3, 13):
        coloring = quotient_coloring(n)
        assert set(coloring.values()) == set(range(1, n)), f"c does not use 1..{n - 1} on Q_{n}"
        assert quotient_conflicts(build_quotient(n), coloring) == []


def test_lift_is_equitable():
    """The lift is a proper (n-1)-coloring with classes of size n(n-2)!."""
    for n in (3, 4, 5, 6, 7):
        report = verify_equitable(PancakeView(n), lift(n))
        assert report.proper, f"lift({n}) has {report.violations} violations"
        assert report.class_sizes == [n * factorial(n - 2)] * (n - 1)
        assert report.strongly_equitable


def test_lift_is_equitable_on_p8():
    """lift(8): seven classes of 5760."""
    report = verify_equitable(PancakeView(8), lift(8), workers=2)
    assert report.proper, f"lift(8) has {report.violations} violations"
    assert report.class_sizes == [5760] * 7


@pytest.mark.slow
def test_lift_streams_on_p9_and_p10():
    """The lift stays proper and equitable at full scale."""
    for n in (9, 10):
        report = verify_equitable(PancakeView(n), lift(n), workers=os.cpu_count() or 1)
        assert report.proper, f"lift({n}) has {report.violations} violations"
        assert report.class_sizes == [n * factorial(n - 2)] * (n - 1)


def test_c_is_proper_and_injective_on_columns():
    """For 3 <= n <= 200: inside copy j the values c(i, j) are 1..n-1 without repeats, and c(i, j) != c(j, i)."""
    for n in range(3, 201):
        coloring = quotient_coloring(n)
        for j in range(1, n + 1):
            column = [coloring[(i, j)] for i in range(1, n + 1) if i != j]
            assert sorted(column) == list(range(1, n)), f"c is not injective on copy {j} of Q_{n}"
        for (i, j), color in coloring.items():
            assert color != coloring[(j, i)], f"({i},{j}) and ({j},{i}) share color {color} in Q_{n}"


def test_hamiltonian_order_is_a_cycle():
    """Consecutive pairs (and the wrap-around) are edges of Q_n."""
    for n in range(3, 13):
        order = hamiltonian_order(n)
        assert order[0] == (1, n)
        assert len(set(order)) == n * (n - 1)
        for a, b in zip(order, order[1:] + order[:1]):
            assert quotient_adjacent(a, b), f"{a} -> {b} is not an edge of Q_{n}"


def test_greedy_reproduces_c():
    """First-fit along the Hamiltonian order yields the partition of c for n = 4 and 6."""
    for n in (4, 6):
        assert same_partition(greedy_quotient_coloring(n), quotient_coloring(n))


def test_same_partition_detects_renaming():
    a = {(1, 2): 1, (2, 1): 2, (1, 3): 1}
    assert same_partition(a, {(1, 2): 5, (2, 1): 7, (1, 3): 5})
    assert not same_partition(a, {(1, 2): 5, (2, 1): 7, (1, 3): 7})


def test_quotient_dimacs_export():
    """Q_n written to DIMACS reads back with the same shape."""
    quotient = build_quotient(5)
    buffer = StringIO()
    order = write_graph_dimacs(quotient.graph, buffer, order=quotient.vertices)
    buffer.seek(0)
    graph = read_dimacs(buffer)
    assert order[0] == (1, 2)
    assert graph.number_of_nodes() == 20 and graph.number_of_edges() == 40


class TestQuotientErrors:

    def test_diagonal_pair(self):
        with pytest.raises(DomainError):
            c_value(5, 3, 3)

    def test_pair_out_of_range(self):
        with pytest.raises(DomainError):
            f_value(5, 6, 1)

    def test_small_n(self):
        with pytest.raises(RangeError):
            build_quotient(2)

    def test_contraction_limit(self):
        with pytest.raises(RangeError):
            quotient_from_pancake(8)
