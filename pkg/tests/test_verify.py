#!/usr/bin/env python3
"""
Unit tests for the proper / equitable / perfect verifiers
"""

import pytest
import sys
import os
from itertools import permutations

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.coloring import FunctionalColoring, tabulate
from core.errors import RangeError
from core.pancake import PancakeView
from core.permutations import Parity, parity
from core.verify import verify_equitable, verify_perfect, verify_proper
from colorings.domsets import first_element_coloring
from colorings.quotient import lift


def parity_color(perm):
    return 1 if parity(perm) is Parity.EVEN else 2


def constant_color(perm):
    return 1


def test_parity_colors_p3():
    """P_3 is a 6-cycle and parity 2-colors it."""
    report = verify_proper(PancakeView(3), FunctionalColoring(3, 2, parity_color, name="parity"))
    assert report.proper, f"Expected a proper coloring, got {report.violations} violations"
    assert report.class_sizes == [3, 3]
    assert report.strongly_equitable


def test_parity_fails_on_p4():
    """r_4 is even, so parity is not proper on P_4; witnesses are real edges."""
    view = PancakeView(4)
    report = verify_proper(view, FunctionalColoring(4, 2, parity_color, name="parity"))
    assert not report.proper
    assert report.violations == 12, "each vertex has exactly one r_4 edge, 24 / 2 monochromatic edges"
    for u, v in report.witnesses:
        assert v in [w for _, w in view.adjacent(u)]


def test_first_element_is_proper_and_equitable():
    """Coloring by first element is a proper, strongly equitable n-coloring."""
    report = verify_equitable(PancakeView(5), first_element_coloring(5))
    assert report.proper
    assert report.class_sizes == [24] * 5
    assert report.equitable and report.strongly_equitable


def test_constant_coloring_counts_every_edge():
    report = verify_proper(PancakeView(4), FunctionalColoring(4, 1, constant_color, name="one"))
    assert report.violations == 36
    assert len(report.witnesses) == 10


def test_first_element_is_perfect():
    """Each D_i is efficiently dominating, so the first-element coloring is perfect."""
    report = verify_perfect(PancakeView(5), first_element_coloring(5))
    assert report.perfect is True
    assert report.perfect_witness is None


def test_lift_is_not_perfect_on_small_n():
    """The equitable (n-1)-coloring is not perfect on P_4 and P_6."""
    for n in (4, 6):
        report = verify_perfect(PancakeView(n), lift(n))
        assert report.proper
        assert report.perfect is False, f"lift({n}) unexpectedly perfect"
        a, b = report.perfect_witness
        assert lift(n).color(a) == lift(n).color(b)


def test_parallel_verification_agrees():
    """Worker count changes neither counts nor verdicts."""
    serial = verify_perfect(PancakeView(6), lift(6), workers=1)
    parallel = verify_perfect(PancakeView(6), lift(6), workers=3)
    assert parallel.class_sizes == serial.class_sizes
    assert parallel.violations == serial.violations
    assert parallel.perfect == serial.perfect


def test_size_mismatch():
    with pytest.raises(RangeError):
        verify_proper(PancakeView(5), first_element_coloring(4))


def test_report_serializes_witnesses():
    report = verify_proper(PancakeView(3), FunctionalColoring(3, 1, constant_color, name="one"))
    data = report.to_dict()
    assert data['proper'] is False
    assert data['witnesses'][0][0].startswith('[')


def naive_violations(n, color):
    """Monochromatic edges found by testing every pair of permutations."""
    vertices = list(permutations(range(1, n + 1)))
    count = 0
    for a, u in enumerate(vertices):
        for v in vertices[a + 1:]:
            adjacent = any(v == u[i - 1::-1] + u[i:] for i in range(2, n + 1))
            if adjacent and color(u) == color(v):
                count += 1
    return count


def test_verify_proper_matches_double_loop():
    """Streamed counts agree with an all-pairs check for n <= 5."""
    for n in range(2, 6):
        candidates = [
            FunctionalColoring(n, 1, constant_color, name="one"),
            FunctionalColoring(n, 2, parity_color, name="parity"),
            first_element_coloring(n),
        ]
        if n >= 3:
            candidates.append(lift(n))
        for coloring in candidates:
            report = verify_proper(PancakeView(n), coloring)
            expected = naive_violations(n, coloring.color)
            assert report.violations == expected, f"{coloring.name} on P_{n}: {report.violations} != {expected}"
            assert report.proper == (expected == 0)


def test_functional_and_tabular_reports_agree():
    """A rule and its table give the same report, witnesses included."""
    for coloring in (FunctionalColoring(5, 2, parity_color, name="parity"), lift(6)):
        functional = verify_perfect(PancakeView(coloring.n), coloring).to_dict()
        tabular = verify_perfect(PancakeView(coloring.n), tabulate(coloring)).to_dict()
        functional.pop('elapsed')
        tabular.pop('elapsed')
        assert tabular == functional


def test_first_element_is_perfect_for_every_small_n():
    for n in range(3, 9):
        report = verify_perfect(PancakeView(n), first_element_coloring(n), workers=2)
        assert report.proper
        assert report.perfect is True, f"first-element coloring of P_{n} is not perfect: {report.perfect_witness}"
