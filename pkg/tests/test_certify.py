#!/usr/bin/env python3
"""
Unit tests for chromatic-number certificates
"""

import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.errors import RangeError
from solver.certify import certify_chromatic_number
from solver.instance import SearchBudget


def test_certify_small_graphs():
    """P_3, P_4 and P_5 are certified with matching lower and upper bounds."""
    budget = SearchBudget(max_seconds=120.0, max_nodes=10_000_000)
    for n, chi in ((3, 2), (4, 3), (5, 3)):
        certificate = certify_chromatic_number(n, budget)
        assert certificate.certified, f"P_{n} not certified: {certificate.to_dict()}"
        assert certificate.chi == chi
        assert certificate.steps[0]['m'] == n


def test_upper_bound_comes_from_a_verified_coloring():
    """With a budget too small to decide P_6, the bounds still bracket chi."""
    certificate = certify_chromatic_number(6, SearchBudget(max_seconds=60.0, max_nodes=1))
    assert certificate.upper == 4
    assert 'parity4' in certificate.upper_source
    assert certificate.lower == 3
    assert not certificate.certified
    assert certificate.chi is None
    assert certificate.steps[0] == {**certificate.steps[0], 'm': 6, 'status': 'timeout'}


def test_certificate_serializes():
    data = certify_chromatic_number(4, SearchBudget(max_seconds=60.0)).to_dict()
    assert data['chi'] == 3
    assert data['status'] == 'decided'
    assert {'lower_source', 'upper_source', 'steps'} <= set(data)


def test_range():
    with pytest.raises(RangeError):
        certify_chromatic_number(8)
    with pytest.raises(RangeError):
        certify_chromatic_number(2)


@pytest.mark.slow
def test_certify_p7():
    """chi(P_7) = 4: parity4 above, chi(P_6) = 4 below."""
    budget = SearchBudget(max_seconds=3600.0, max_nodes=10**9)
    certificate = certify_chromatic_number(7, budget, workers=os.cpu_count() or 1)
    assert certificate.certified
    assert certificate.chi == 4
