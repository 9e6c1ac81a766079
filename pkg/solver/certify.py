#!/usr/bin/env python3
"""
Chromatic-number certificates for P_3 .. P_7.

P_{m} is an induced subgraph of P_n for m <= n (fix the last n - m entries),
so chi(P_m) proven by the complete solver is a lower bound for chi(P_n).
The upper bound comes from a constructive coloring verified edge by edge.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.errors import RangeError
from core.pancake import PancakeView
from core.verify import verify_proper
from colorings.parity import PARITY4_SIZES, parity4_coloring
from colorings.quotient import lift
from solver.exact import exact_chi
from solver.instance import SearchBudget

logger = logging.getLogger(__name__)

MAX_CERTIFIED_N = 7
MAX_EXACT_N = 6


@dataclass
class ChromaticCertificate:
    n: int
    lower: int
    lower_source: str
    upper: int
    upper_source: str
    certified: bool
    status: str = 'decided'
    steps: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def chi(self) -> Optional[int]:
        return self.lower if self.certified else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'status': self.status,
            'chi': self.chi,
            'certified': self.certified,
            'lower': self.lower,
            'lower_source': self.lower_source,
            'upper': self.upper,
            'upper_source': self.upper_source,
            'steps': self.steps,
            'elapsed': round(self.elapsed, 6),
        }


def certify_chromatic_number(n: int, budget: Optional[SearchBudget] = None, workers: int = 1) -> ChromaticCertificate:
    """
    Lower bound from the largest P_m (m <= min(n, 6)) the solver decides; upper
    bound from parity4 (n = 5..7) or the lifted quotient coloring (n <= 4).

    Raises:
        RangeError: n outside 3..7
    """
    if n < 3 or n > MAX_CERTIFIED_N:
        raise RangeError(f"certify_chromatic_number supports 3 <= n <= {MAX_CERTIFIED_N}, got n={n}")
    budget = budget or SearchBudget()

    view = PancakeView(n)
    coloring = parity4_coloring(n) if n in PARITY4_SIZES else lift(n)
    report = verify_proper(view, coloring, workers=workers)
    if report.proper:
        upper, upper_source = coloring.k, f"{coloring.name} on P_{n} ({report.edges} edges verified)"
    else:
        upper, upper_source = n, f"greedy (Delta + 1); {coloring.name} failed verification"
        logger.warning(f"{coloring.name} is not proper on P_{n}; falling back to the greedy bound")

    lower, lower_source = 2, "P_2 (an edge)"
    steps: List[Dict[str, Any]] = []
    elapsed = report.elapsed
    status = 'decided'
    for m in range(min(n, MAX_EXACT_N), 1, -1):
        result = exact_chi(PancakeView(m), budget)
        elapsed += result.elapsed
        steps.append({'m': m, 'status': result.status, 'lower': result.lower, 'upper': result.upper,
                      'nodes': result.nodes})
        if result.chi is not None:
            if m == n and result.chi < upper:
                upper, upper_source = result.chi, f"complete search witness on P_{n}"
            if result.chi > lower:
                lower, lower_source = result.chi, f"chi(P_{m}) = {result.chi} by complete search"
            status = 'decided'
            break
        status = 'timeout'
        if result.lower > lower:
            lower, lower_source = result.lower, f"chi(P_{m}) >= {result.lower} (partial search)"

    certified = lower == upper
    if certified:
        status = 'decided'
    logger.info(f"P_{n}: {lower} <= chi <= {upper} ({'certified' if certified else status})")
    return ChromaticCertificate(n=n, lower=lower, lower_source=lower_source, upper=upper,
                                upper_source=upper_source, certified=certified, status=status,
                                steps=steps, elapsed=elapsed)
