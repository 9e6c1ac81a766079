#!/usr/bin/env python3
"""
Optimal 4-coloring of P_5, P_6 and P_7.

r_4 and r_5 are the only even reversals among r_2..r_7, so the r_4/r_5 edges
form a spanning union of 10-cycles (r_5 r_4)^5 on which permutation parity
is constant, while every other edge joins opposite parities. Even cycles get
colors 1/2 and odd cycles 3/4, alternating along the cycle.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List

from core.coloring import FunctionalColoring
from core.errors import RangeError
from core.permutations import FACTORIALS, Parity, Permutation, apply_reversal, iter_rank_range, parity

logger = logging.getLogger(__name__)

CYCLE_LENGTH = 10
PARITY4_SIZES = (5, 6, 7)


@dataclass(frozen=True)
class CyclePosition:
    """Place of a vertex on its (r_5 r_4)-cycle."""
    representative: Permutation
    distance: int


def walk_cycle(perm: Permutation) -> List[Permutation]:
    """The 10 vertices of the (r_5 r_4)-cycle through perm, starting with an r_5 step."""
    if len(perm) < 5:
        raise RangeError(f"(r_5 r_4)-cycles need n >= 5, got n={len(perm)}")
    cycle = [tuple(perm)]
    current = tuple(perm)
    for step in range(CYCLE_LENGTH - 1):
        current = apply_reversal(current, 5 if step % 2 == 0 else 4)
        cycle.append(current)
    return cycle


def cycle_position(perm: Permutation) -> CyclePosition:
    """
    Locate perm on its 10-cycle.

    The representative is the lexicographically smallest cycle vertex and the
    distance counts steps from it, walking r_5 first. Only the parity of the
    distance is used for coloring, and that does not depend on direction.

    Raises:
        RangeError: if n < 5
    """
    representative = min(walk_cycle(perm))
    distance = walk_cycle(representative).index(tuple(perm))
    return CyclePosition(representative=representative, distance=distance)


def parity4_color(perm: Permutation) -> int:
    """
    1 + (distance mod 2) on even permutations, 3 + (distance mod 2) on odd ones.

    Raises:
        RangeError: if n is not 5, 6 or 7
    """
    n = len(perm)
    if n not in PARITY4_SIZES:
        raise RangeError(f"parity4 coloring is defined for n in {PARITY4_SIZES}, got n={n}")
    offset = 1 if parity(perm) is Parity.EVEN else 3
    return offset + cycle_position(perm).distance % 2


def parity4_coloring(n: int) -> FunctionalColoring:
    if n not in PARITY4_SIZES:
        raise RangeError(f"parity4 coloring is defined for n in {PARITY4_SIZES}, got n={n}")
    return FunctionalColoring(n, 4, parity4_color, name="parity4")


def cycle_census(n: int) -> Dict[Permutation, int]:
    """Representative -> number of vertices of P_n that map to it."""
    if n < 5 or n > 8:
        raise RangeError(f"cycle_census supports 5 <= n <= 8, got n={n}")
    census: Counter = Counter()
    for perm in iter_rank_range(n, 0, FACTORIALS[n]):
        census[cycle_position(perm).representative] += 1
    logger.debug(f"P_{n}: {len(census)} (r_5 r_4)-cycles")
    return dict(census)
