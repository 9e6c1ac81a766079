#!/usr/bin/env python3
"""
Coloring verifiers: proper, equitable, perfect.

All three run on top of stream_edges, so a coloring of P_10 is checked
without ever materializing the graph.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.coloring import Coloring
from core.errors import RangeError
from core.pancake import PancakeView
from core.permutations import Permutation, format_permutation
from core.streaming import EdgeVisitor, stream_edges

logger = logging.getLogger(__name__)

MAX_WITNESSES = 10


@dataclass
class VerifyReport:
    """Outcome of verifying one coloring on one view."""
    view: str
    n: int
    k: int
    coloring: str
    vertices: int = 0
    edges: int = 0
    proper: bool = True
    violations: int = 0
    witnesses: List[Tuple[Permutation, Permutation]] = field(default_factory=list)
    class_sizes: List[int] = field(default_factory=list)
    equitable: bool = False
    strongly_equitable: bool = False
    perfect: Optional[bool] = None
    perfect_witness: Optional[Tuple[Permutation, Permutation]] = None
    elapsed: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'view': self.view,
            'n': self.n,
            'k': self.k,
            'coloring': self.coloring,
            'vertices': self.vertices,
            'edges': self.edges,
            'proper': self.proper,
            'violations': self.violations,
            'witnesses': [[format_permutation(u), format_permutation(v)] for u, v in self.witnesses],
            'class_sizes': list(self.class_sizes),
            'equitable': self.equitable,
            'strongly_equitable': self.strongly_equitable,
            'perfect': self.perfect,
            'perfect_witness': ([format_permutation(x) for x in self.perfect_witness]
                                if self.perfect_witness else None),
            'elapsed': round(self.elapsed, 6),
        }


class ProperVisitor(EdgeVisitor):
    """Counts color classes and monochromatic edges."""

    def __init__(self, coloring: Coloring):
        self.coloring = coloring
        self.class_counts = [0] * (coloring.k + 1)
        self.violations = 0
        self.witnesses: List[Tuple[Permutation, Permutation]] = []
        self._current_color = 0

    def fresh(self) -> "ProperVisitor":
        return ProperVisitor(self.coloring)

    def on_vertex(self, u):
        c = self.coloring.color(u)
        if not 1 <= c <= self.coloring.k:
            raise RangeError(f"{self.coloring.name} gives {format_permutation(u)} color {c} outside 1..{self.coloring.k}")
        self.class_counts[c] += 1
        self._current_color = c

    def on_edge(self, u, v, generator):
        if self.coloring.color(v) == self._current_color:
            self.violations += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append((u, v))

    def merge(self, other: "ProperVisitor"):
        self.class_counts = [a + b for a, b in zip(self.class_counts, other.class_counts)]
        self.violations += other.violations
        room = MAX_WITNESSES - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])


class PerfectVisitor(ProperVisitor):
    """
    Also checks that each color class has a single neighbor-color multiset.

    Keeps one reference multiset per color, so memory is O(k * n).
    """

    def __init__(self, view: PancakeView, coloring: Coloring):
        super().__init__(coloring)
        self.view = view
        self.references: Dict[int, Tuple[Tuple[int, ...], Permutation]] = {}
        self.mismatch: Optional[Tuple[Permutation, Permutation]] = None

    def fresh(self) -> "PerfectVisitor":
        return PerfectVisitor(self.view, self.coloring)

    def on_vertex(self, u):
        super().on_vertex(u)
        color = self.coloring.color
        signature = tuple(sorted(color(v) for _, v in self.view.adjacent(u)))
        reference = self.references.get(self._current_color)
        if reference is None:
            self.references[self._current_color] = (signature, u)
        elif self.mismatch is None and reference[0] != signature:
            self.mismatch = (reference[1], u)

    def merge(self, other: "PerfectVisitor"):
        super().merge(other)
        for c in sorted(other.references):
            theirs = other.references[c]
            mine = self.references.get(c)
            if mine is None:
                self.references[c] = theirs
            elif self.mismatch is None and mine[0] != theirs[0]:
                self.mismatch = (mine[1], theirs[1])
        if self.mismatch is None and other.mismatch is not None:
            self.mismatch = other.mismatch


def _verify(view: PancakeView, coloring: Coloring, perfect: bool, workers: int) -> VerifyReport:
    if coloring.n != view.n:
        raise RangeError(f"Coloring is for n={coloring.n}, view is {view.describe()}")
    visitor = PerfectVisitor(view, coloring) if perfect else ProperVisitor(coloring)
    stats = stream_edges(view, visitor, workers=workers)

    sizes = visitor.class_counts[1:]
    report = VerifyReport(
        view=view.describe(),
        n=view.n,
        k=coloring.k,
        coloring=coloring.name,
        vertices=stats.vertices,
        edges=stats.edges,
        proper=visitor.violations == 0,
        violations=visitor.violations,
        witnesses=list(visitor.witnesses),
        class_sizes=sizes,
        equitable=bool(sizes) and max(sizes) - min(sizes) <= 1,
        strongly_equitable=bool(sizes) and max(sizes) == min(sizes),
        elapsed=stats.elapsed,
    )
    if perfect:
        report.perfect = visitor.mismatch is None
        report.perfect_witness = visitor.mismatch

    if not report.proper:
        logger.warning(f"{coloring.name} on {report.view}: {report.violations} monochromatic edges")
    return report


def verify_proper(view: PancakeView, coloring: Coloring, workers: int = 1) -> VerifyReport:
    """Check that no edge of the view is monochromatic; class sizes are always filled."""
    return _verify(view, coloring, perfect=False, workers=workers)


def verify_equitable(view: PancakeView, coloring: Coloring, workers: int = 1) -> VerifyReport:
    """Check that class sizes differ by at most one (and whether they are all equal)."""
    return _verify(view, coloring, perfect=False, workers=workers)


def verify_perfect(view: PancakeView, coloring: Coloring, workers: int = 1) -> VerifyReport:
    """Check that the neighbor-color multiset of a vertex depends only on its color."""
    return _verify(view, coloring, perfect=True, workers=workers)