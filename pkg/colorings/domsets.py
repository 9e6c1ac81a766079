#!/usr/bin/env python3
"""
Efficient dominating sets of Pancake graphs.

D_i collects the permutations starting with i; D_i^j those starting with i
and ending with j. The D_i are the efficient dominating sets of P_n, the
D_i^j those of the copies P_{n-1}(j), and the D_i^j together partition
Sym_n into n(n-1) parts of size (n-2)!.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional

from core.coloring import FunctionalColoring
from core.errors import IdentityConflictError, MembershipError, RangeError
from core.pancake import PancakeView
from core.permutations import FACTORIALS, Permutation, check_enumerable, format_permutation
from core.streaming import EdgeVisitor, stream_edges

logger = logging.getLogger(__name__)

DOMINATION_LIMIT = 10
MAX_DOMINATION_WITNESSES = 10


@dataclass(frozen=True)
class DomSetId:
    """Names D_i (j is None) or D_i^j."""
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.j is not None and self.i == self.j:
            raise IdentityConflictError(f"D_i^j needs i != j, got i=j={self.i}")

    def label(self) -> str:
        return f"D_{self.i}" if self.j is None else f"D_{self.i}^{self.j}"


def dom_set(n: int, dom_id: DomSetId) -> List[Permutation]:
    """
    Members of D_i or D_i^j as a rank-sorted list.

    Raises:
        RangeError: if n < 3 or i, j outside [n]
    """
    if n < 3:
        raise RangeError(f"Dominating sets are defined for n >= 3, got n={n}")
    check_enumerable(n)
    i, j = dom_id.i, dom_id.j
    if not 1 <= i <= n or (j is not None and not 1 <= j <= n):
        raise RangeError(f"{dom_id.label()} names elements outside [1, {n}]")

    if j is None:
        rest = [x for x in range(1, n + 1) if x != i]
        return [(i,) + middle for middle in permutations(rest)]
    rest = [x for x in range(1, n + 1) if x not in (i, j)]
    return [(i,) + middle + (j,) for middle in permutations(rest)]


def first_element_color(perm: Permutation) -> int:
    return perm[0]


def first_element_coloring(n: int) -> FunctionalColoring:
    """The n-coloring by D_i membership: color = first element."""
    return FunctionalColoring(n, n, first_element_color, name="first-element")


@dataclass
class DominationCertificate:
    """Result of an efficient-domination check."""
    efficient: bool
    independent: bool
    unique_domination: bool
    set_size: int
    vertices_checked: int
    witnesses: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'efficient': self.efficient,
            'independent': self.independent,
            'unique_domination': self.unique_domination,
            'set_size': self.set_size,
            'vertices_checked': self.vertices_checked,
            'witnesses': self.witnesses,
        }


class DominationVisitor(EdgeVisitor):
    """Counts, for every vertex, its neighbors inside the candidate set."""

    def __init__(self, view: PancakeView, members: FrozenSet[Permutation]):
        self.view = view
        self.members = members
        self.independence_failures = 0
        self.domination_failures = 0
        self.witnesses: List[Dict[str, Any]] = []

    def fresh(self) -> "DominationVisitor":
        return DominationVisitor(self.view, self.members)

    def on_vertex(self, u):
        members = self.members
        hits = sum(1 for _, v in self.view.adjacent(u) if v in members)
        inside = u in members
        if inside and hits:
            self.independence_failures += 1
            kind = 'independence'
        elif not inside and hits != 1:
            self.domination_failures += 1
            kind = 'domination'
        else:
            return
        if len(self.witnesses) < MAX_DOMINATION_WITNESSES:
            self.witnesses.append({
                'vertex': format_permutation(u),
                'in_set': inside,
                'neighbors_in_set': hits,
                'violates': kind,
            })

    def merge(self, other: "DominationVisitor"):
        self.independence_failures += other.independence_failures
        self.domination_failures += other.domination_failures
        room = MAX_DOMINATION_WITNESSES - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])


def is_efficient_dominating(view: PancakeView,
                            candidate: Iterable[Permutation],
                            workers: int = 1) -> DominationCertificate:
    """
    Check that `candidate` is independent and dominates every other vertex exactly once.

    Raises:
        CapacityError: for n > 10
        MembershipError: if a member is not a vertex of the view
    """
    check_enumerable(view.n, DOMINATION_LIMIT)
    members = frozenset(tuple(p) for p in candidate)
    for perm in members:
        if not view.contains(perm):
            raise MembershipError(f"{format_permutation(perm)} is not a vertex of {view.describe()}")

    visitor = DominationVisitor(view, members)
    stats = stream_edges(view, visitor, workers=workers)
    certificate = DominationCertificate(
        efficient=visitor.independence_failures == 0 and visitor.domination_failures == 0,
        independent=visitor.independence_failures == 0,
        unique_domination=visitor.domination_failures == 0,
        set_size=len(members),
        vertices_checked=stats.vertices,
        witnesses=visitor.witnesses,
    )
    logger.info(f"Domination check on {view.describe()} ({len(members)} members): efficient={certificate.efficient}")
    return certificate


@dataclass
class PartitionReport:
    """Whether the D_i^j partition Sym_n and refine the D_i."""
    n: int
    ok: bool
    parts: int
    part_size: int
    problems: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'ok': self.ok, 'parts': self.parts,
                'part_size': self.part_size, 'problems': self.problems}


class _EndpointCounter(EdgeVisitor):
    def __init__(self):
        self.counts: Counter = Counter()

    def fresh(self):
        return _EndpointCounter()

    def on_vertex(self, u):
        self.counts[(u[0], u[-1])] += 1

    def merge(self, other):
        self.counts.update(other.counts)


def partition_check(n: int, workers: int = 1) -> PartitionReport:
    """
    Verify that {D_i^j : i != j} partitions Sym_n into n(n-1) parts of size
    (n-2)! and that the union over j of D_i^j is D_i.
    """
    if n < 3 or n > DOMINATION_LIMIT:
        raise RangeError(f"partition_check needs 3 <= n <= {DOMINATION_LIMIT}, got n={n}")

    counter = _EndpointCounter()
    stream_edges(PancakeView(n), counter, workers=workers)
    problems: List[str] = []
    part_size = FACTORIALS[n - 2]

    expected_parts = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
    if set(counter.counts) != expected_parts:
        problems.append(f"found {len(counter.counts)} (first, last) classes, expected {len(expected_parts)}")
    wrong = [(key, size) for key, size in sorted(counter.counts.items()) if size != part_size]
    if wrong:
        problems.append(f"{len(wrong)} parts differ from size {part_size}, e.g. {wrong[0]}")

    for i in range(1, n + 1):
        row = sum(size for (a, _), size in counter.counts.items() if a == i)
        if row != FACTORIALS[n - 1]:
            problems.append(f"union over j of D_{i}^j has {row} vertices, |D_{i}| = {FACTORIALS[n - 1]}")

    if n <= 7:
        # cross-check the explicit constructions against the counts
        seen = set()
        for i in range(1, n + 1):
            union = set()
            for j in range(1, n + 1):
                if j == i:
                    continue
                part = dom_set(n, DomSetId(i, j))
                if seen.intersection(part):
                    problems.append(f"D_{i}^{j} overlaps an earlier part")
                seen.update(part)
                union.update(part)
            if union != set(dom_set(n, DomSetId(i))):
                problems.append(f"union over j of D_{i}^j differs from D_{i}")
        if len(seen) != FACTORIALS[n]:
            problems.append(f"parts cover {len(seen)} of {FACTORIALS[n]} permutations")

    report = PartitionReport(n=n, ok=not problems, parts=len(counter.counts), part_size=part_size, problems=problems)
    if problems:
        logger.warning(f"Partition check for n={n} failed: {problems}")
    return report
