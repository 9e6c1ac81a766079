#!/usr/bin/env python3
"""
Implicit Pancake graphs.

A PancakeView is a handle on P_n, on an induced subgraph P_{n,K} (first
element restricted to K), or on a hierarchical copy P_{n-1}(j) (last element
fixed to j, internal reversals only). Nothing is materialized: neighbors are
recomputed from prefix reversals on demand.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from core.errors import DomainError, MembershipError, RangeError
from core.permutations import (
    FACTORIALS,
    MAX_N,
    Permutation,
    format_permutation,
    iter_rank_range,
)

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    """Edge {u, v} with v = u * r_generator."""
    u: Permutation
    v: Permutation
    generator: int


@dataclass(frozen=True)
class PancakeView:
    """
    Implicit view of P_n.

    Attributes:
        n: number of symbols, n >= 2
        restriction: admitted first elements K; None means K = [n]
        last: when set, the view is the copy P_{n-1}(last): vertices end
            with `last` and only r_2..r_{n-1} are edges
    """
    n: int
    restriction: Optional[FrozenSet[int]] = None
    last: Optional[int] = None

    def __post_init__(self):
        if self.n < 2 or self.n > MAX_N:
            raise RangeError(f"Pancake graph needs 2 <= n <= {MAX_N}, got n={self.n}")
        if self.restriction is not None:
            restriction = frozenset(int(x) for x in self.restriction)
            if not restriction or not restriction <= set(range(1, self.n + 1)):
                raise RangeError(f"Restriction {sorted(restriction)} must be a non-empty subset of [1..{self.n}]")
            object.__setattr__(self, 'restriction', restriction)
        if self.last is not None:
            if self.n < 3:
                raise RangeError(f"Copies P_(n-1)(j) need n >= 3, got n={self.n}")
            if not 1 <= self.last <= self.n:
                raise RangeError(f"Last element {self.last} outside [1, {self.n}]")

    @property
    def first_elements(self) -> Tuple[int, ...]:
        """Sorted admitted first elements (minus the fixed last element for copies)."""
        allowed = self.restriction if self.restriction is not None else range(1, self.n + 1)
        return tuple(sorted(a for a in allowed if a != self.last))

    @property
    def generators(self) -> range:
        """Prefix lengths whose reversals are edges of this view."""
        top = self.n - 1 if self.last is not None else self.n
        return range(2, top + 1)

    @property
    def is_unrestricted(self) -> bool:
        return self.restriction is None and self.last is None

    @property
    def vertex_count(self) -> int:
        firsts = len(self.first_elements)
        if self.last is not None:
            return firsts * FACTORIALS[self.n - 2]
        return firsts * FACTORIALS[self.n - 1]

    @property
    def degree(self) -> int:
        """Degree of the unrestricted graph (Delta = n - 1)."""
        return self.n - 1

    def contains(self, perm: Sequence[int]) -> bool:
        if len(perm) != self.n:
            return False
        if self.last is not None and perm[-1] != self.last:
            return False
        if self.restriction is not None and perm[0] not in self.restriction:
            return False
        return True

    def neighbors(self, perm: Permutation) -> List[Edge]:
        """
        Edges at perm inside the view, one per admissible reversal.

        Raises:
            MembershipError: if perm is not a vertex of the view
        """
        if not self.contains(perm):
            raise MembershipError(f"{format_permutation(perm)} is not a vertex of {self.describe()}")
        return [Edge(perm, v, i) for i, v in self.adjacent(perm)]

    def adjacent(self, perm: Permutation) -> Iterator[Tuple[int, Permutation]]:
        """(generator, neighbor) pairs without the membership check."""
        restriction = self.restriction
        for i in self.generators:
            v = perm[i - 1::-1] + perm[i:]
            if restriction is None or v[0] in restriction:
                yield i, v

    def rank_blocks(self) -> List[Tuple[int, int]]:
        """
        Contiguous rank ranges that contain every vertex of the view.

        Permutations sharing a first element occupy one block of (n-1)!
        consecutive ranks.
        """
        block = FACTORIALS[self.n - 1]
        blocks: List[Tuple[int, int]] = []
        for a in self.first_elements:
            start = (a - 1) * block
            if blocks and blocks[-1][1] == start:
                blocks[-1] = (blocks[-1][0], start + block)
            else:
                blocks.append((start, start + block))
        return blocks

    def iter_vertices(self, start: int = 0, stop: Optional[int] = None) -> Iterator[Permutation]:
        """Vertices with rank in [start, stop), in rank order."""
        if stop is None:
            stop = FACTORIALS[self.n]
        for lo, hi in self.rank_blocks():
            lo, hi = max(lo, start), min(hi, stop)
            if lo >= hi:
                continue
            for perm in iter_rank_range(self.n, lo, hi):
                if self.last is None or perm[-1] == self.last:
                    yield perm

    def describe(self) -> str:
        name = f"P_{self.n}"
        if self.last is not None:
            name = f"P_{self.n - 1}({self.last}) inside P_{self.n}"
        if self.restriction is not None:
            name += f" restricted to K={sorted(self.restriction)}"
        return name


def pancake_view(n: int, restriction: Optional[Iterable[int]] = None) -> PancakeView:
    """Build P_n or P_{n,K}."""
    return PancakeView(n, frozenset(restriction) if restriction is not None else None)


def copy_view(n: int, j: int, restriction: Optional[Iterable[int]] = None) -> PancakeView:
    """The copy P_{n-1}(j) of P_n: last element fixed to j, reversals r_2..r_{n-1}."""
    return PancakeView(n, frozenset(restriction) if restriction is not None else None, last=j)


def project(perm: Sequence[int], restriction: Iterable[int]) -> Permutation:
    """
    Homomorphism from P_{n,K} onto P_|K|.

    Deletes entries outside K and relabels the survivors by the
    order-preserving bijection K -> [|K|].

    Raises:
        DomainError: if perm[0] is not in K
    """
    labels = {value: idx for idx, value in enumerate(sorted(set(restriction)), start=1)}
    if not labels:
        raise DomainError("Projection needs a non-empty K")
    if perm[0] not in labels:
        raise DomainError(f"{format_permutation(perm)} starts outside K={sorted(labels)}")
    return tuple(labels[x] for x in perm if x in labels)


def project_interval(perm: Sequence[int], lo: int, hi: int) -> Permutation:
    """project() specialized to K = {lo, ..., hi}; no membership check."""
    shift = lo - 1
    return tuple(x - shift for x in perm if lo <= x <= hi)
