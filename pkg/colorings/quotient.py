#!/usr/bin/env python3
"""
Quotient graph Q_n and the equitable (n-1)-coloring of P_n.

Vertices of Q_n are the pairs (i, j), i != j, standing for D_i^j. Two pairs
are adjacent when they share the last element (same copy, a clique) or when
they are swapped, (i, j) ~ (j, i), which is the r_n edge between copies.

f(i, j) = i - j (i > j) or n + i - j, and c = f + eps, where eps swaps the
two values around n/2 in the copies whose last element exceeds n/2. A proper
coloring of Q_n lifts to P_n through pi -> (pi_1, pi_n).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.coloring import FunctionalColoring
from core.errors import DomainError, RangeError
from core.pancake import PancakeView
from core.permutations import Permutation
from core.streaming import EdgeVisitor, stream_edges

logger = logging.getLogger(__name__)

QuotientVertex = Tuple[int, int]


@dataclass(frozen=True)
class HalfPoint:
    """k = n / 2, kept exact (integral iff n is even)."""
    n: int

    @property
    def k(self) -> Fraction:
        return Fraction(self.n, 2)

    @property
    def integral(self) -> bool:
        return self.n % 2 == 0


@dataclass
class QuotientGraph:
    """Explicit Q_n."""
    n: int
    graph: nx.Graph

    @property
    def vertices(self) -> List[QuotientVertex]:
        return sorted(self.graph.nodes())

    @property
    def vertex_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()


def quotient_adjacent(a: QuotientVertex, b: QuotientVertex) -> bool:
    """Adjacency rule of Q_n: same last element, or swapped pair."""
    (i, j), (i2, j2) = a, b
    same_copy = j == j2 and i != i2
    swapped = i == j2 and j == i2
    return same_copy or swapped


def build_quotient(n: int) -> QuotientGraph:
    """Q_n with n(n-1) vertices and n(n-1)^2/2 edges."""
    if n < 3:
        raise RangeError(f"Q_n is defined for n >= 3, got n={n}")
    graph = nx.Graph()
    nodes = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    graph.add_nodes_from(nodes)
    for j in range(1, n + 1):
        column = [(i, j) for i in range(1, n + 1) if i != j]
        for a in range(len(column)):
            for b in range(a + 1, len(column)):
                graph.add_edge(column[a], column[b])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            graph.add_edge((i, j), (j, i))
    logger.debug(f"Built Q_{n}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return QuotientGraph(n=n, graph=graph)


class _QuotientContraction(EdgeVisitor):
    def __init__(self):
        self.pairs = set()

    def fresh(self):
        return _QuotientContraction()

    def on_edge(self, u, v, generator):
        a, b = (u[0], u[-1]), (v[0], v[-1])
        if a != b:
            self.pairs.add((min(a, b), max(a, b)))

    def merge(self, other):
        self.pairs |= other.pairs


def quotient_from_pancake(n: int, workers: int = 1) -> QuotientGraph:
    """Contract every D_i^j of an actual P_n to a vertex."""
    if n < 3 or n > 7:
        raise RangeError(f"quotient_from_pancake supports 3 <= n <= 7, got n={n}")
    visitor = _QuotientContraction()
    stream_edges(PancakeView(n), visitor, workers=workers)
    graph = nx.Graph()
    graph.add_nodes_from((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    graph.add_edges_from(visitor.pairs)
    return QuotientGraph(n=n, graph=graph)


def _check_pair(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"({i},{j}) is not a vertex of Q_{n}")
    if i == j:
        raise DomainError(f"D_i^j needs i != j, got ({i},{j})")


def f_value(n: int, i: int, j: int) -> int:
    """Cyclic difference of first and last element, a color in [n-1]."""
    _check_pair(n, i, j)
    return i - j if i > j else n + i - j


def c_value(n: int, i: int, j: int) -> int:
    """f with the two values around n/2 exchanged in copies with j > n/2."""
    f = f_value(n, i, j)
    half = HalfPoint(n).k
    epsilon = 0
    if j > half:
        if f == half:
            epsilon = 1
        elif f == half + 1:
            epsilon = -1
    return f + epsilon


def quotient_coloring(n: int) -> Dict[QuotientVertex, int]:
    """c on every vertex of Q_n."""
    if n < 3:
        raise RangeError(f"Q_n is defined for n >= 3, got n={n}")
    return {(i, j): c_value(n, i, j)
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j}


def quotient_conflicts(quotient: QuotientGraph, coloring: Dict[QuotientVertex, int]) -> List[Tuple[QuotientVertex, QuotientVertex]]:
    """Edges of Q_n whose endpoints share a color."""
    return [(a, b) for a, b in quotient.graph.edges() if coloring[a] == coloring[b]]


class QuotientLift:
    """Rule pi -> c(pi_1, pi_n), precomputed for all (i, j)."""

    def __init__(self, n: int):
        self.n = n
        self.colors = quotient_coloring(n)

    def __call__(self, perm: Permutation) -> int:
        return self.colors[(perm[0], perm[-1])]


def lift(n: int) -> FunctionalColoring:
    """Equitable (n-1)-coloring of P_n: classes of size n(n-2)!."""
    return FunctionalColoring(n, n - 1, QuotientLift(n), name="equitable-nm1")


def hamiltonian_order(n: int) -> List[QuotientVertex]:
    """
    Cycle through Q_n clique by clique.

    Copies are visited with last element n, n-1, ..., 1; inside copy j the
    first element runs j+1, j+2, ... cyclically (skipping j), so the copy
    ends at (j-1, j) and the next copy starts at its swapped partner.
    """
    if n < 3:
        raise RangeError(f"Q_n is defined for n >= 3, got n={n}")
    order: List[QuotientVertex] = []
    for j in range(n, 0, -1):
        for step in range(1, n):
            i = (j + step - 1) % n + 1
            order.append((i, j))
    return order


def greedy_quotient_coloring(n: int, order: Optional[Sequence[QuotientVertex]] = None) -> Dict[QuotientVertex, int]:
    """First-fit coloring of Q_n along `order` (default: hamiltonian_order)."""
    quotient = build_quotient(n)
    order = list(order) if order is not None else hamiltonian_order(n)
    colors: Dict[QuotientVertex, int] = {}
    for vertex in order:
        used = {colors[u] for u in quotient.graph.neighbors(vertex) if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[vertex] = c
    return colors


def same_partition(a: Dict[QuotientVertex, int], b: Dict[QuotientVertex, int]) -> bool:
    """True when two colorings induce the same classes (equal up to renaming colors)."""
    if set(a) != set(b):
        return False
    forward: Dict[int, int] = {}
    backward: Dict[int, int] = {}
    for vertex in a:
        x, y = a[vertex], b[vertex]
        if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
            return False
    return True
