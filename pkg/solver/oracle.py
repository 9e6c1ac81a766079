"""
Brute-force chromatic number for tiny graphs, used to cross-check the solver.

Assignments are enumerated as restricted growth strings (vertex i takes a
color at most one above the largest color used before it), which lists
every partition of the vertex set into color classes exactly once.
"""

import logging
from typing import List, Sequence

import networkx as nx

from core.errors import SizeError

logger = logging.getLogger(__name__)

ORACLE_LIMIT = 10
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)


def brute_force_chi(graph: nx.Graph) -> int:
    """
    Minimum number of classes over all proper partitions.

    Raises:
        SizeError: for more than 10 vertices
    """
    order = graph.number_of_nodes()
    if order > ORACLE_LIMIT:
        raise SizeError(f"brute_force_chi handles at most {ORACLE_LIMIT} vertices, got {order}")
    if order == 0:
        return 0

    nodes = sorted(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    earlier: List[List[int]] = [
        [index[u] for u in graph.neighbors(node) if index[u] < index[node]] for node in nodes
    ]
    best = order
    colors = [0] * order

    def extend(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == order:
            best = used
            return
        for c in range(1, used + 2):
            if all(colors[j] != c for j in earlier[i]):
                colors[i] = c
                extend(i + 1, max(used, c))
        colors[i] = 0

    extend(0, 0)
    return best


def random_graphs(count: int, seed: int = 0, max_vertices: int = ORACLE_LIMIT,
                  probabilities: Sequence[float] = EDGE_PROBABILITIES) -> List[nx.Graph]:
    """Seeded G(n, p) graphs with 1..max_vertices vertices, cycling through probabilities."""
    graphs = []
    for i in range(count):
        vertices = 1 + i % max_vertices
        p = probabilities[i % len(probabilities)]
        graphs.append(nx.gnp_random_graph(vertices, p, seed=seed + i))
    return graphs
