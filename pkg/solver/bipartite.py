#!/usr/bin/env python3
"""
Breadth-first 2-coloring with an odd-cycle certificate.

When an edge joins two vertices of the same BFS layer, walking both ends up
the BFS tree to their lowest common ancestor closes an odd cycle. The first
such edge found from the root lies on a shortest odd cycle through it.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Union

import networkx as nx

from core.pancake import PancakeView
from core.permutations import check_enumerable, format_permutation
from solver.instance import GraphInstance

logger = logging.getLogger(__name__)

BIPARTITE_LIMIT = 10


@dataclass
class BipartiteResult:
    bipartite: bool
    vertices_seen: int
    cycle: Optional[List[Hashable]] = None

    @property
    def witness(self) -> Optional[List[str]]:
        """Odd cycle as printable vertex labels."""
        if self.cycle is None:
            return None
        return [format_permutation(v) if isinstance(v, tuple) else str(v) for v in self.cycle]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'bipartite': self.bipartite,
            'vertices_seen': self.vertices_seen,
            'odd_cycle': self.witness,
            'odd_cycle_length': len(self.cycle) if self.cycle else None,
        }


def _odd_cycle(parent: Dict[Hashable, Hashable], u: Hashable, v: Hashable) -> List[Hashable]:
    """Cycle u -> ... -> lca -> ... -> v (closed by the edge v-u)."""
    left, right = [u], [v]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def _bfs(starts: Iterable[Hashable], neighbors: Callable[[Hashable], Iterable[Hashable]]) -> BipartiteResult:
    side: Dict[Hashable, int] = {}
    parent: Dict[Hashable, Hashable] = {}
    for root in starts:
        if root in side:
            continue
        side[root] = 0
        parent[root] = root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in neighbors(u):
                if v not in side:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    cycle = _odd_cycle(parent, u, v)
                    logger.debug(f"Odd cycle of length {len(cycle)} found after {len(side)} vertices")
                    return BipartiteResult(bipartite=False, vertices_seen=len(side), cycle=cycle)
    return BipartiteResult(bipartite=True, vertices_seen=len(side))


def is_bipartite(graph: Union[PancakeView, GraphInstance, nx.Graph]) -> BipartiteResult:
    """
    2-color the graph or return an odd cycle.

    Raises:
        CapacityError: for views with n > 10
    """
    if isinstance(graph, PancakeView):
        check_enumerable(graph.n, BIPARTITE_LIMIT)
        view = graph

        def starts() -> Iterable[Hashable]:
            for lo, hi in view.rank_blocks():
                yield from view.iter_vertices(lo, hi)

        return _bfs(starts(), lambda u: (v for _, v in view.adjacent(u)))

    if isinstance(graph, GraphInstance):
        adjacency: Sequence[List[int]] = graph.adjacency
        result = _bfs(range(graph.order), lambda u: adjacency[u])
        if result.cycle is not None:
            result.cycle = [graph.labels[v] for v in result.cycle]
        return result

    return _bfs(sorted(graph.nodes()), graph.neighbors)
