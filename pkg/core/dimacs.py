#!/usr/bin/env python3
"""
DIMACS undirected-graph format.

Pancake graphs are written with vertex id = lex_rank + 1 and one
"e u v" line per edge with u < v, streamed in rank order.
"""

import logging
from pathlib import Path
from typing import Hashable, IO, List, Optional, Sequence, Union

import networkx as nx

from core.errors import ColoringFormatError, RangeError
from core.pancake import PancakeView
from core.permutations import FACTORIALS, lex_rank
from core.streaming import EdgeVisitor, stream_edges

logger = logging.getLogger(__name__)


class _DimacsWriter(EdgeVisitor):
    """Writes edge lines; vertices arrive in rank order so u's id is a counter."""

    def __init__(self, target: IO[str]):
        self.target = target
        self._next_rank = 0
        self._u_id = 0

    def on_vertex(self, u):
        self._u_id = self._next_rank + 1
        self._next_rank += 1

    def on_edge(self, u, v, generator):
        self.target.write(f"e {self._u_id} {lex_rank(v) + 1}\n")


def write_pancake_dimacs(view: PancakeView, target: Union[str, Path, IO[str]]) -> int:
    """
    Export P_n as "p edge <n!> <n!(n-1)/2>" followed by its edge lines.

    Returns:
        number of edge lines written
    """
    if not view.is_unrestricted:
        raise RangeError(f"DIMACS export is defined for the full P_n, not {view.describe()}")
    if isinstance(target, (str, Path)):
        with open(target, 'w') as f:
            return write_pancake_dimacs(view, f)

    n = view.n
    vertices = FACTORIALS[n]
    edges = vertices * (n - 1) // 2
    target.write(f"p edge {vertices} {edges}\n")
    stats = stream_edges(view, _DimacsWriter(target), workers=1)
    logger.info(f"Exported P_{n} to DIMACS: {stats.edges} edges")
    return stats.edges


def write_graph_dimacs(graph: nx.Graph, target: IO[str], order: Optional[Sequence[Hashable]] = None) -> List[Hashable]:
    """
    Export an explicit graph; vertex ids follow `order` (default: sorted nodes).

    Returns:
        the node order used, so id i corresponds to order[i - 1]
    """
    nodes = list(order) if order is not None else sorted(graph.nodes())
    ids = {node: idx for idx, node in enumerate(nodes, start=1)}
    edges = sorted(tuple(sorted((ids[a], ids[b]))) for a, b in graph.edges())
    target.write(f"p edge {len(nodes)} {len(edges)}\n")
    for a, b in edges:
        target.write(f"e {a} {b}\n")
    return nodes


def read_dimacs(source: Union[str, Path, IO[str]]) -> nx.Graph:
    """Parse a DIMACS .col/.edge file into a graph on nodes 1..N."""
    if isinstance(source, (str, Path)):
        with open(source, 'r') as f:
            return read_dimacs(f)

    graph = nx.Graph()
    declared = None
    for line_num, line in enumerate(source, start=1):
        parts = line.split()
        if not parts or parts[0] == 'c':
            continue
        if parts[0] == 'p':
            if len(parts) != 4:
                raise ColoringFormatError(f"Line {line_num}: bad problem line {line.strip()!r}")
            declared = int(parts[2])
            graph.add_nodes_from(range(1, declared + 1))
        elif parts[0] == 'e':
            if len(parts) != 3:
                raise ColoringFormatError(f"Line {line_num}: bad edge line {line.strip()!r}")
            a, b = int(parts[1]), int(parts[2])
            if a != b:
                graph.add_edge(a, b)
    if declared is None:
        raise ColoringFormatError("DIMACS input has no 'p' line")
    return graph
