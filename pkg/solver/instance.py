#!/usr/bin/env python3
"""
Explicit graph instances for the solvers, plus search budgets and outcomes.

A GraphInstance holds adjacency lists over vertex indices 0..V-1. Built from
an unrestricted PancakeView, index equals lex_rank; built from a networkx
graph, index follows the sorted node order.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Hashable, List, Optional, Sequence, Union

import networkx as nx
import numpy as np

from core.coloring import Coloring, TabularColoring
from core.config import DEFAULT_MAX_NODES, DEFAULT_TIMEOUT_SECONDS, PancakeSettings
from core.errors import CapacityError, ConfigurationError
from core.pancake import PancakeView
from core.permutations import format_permutation

logger = logging.getLogger(__name__)

COMPLETE_LIMIT = 5040
HEURISTIC_LIMIT = 3628800


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search; all must be positive."""
    max_seconds: float = DEFAULT_TIMEOUT_SECONDS
    max_nodes: int = DEFAULT_MAX_NODES
    seed: int = 0

    def __post_init__(self):
        if self.max_seconds <= 0:
            raise ConfigurationError(f"max_seconds must be positive, got {self.max_seconds}")
        if self.max_nodes <= 0:
            raise ConfigurationError(f"max_nodes must be positive, got {self.max_nodes}")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be non-negative, got {self.seed}")

    @classmethod
    def from_settings(cls, settings: PancakeSettings, timeout: Optional[float] = None,
                      max_nodes: Optional[int] = None, seed: Optional[int] = None) -> "SearchBudget":
        """PANCAKE_* budget; explicit values (command-line flags) win when given."""
        return cls(
            max_seconds=timeout if timeout is not None else settings.timeout,
            max_nodes=max_nodes if max_nodes is not None else settings.max_nodes,
            seed=seed if seed is not None else settings.seed,
        )

    def remaining(self, started: float, nodes_used: int) -> Optional["SearchBudget"]:
        """What is left after `nodes_used` nodes since `started`; None once exhausted."""
        seconds = self.max_seconds - (time.time() - started)
        nodes = self.max_nodes - nodes_used
        if seconds <= 0 or nodes <= 0:
            return None
        return SearchBudget(max_seconds=seconds, max_nodes=nodes, seed=self.seed)


class SolveStatus(str, Enum):
    COLORED = "colored"
    UNSAT = "unsat"
    TIMEOUT = "timeout"


@dataclass
class SolveOutcome:
    """Result of one k-coloring search."""
    status: SolveStatus
    k: int
    mode: str
    nodes: int = 0
    elapsed: float = 0.0
    colors: Optional[List[int]] = None
    coloring: Optional[Coloring] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'status': self.status.value,
            'k': self.k,
            'mode': self.mode,
            'nodes': self.nodes,
            'elapsed': round(self.elapsed, 6),
            'witness': self.coloring.name if self.coloring is not None else None,
        }


class GraphInstance:
    """Adjacency-list graph with labelled vertices."""

    def __init__(self, labels: Sequence[Hashable], adjacency: List[List[int]],
                 view: Optional[PancakeView] = None, name: str = "graph"):
        self.labels = list(labels)
        self.adjacency = adjacency
        self.view = view
        self.name = name

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self):
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def is_proper(self, colors: Sequence[int]) -> bool:
        return all(colors[u] != colors[v] for u, v in self.edges())

    def label(self, v: int) -> str:
        value = self.labels[v]
        return format_permutation(value) if isinstance(value, tuple) else str(value)

    def csr(self):
        """(indptr, indices) numpy arrays of the adjacency."""
        degrees = np.fromiter((len(nbrs) for nbrs in self.adjacency), dtype=np.int64, count=self.order)
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter((v for nbrs in self.adjacency for v in nbrs), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    def to_coloring(self, colors: Sequence[int], k: int, name: str) -> Optional[Coloring]:
        """Witness as a Coloring when the instance is a full P_n (index = rank)."""
        if self.view is None or not self.view.is_unrestricted:
            return None
        table = np.asarray(colors, dtype=np.uint8 if k < 256 else np.uint16)
        return TabularColoring(self.view.n, k, table, name=name)

    @classmethod
    def from_view(cls, view: PancakeView, limit: int = HEURISTIC_LIMIT) -> "GraphInstance":
        """
        Materialize a view; vertices in rank order.

        Raises:
            CapacityError: if the view has more than `limit` vertices
        """
        if view.vertex_count > limit:
            raise CapacityError(f"{view.describe()} has {view.vertex_count} vertices, limit is {limit}")
        labels = []
        for lo, hi in view.rank_blocks():
            labels.extend(view.iter_vertices(lo, hi))
        index = {perm: idx for idx, perm in enumerate(labels)}
        adjacency = [[index[v] for _, v in view.adjacent(u)] for u in labels]
        logger.debug(f"Materialized {view.describe()}: {len(labels)} vertices")
        return cls(labels, adjacency, view=view, name=view.describe())

    @classmethod
    def from_networkx(cls, graph: nx.Graph, name: str = "graph") -> "GraphInstance":
        try:
            labels = sorted(graph.nodes())
        except TypeError:
            labels = list(graph.nodes())
        index = {node: idx for idx, node in enumerate(labels)}
        adjacency = [sorted(index[u] for u in graph.neighbors(node) if u != node) for node in labels]
        return cls(labels, adjacency, name=name)


GraphLike = Union[PancakeView, GraphInstance, nx.Graph]


def as_instance(graph: GraphLike, limit: int = HEURISTIC_LIMIT) -> GraphInstance:
    if isinstance(graph, GraphInstance):
        if graph.order > limit:
            raise CapacityError(f"{graph.name} has {graph.order} vertices, limit is {limit}")
        return graph
    if isinstance(graph, PancakeView):
        return GraphInstance.from_view(graph, limit)
    if isinstance(graph, nx.Graph):
        if graph.number_of_nodes() > limit:
            raise CapacityError(f"Graph has {graph.number_of_nodes()} vertices, limit is {limit}")
        return GraphInstance.from_networkx(graph)
    raise TypeError(f"Cannot build a graph instance from {type(graph).__name__}")


def first_fit(instance: GraphInstance, order: Optional[Sequence[int]] = None) -> List[int]:
    """Greedy coloring in `order`; colors start at 1."""
    colors = [0] * instance.order
    for v in (order if order is not None else range(instance.order)):
        used = {colors[u] for u in instance.adjacency[v]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors


@dataclass
class SearchClock:
    """Node and wall-clock accounting against a budget."""
    budget: SearchBudget
    started: float = field(default_factory=time.time)
    nodes: int = 0

    def tick(self) -> bool:
        """Count a node; False once the budget is exhausted."""
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            return False
        if self.nodes & 1023 == 0 and self.elapsed > self.budget.max_seconds:
            return False
        return True

    @property
    def elapsed(self) -> float:
        return time.time() - self.started
