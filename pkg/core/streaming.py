#!/usr/bin/env python3
"""
Edge streaming over implicit Pancake graphs.

Every edge {u, v} of a view is visited exactly once, from the endpoint whose
tuple is lexicographically smaller (equivalently, the smaller lex_rank).
Work is split into contiguous rank ranges; with several workers each range
gets a fresh copy of the visitor in a separate process and the partial
visitors are merged back in ascending range order, so results do not depend
on the worker count.
"""

import copy
import logging
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import List, Optional, Tuple

from core.pancake import PancakeView
from core.permutations import Permutation, check_enumerable

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 4


class EdgeVisitor:
    """
    Consumer of a vertex/edge stream.

    Subclasses override on_vertex/on_edge and merge. Instances must be
    picklable when streamed with more than one worker.
    """

    def on_vertex(self, u: Permutation) -> None:
        pass

    def on_edge(self, u: Permutation, v: Permutation, generator: int) -> None:
        pass

    def fresh(self) -> "EdgeVisitor":
        """Empty copy sharing the configuration of this visitor."""
        return copy.deepcopy(self)

    def merge(self, other: "EdgeVisitor") -> None:
        """Fold the state of a partial visitor (for a later rank range) into self."""
        pass


@dataclass
class EdgeStats:
    """Totals of one streaming pass."""
    vertices: int
    edges: int
    chunks: int
    workers: int
    elapsed: float


def partition_ranks(view: PancakeView, parts: int) -> List[Tuple[int, int]]:
    """Split the rank blocks of a view into about `parts` contiguous ranges."""
    blocks = view.rank_blocks()
    total = sum(hi - lo for lo, hi in blocks)
    parts = max(1, parts)
    size = max(1, -(-total // parts))
    ranges: List[Tuple[int, int]] = []
    for lo, hi in blocks:
        start = lo
        while start < hi:
            stop = min(hi, start + size)
            ranges.append((start, stop))
            start = stop
    return ranges


def _scan_range(view: PancakeView, visitor: EdgeVisitor, lo: int, hi: int) -> Tuple[int, int]:
    vertices = edges = 0
    on_vertex = visitor.on_vertex
    on_edge = visitor.on_edge
    for u in view.iter_vertices(lo, hi):
        vertices += 1
        on_vertex(u)
        for i, v in view.adjacent(u):
            if u < v:
                edges += 1
                on_edge(u, v, i)
    return vertices, edges


def _scan_chunk(args):
    view, visitor, lo, hi = args
    vertices, edges = _scan_range(view, visitor, lo, hi)
    return visitor, vertices, edges


def stream_edges(view: PancakeView,
                 visitor: Optional[EdgeVisitor] = None,
                 workers: int = 1) -> EdgeStats:
    """
    Visit every vertex and every edge of a view once.

    Args:
        view: the implicit graph
        visitor: consumer; None just counts
        workers: process count; 1 streams in-process and in rank order

    Returns:
        EdgeStats with exact vertex and edge totals

    Raises:
        CapacityError: if n exceeds the enumeration bound
    """
    check_enumerable(view.n)
    visitor = visitor if visitor is not None else EdgeVisitor()
    workers = max(1, int(workers))
    started = time.time()

    if workers == 1:
        ranges = partition_ranks(view, 1)
        vertices = edges = 0
        for lo, hi in ranges:
            v_count, e_count = _scan_range(view, visitor, lo, hi)
            vertices += v_count
            edges += e_count
    else:
        ranges = partition_ranks(view, workers * CHUNKS_PER_WORKER)
        logger.debug(f"Streaming {view.describe()} in {len(ranges)} ranges on {workers} workers")
        tasks = [(view, visitor.fresh(), lo, hi) for lo, hi in ranges]
        vertices = edges = 0
        with Pool(processes=workers) as pool:
            for partial, v_count, e_count in pool.imap(_scan_chunk, tasks):
                visitor.merge(partial)
                vertices += v_count
                edges += e_count

    elapsed = time.time() - started
    logger.info(f"Streamed {view.describe()}: {vertices} vertices, {edges} edges in {elapsed:.2f}s")
    return EdgeStats(vertices=vertices, edges=edges, chunks=len(ranges), workers=workers, elapsed=elapsed)
