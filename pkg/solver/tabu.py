#!/usr/bin/env python3
"""
Tabu search for k-colorings (heuristic mode).

The state is a full assignment; gamma[v, c] counts neighbors of v colored c,
so moving v to c changes the conflict count by gamma[v, c] - gamma[v, color(v)].
Each iteration takes the best move of a conflicting vertex that is not tabu
(or that beats the best conflict count seen), and forbids moving v back to
its old color for 0.6 * conflicts + random(10) iterations. Deterministic for
a given seed; never reports unsat.
"""

import logging
import time
from multiprocessing import Pool
from typing import List, Optional, Tuple

import numpy as np

from solver.instance import GraphInstance, SearchBudget, SolveOutcome, SolveStatus, first_fit

logger = logging.getLogger(__name__)

TENURE_FACTOR = 0.6
TENURE_RANDOM = 10
RESTART_AFTER = 200_000
TIME_CHECK_EVERY = 256
NO_MOVE = np.iinfo(np.int64).max // 2


def _initial_colors(instance: GraphInstance, k: int, rng: np.random.Generator) -> np.ndarray:
    """First-fit, with colors above k replaced by random ones."""
    colors = np.asarray(first_fit(instance), dtype=np.int64) - 1
    overflow = colors >= k
    colors[overflow] = rng.integers(0, k, size=int(overflow.sum()))
    return colors


def _gamma(indptr: np.ndarray, indices: np.ndarray, colors: np.ndarray, k: int) -> np.ndarray:
    order = len(colors)
    gamma = np.zeros((order, k), dtype=np.int32)
    sources = np.repeat(np.arange(order), np.diff(indptr))
    np.add.at(gamma, (sources, colors[indices]), 1)
    return gamma


def tabucol(instance: GraphInstance, k: int, budget: SearchBudget, seed: Optional[int] = None) -> SolveOutcome:
    """Single-seed tabu search; colored or timeout."""
    seed = budget.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    started = time.time()
    order = instance.order
    if order == 0:
        return SolveOutcome(status=SolveStatus.COLORED, k=k, mode='heuristic', colors=[])

    indptr, indices = instance.csr()
    colors = _initial_colors(instance, k, rng)
    gamma = _gamma(indptr, indices, colors, k)
    vertex_ids = np.arange(order)
    conflicts = int(gamma[vertex_ids, colors].sum()) // 2
    best_conflicts = conflicts
    tabu_until = np.zeros((order, k), dtype=np.int64)
    since_improvement = 0

    iteration = 0
    while conflicts > 0:
        iteration += 1
        if iteration > budget.max_nodes:
            break
        if iteration % TIME_CHECK_EVERY == 0 and time.time() - started > budget.max_seconds:
            break

        own = gamma[vertex_ids, colors]
        conflicted = np.nonzero(own > 0)[0]
        delta = gamma[conflicted].astype(np.int64) - own[conflicted, None]
        delta[np.arange(len(conflicted)), colors[conflicted]] = NO_MOVE
        allowed = (tabu_until[conflicted] <= iteration) | (conflicts + delta < best_conflicts)
        scores = np.where(allowed, delta, NO_MOVE)
        best = scores.min()
        if best == NO_MOVE:
            continue
        rows, cols = np.nonzero(scores == best)
        pick = int(rng.integers(len(rows)))
        v, new = int(conflicted[rows[pick]]), int(cols[pick])
        old = int(colors[v])

        neighbors = indices[indptr[v]:indptr[v + 1]]
        gamma[neighbors, old] -= 1
        gamma[neighbors, new] += 1
        colors[v] = new
        conflicts += int(best)
        tabu_until[v, old] = iteration + int(TENURE_FACTOR * conflicts) + int(rng.integers(TENURE_RANDOM))

        if conflicts < best_conflicts:
            best_conflicts = conflicts
            since_improvement = 0
        else:
            since_improvement += 1
            if since_improvement >= RESTART_AFTER:
                logger.debug(f"seed {seed}: restart at iteration {iteration} (best {best_conflicts} conflicts)")
                colors = rng.integers(0, k, size=order)
                gamma = _gamma(indptr, indices, colors, k)
                conflicts = int(gamma[vertex_ids, colors].sum()) // 2
                tabu_until[:] = 0
                since_improvement = 0

    elapsed = time.time() - started
    if conflicts == 0:
        return SolveOutcome(status=SolveStatus.COLORED, k=k, mode='heuristic', nodes=iteration,
                            elapsed=elapsed, colors=(colors + 1).tolist())
    logger.debug(f"seed {seed}: {best_conflicts} conflicts left after {iteration} iterations")
    return SolveOutcome(status=SolveStatus.TIMEOUT, k=k, mode='heuristic', nodes=iteration, elapsed=elapsed)


def _run_seed(args: Tuple[GraphInstance, int, SearchBudget, int]) -> SolveOutcome:
    instance, k, budget, seed = args
    return tabucol(instance, k, budget, seed=seed)


def portfolio(instance: GraphInstance, k: int, budget: SearchBudget, workers: int = 1) -> SolveOutcome:
    """
    Run seeds budget.seed .. budget.seed + workers - 1 independently.

    The winner is the lowest seed that colored the graph, so the result does
    not depend on scheduling.
    """
    workers = max(1, int(workers))
    seeds = [budget.seed + offset for offset in range(workers)]
    if workers == 1:
        outcomes: List[SolveOutcome] = [tabucol(instance, k, budget, seed=seeds[0])]
    else:
        with Pool(processes=workers) as pool:
            outcomes = pool.map(_run_seed, [(instance, k, budget, seed) for seed in seeds])

    total_nodes = sum(outcome.nodes for outcome in outcomes)
    for seed, outcome in zip(seeds, outcomes):
        if outcome.status is SolveStatus.COLORED:
            logger.info(f"Portfolio winner: seed {seed} after {outcome.nodes} iterations")
            outcome.nodes = total_nodes
            return outcome
    return SolveOutcome(status=SolveStatus.TIMEOUT, k=k, mode='heuristic', nodes=total_nodes,
                        elapsed=max(outcome.elapsed for outcome in outcomes))
