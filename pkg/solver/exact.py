#!/usr/bin/env python3
"""
Exact graph coloring.

find_k_coloring decides k-colorability with a conflict-learning search over
color domains. Literal (v, c) means "v has color c"; every vertex keeps at
least one color and at most one, and adjacent vertices never share one.
Assigning a color removes it from the neighbors' domains and a domain left
with one color is assigned at once, exactly as in domain-propagating
backtracking. A wiped-out domain is analysed back to the first unique
implication point and recorded as a nogood, and the search jumps back to the
level where the nogood becomes unit. Decisions follow conflict activity,
seeded with the DSATUR order so the first branches grow saturation-first from
vertex 0. Value symmetry is broken by pre-coloring vertex 0 with 1 and its
first neighbor (the r_2-neighbor on a Pancake graph) with 2.

exact_chi climbs k from the bipartiteness lower bound up to a greedy upper
bound.
"""

import logging
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Any, Dict, List, Optional, Tuple

from core.errors import CapacityError, PancakeError, RangeError
from solver.bipartite import is_bipartite
from solver.instance import (
    COMPLETE_LIMIT,
    HEURISTIC_LIMIT,
    GraphInstance,
    GraphLike,
    SearchBudget,
    SearchClock,
    SolveOutcome,
    SolveStatus,
    as_instance,
)
from solver.tabu import portfolio

logger = logging.getLogger(__name__)

MODES = ('auto', 'complete', 'heuristic')

RESTART_UNIT = 100
ACTIVITY_DECAY = 0.95
ACTIVITY_LIMIT = 1e100


def luby(index: int) -> int:
    """index-th term (from 0) of 1, 1, 2, 1, 1, 2, 4, 1, ..."""
    size, power = 1, 0
    while size < index + 1:
        power += 1
        size = 2 * size + 1
    while size - 1 != index:
        size = (size - 1) >> 1
        power -= 1
        index %= size
    return 1 << power


def dsatur_order(instance: GraphInstance) -> Tuple[List[int], List[int]]:
    """One DSATUR pass: (colors, visiting order). Ties by degree, then index."""
    order = instance.order
    colors = [0] * order
    seen = [set() for _ in range(order)]
    visited: List[int] = []
    for _ in range(order):
        v = max((u for u in range(order) if not colors[u]),
                key=lambda u: (len(seen[u]), instance.degree(u), -u))
        c = 1
        while c in seen[v]:
            c += 1
        colors[v] = c
        visited.append(v)
        for u in instance.adjacency[v]:
            seen[u].add(c)
    return colors, visited


def dsatur_greedy(instance: GraphInstance) -> List[int]:
    """One-pass DSATUR coloring (upper bound)."""
    return dsatur_order(instance)[0]


class ConflictSearch:
    """
    Clause-learning search for one (instance, k) decision.

    Variable v * k + c stands for "vertex v has color c + 1"; literal 2x is
    the variable x, 2x + 1 its negation. Binary constraints (one color per
    vertex, different colors across an edge) live in implication lists,
    longer ones (at least one color, learned nogoods) are watched on two
    literals.
    """

    def __init__(self, instance: GraphInstance, k: int, clock: SearchClock):
        self.instance = instance
        self.k = k
        self.clock = clock
        variables = instance.order * k
        self.variables = variables
        self.value = [0] * (2 * variables)
        self.level = [0] * variables
        self.reason: List[Optional[list]] = [None] * variables
        self.implied: List[List[int]] = [[] for _ in range(2 * variables)]
        self.watches: List[List[list]] = [[] for _ in range(2 * variables)]
        self.trail: List[int] = []
        self.trail_lim: List[int] = []
        self.qhead = 0
        self.seen = [False] * variables
        self.activity = [0.0] * variables
        self.increment = 1.0
        self.polarity = [True] * variables
        self.heap: List[Tuple[float, int]] = []
        self.learnts: List[Tuple[int, list]] = []
        self.max_learnts = 0
        self.conflicts = 0
        self.failed = False

    # clause database

    def _enqueue(self, lit: int, reason: Optional[list]) -> None:
        var = lit >> 1
        self.value[lit] = 1
        self.value[lit ^ 1] = -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)

    def add_clause(self, lits: List[int]) -> None:
        """Problem constraint, added at level 0 before the search starts."""
        if self.failed:
            return
        lits = list(dict.fromkeys(lits))
        if any(self.value[lit] == 1 for lit in lits):
            return
        lits = [lit for lit in lits if self.value[lit] == 0]
        if not lits:
            self.failed = True
        elif len(lits) == 1:
            self._enqueue(lits[0], None)
        elif len(lits) == 2:
            a, b = lits
            self.implied[a ^ 1].append(b)
            self.implied[b ^ 1].append(a)
        else:
            self.watches[lits[0]].append(lits)
            self.watches[lits[1]].append(lits)

    def load(self) -> bool:
        """Coloring constraints plus the symmetry-breaking pre-coloring."""
        k, adjacency = self.k, self.instance.adjacency
        for v in range(self.instance.order):
            base = v * k
            self.add_clause([2 * (base + c) for c in range(k)])
            for a in range(k):
                for b in range(a + 1, k):
                    self.add_clause([2 * (base + a) + 1, 2 * (base + b) + 1])
            for u in adjacency[v]:
                if u > v:
                    for c in range(k):
                        self.add_clause([2 * (base + c) + 1, 2 * (u * k + c) + 1])
        if self.instance.order:
            self.add_clause([0])
            neighbors = adjacency[0]
            if neighbors and k >= 2:
                self.add_clause([2 * (neighbors[0] * k + 1)])
        self.max_learnts = max(1000, self.instance.order * k // 2)
        return not self.failed

    def seed_activity(self, order: List[int]) -> None:
        """Initial decision order: vertices in `order`, colors ascending."""
        k, scale = self.k, 1.0 / (len(order) + 1)
        for position, v in enumerate(order):
            for c in range(k):
                self.activity[v * k + c] = (len(order) - position) * scale * 1e-3
        self.heap = [(-self.activity[x], x) for x in range(self.variables) if self.value[2 * x] == 0]
        heapify(self.heap)

    # propagation

    def propagate(self) -> Optional[list]:
        """Unit propagation from the queue head; the falsified clause on conflict."""
        trail, value, implied, watches = self.trail, self.value, self.implied, self.watches
        level, reason = self.level, self.reason
        current = len(self.trail_lim)
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            for q in implied[p]:
                state = value[q]
                if state == 1:
                    continue
                if state == -1:
                    return [q, p ^ 1]
                value[q] = 1
                value[q ^ 1] = -1
                var = q >> 1
                level[var] = current
                reason[var] = [q, p ^ 1]
                trail.append(q)

            false_lit = p ^ 1
            watching = watches[false_lit]
            kept: List[list] = []
            conflict = None
            i, total = 0, len(watching)
            while i < total:
                clause = watching[i]
                i += 1
                if not clause:
                    continue
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], false_lit
                first = clause[0]
                if value[first] == 1:
                    kept.append(clause)
                    continue
                for t in range(2, len(clause)):
                    lit = clause[t]
                    if value[lit] != -1:
                        clause[1], clause[t] = lit, false_lit
                        watches[lit].append(clause)
                        break
                else:
                    kept.append(clause)
                    if value[first] == -1:
                        conflict = clause
                        kept.extend(watching[i:])
                        break
                    value[first] = 1
                    value[first ^ 1] = -1
                    var = first >> 1
                    level[var] = current
                    reason[var] = clause
                    trail.append(first)
            watches[false_lit] = kept
            if conflict is not None:
                return conflict
        return None

    # conflict analysis

    def _bump(self, var: int) -> None:
        activity = self.activity
        activity[var] += self.increment
        if activity[var] > ACTIVITY_LIMIT:
            for x in range(self.variables):
                activity[x] *= 1.0 / ACTIVITY_LIMIT
            self.increment *= 1.0 / ACTIVITY_LIMIT
            self.heap = [(-activity[x], x) for x in range(self.variables) if self.value[2 * x] == 0]
            heapify(self.heap)

    def analyze(self, conflict: list) -> Tuple[List[int], int, int]:
        """First-UIP nogood: (clause with the asserting literal first, backjump level, LBD)."""
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        current = len(self.trail_lim)
        learnt = [0]
        marked: List[int] = []
        pending = 0
        index = len(trail) - 1
        clause = conflict
        start = 0
        while True:
            for t in range(start, len(clause)):
                lit = clause[t]
                var = lit >> 1
                if not seen[var] and level[var] > 0:
                    seen[var] = True
                    marked.append(var)
                    self._bump(var)
                    if level[var] == current:
                        pending += 1
                    else:
                        learnt.append(lit)
            while not seen[trail[index] >> 1]:
                index -= 1
            p = trail[index]
            index -= 1
            seen[p >> 1] = False
            pending -= 1
            if pending == 0:
                break
            clause = reason[p >> 1]
            start = 1
        learnt[0] = p ^ 1

        minimized = [learnt[0]]
        for lit in learnt[1:]:
            cause = reason[lit >> 1]
            if cause is None or any(not seen[q >> 1] and level[q >> 1] > 0 for q in cause[1:]):
                minimized.append(lit)
        for var in marked:
            seen[var] = False

        back = 0
        if len(minimized) > 1:
            deepest = max(range(1, len(minimized)), key=lambda t: level[minimized[t] >> 1])
            minimized[1], minimized[deepest] = minimized[deepest], minimized[1]
            back = level[minimized[1] >> 1]
        lbd = len({level[lit >> 1] for lit in minimized})
        return minimized, back, lbd

    def backtrack(self, target: int) -> None:
        if len(self.trail_lim) <= target:
            return
        stop = self.trail_lim[target]
        trail, value, reason, polarity = self.trail, self.value, self.reason, self.polarity
        activity, heap = self.activity, self.heap
        for t in range(len(trail) - 1, stop - 1, -1):
            lit = trail[t]
            var = lit >> 1
            polarity[var] = not lit & 1
            value[lit] = value[lit ^ 1] = 0
            reason[var] = None
            heappush(heap, (-activity[var], var))
        del trail[stop:]
        del self.trail_lim[target:]
        self.qhead = stop
        if len(heap) > 8 * self.variables + 1024:
            self.heap = [(-activity[x], x) for x in range(self.variables) if value[2 * x] == 0]
            heapify(self.heap)

    def learn(self, lits: List[int], lbd: int) -> None:
        """Store a nogood and assert its first literal."""
        if len(lits) == 1:
            self._enqueue(lits[0], None)
        elif len(lits) == 2:
            a, b = lits
            self.implied[a ^ 1].append(b)
            self.implied[b ^ 1].append(a)
            self._enqueue(a, [a, b])
        else:
            self.watches[lits[0]].append(lits)
            self.watches[lits[1]].append(lits)
            self.learnts.append((lbd, lits))
            self._enqueue(lits[0], lits)

    def reduce(self) -> None:
        """Drop the weaker half of the long nogoods that are not reasons."""
        self.learnts.sort(key=lambda entry: (entry[0], len(entry[1])))
        half = len(self.learnts) // 2
        kept = []
        for position, (lbd, clause) in enumerate(self.learnts):
            head = clause[0]
            locked = self.value[head] == 1 and self.reason[head >> 1] is clause
            if position < half or lbd <= 2 or locked:
                kept.append((lbd, clause))
            else:
                clause.clear()
        logger.debug(f"Nogood store reduced {len(self.learnts)} -> {len(kept)}")
        self.learnts = kept
        self.max_learnts = int(self.max_learnts * 1.1)

    # search

    def decide(self) -> Optional[int]:
        heap, value, activity = self.heap, self.value, self.activity
        while heap:
            key, var = heappop(heap)
            if value[2 * var] == 0 and -key == activity[var]:
                return 2 * var if self.polarity[var] else 2 * var + 1
        return None

    def run(self) -> SolveStatus:
        if not self.load() or self.propagate() is not None:
            return SolveStatus.UNSAT
        restarts = 0
        budget = luby(0) * RESTART_UNIT
        since_restart = 0
        while True:
            conflict = self.propagate()
            if conflict is not None:
                self.conflicts += 1
                if not self.trail_lim:
                    return SolveStatus.UNSAT
                if not self.clock.tick():
                    return SolveStatus.TIMEOUT
                lits, back, lbd = self.analyze(conflict)
                self.backtrack(back)
                self.learn(lits, lbd)
                self.increment *= 1.0 / ACTIVITY_DECAY
                since_restart += 1
                continue
            if since_restart >= budget:
                restarts += 1
                budget = luby(restarts) * RESTART_UNIT
                since_restart = 0
                self.backtrack(0)
                continue
            if len(self.learnts) >= self.max_learnts + len(self.trail):
                self.reduce()
            lit = self.decide()
            if lit is None:
                return SolveStatus.COLORED
            if not self.clock.tick():
                return SolveStatus.TIMEOUT
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, None)

    def colors(self) -> List[int]:
        k, value = self.k, self.value
        return [next(c + 1 for c in range(k) if value[2 * (v * k + c)] == 1)
                for v in range(self.instance.order)]


def _complete(instance: GraphInstance, k: int, budget: SearchBudget,
              order: Optional[List[int]] = None) -> SolveOutcome:
    clock = SearchClock(budget)
    search = ConflictSearch(instance, k, clock)
    search.seed_activity(order if order is not None else dsatur_order(instance)[1])
    status = search.run()
    outcome = SolveOutcome(status=status, k=k, mode='complete', nodes=clock.nodes, elapsed=clock.elapsed)
    if status is SolveStatus.COLORED:
        outcome.colors = search.colors()
    logger.debug(f"{k}-coloring of {instance.name}: {search.conflicts} conflicts, "
                 f"{len(search.learnts)} long nogoods kept")
    return outcome


def _check_witness(instance: GraphInstance, colors: List[int], k: int) -> None:
    if not instance.is_proper(colors) or (colors and max(colors) > k):
        raise PancakeError(f"Solver returned an improper {k}-coloring of {instance.name}")


def find_k_coloring(graph: GraphLike, k: int, budget: Optional[SearchBudget] = None,
                    mode: str = 'auto', workers: int = 1) -> SolveOutcome:
    """
    Search for a proper k-coloring.

    Args:
        graph: PancakeView, GraphInstance or networkx graph
        k: number of colors, k >= 1
        budget: time/node/seed limits
        mode: 'complete' (colored or unsat), 'heuristic' (colored or timeout),
            or 'auto' (complete up to 5040 vertices)
        workers: heuristic portfolio size

    Raises:
        RangeError: k < 1 or unknown mode
        CapacityError: instance larger than the mode allows
    """
    if k < 1:
        raise RangeError(f"k must be at least 1, got k={k}")
    if mode not in MODES:
        raise RangeError(f"mode must be one of {MODES}, got {mode!r}")
    budget = budget or SearchBudget()
    instance = as_instance(graph, HEURISTIC_LIMIT)
    if mode == 'auto':
        mode = 'complete' if instance.order <= COMPLETE_LIMIT else 'heuristic'
    if mode == 'complete' and instance.order > COMPLETE_LIMIT:
        raise CapacityError(f"Complete search handles at most {COMPLETE_LIMIT} vertices, {instance.name} has {instance.order}")

    logger.info(f"Searching {k}-coloring of {instance.name} ({instance.order} vertices, {mode})")
    if mode == 'complete':
        outcome = _complete(instance, k, budget)
    else:
        outcome = portfolio(instance, k, budget, workers=workers)

    if outcome.status is SolveStatus.COLORED:
        _check_witness(instance, outcome.colors, k)
        outcome.coloring = instance.to_coloring(outcome.colors, k, name=f"{mode}-k{k}")
    logger.info(f"{k}-coloring of {instance.name}: {outcome.status.value} after {outcome.nodes} nodes in {outcome.elapsed:.2f}s")
    return outcome


@dataclass
class ChiResult:
    """Chromatic number, or the proven interval when the budget ran out."""
    status: str
    lower: int
    upper: int
    chi: Optional[int] = None
    colors: Optional[List[int]] = None
    steps: List[Dict[str, Any]] = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0
    odd_cycle: Optional[List[str]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'status': self.status,
            'chi': self.chi,
            'lower': self.lower,
            'upper': self.upper,
            'steps': self.steps,
            'nodes': self.nodes,
            'elapsed': round(self.elapsed, 6),
            'odd_cycle': self.odd_cycle,
        }


def exact_chi(graph: GraphLike, budget: Optional[SearchBudget] = None) -> ChiResult:
    """
    Chromatic number by complete search, with an unsat proof for chi - 1.

    Raises:
        CapacityError: more than 5040 vertices
        PancakeError: a witness failed the properness check
    """
    budget = budget or SearchBudget()
    instance = as_instance(graph, COMPLETE_LIMIT)
    clock = SearchClock(budget)

    if instance.order == 0:
        return ChiResult(status='decided', lower=0, upper=0, chi=0, colors=[])

    upper_colors, order = dsatur_order(instance)
    upper = max(upper_colors)
    if instance.edge_count == 0:
        lower = 1
        odd_cycle = None
    else:
        bipartite = is_bipartite(instance)
        lower = 2 if bipartite.bipartite else 3
        odd_cycle = bipartite.witness
    result = ChiResult(status='decided', lower=lower, upper=upper, colors=upper_colors, odd_cycle=odd_cycle)

    k = lower
    while k < result.upper:
        remaining = budget.remaining(clock.started, result.nodes)
        if remaining is None:
            result.status = 'timeout'
            break
        outcome = _complete(instance, k, remaining, order)
        result.nodes += outcome.nodes
        result.steps.append({'k': k, 'status': outcome.status.value, 'nodes': outcome.nodes})
        if outcome.status is SolveStatus.COLORED:
            result.upper = k
            result.colors = outcome.colors
            break
        if outcome.status is SolveStatus.TIMEOUT:
            result.status = 'timeout'
            break
        result.lower = k + 1
        k += 1

    _check_witness(instance, result.colors, result.upper)
    if result.status == 'decided':
        result.lower = result.upper
        result.chi = result.upper
    result.elapsed = clock.elapsed
    logger.info(f"chi({instance.name}): {result.status} lower={result.lower} upper={result.upper}")
    return result
