"""Exhaustive backtracking search for interval t-colorings.

This is the package's independent oracle: small instances are decided
exactly, with a three-valued outcome so a truncated search is never
mistaken for a proof of absence.  Edge order (breadth-first from the
least vertex), color order (ascending), and pruning are all fixed, so
identical queries give identical results.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .bounds import theorem1_upper
from .colorings import EdgeColoring, verify_interval
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    InvalidParameterError,
    NotIntervalColorableError,
)
from .grids import Edge, GridVertex, MeshGraph, max_degree

__all__ = [
    "SearchBudget",
    "Outcome",
    "SearchResult",
    "find_interval_coloring",
    "exact_w",
    "exact_W",
    "DEFAULT_MAX_EDGES",
]

DEFAULT_MAX_EDGES = 16

_TIME_CHECK_MASK = 0x3FF  # consult the clock every 1024 nodes


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exhaustive search.

    ``max_edges`` refuses larger instances outright; ``max_nodes`` caps
    backtracking nodes (color attempts); ``time_cap_s`` is wall time in
    seconds.  ``None`` disables a cap.
    """

    max_edges: int = DEFAULT_MAX_EDGES
    max_nodes: int | None = None
    time_cap_s: float | None = None


class Outcome(str, Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    coloring: EdgeColoring | None
    nodes: int
    detail: str = ""


def _bfs_edge_order(g: MeshGraph) -> list[Edge]:
    """Edges in breadth-first discovery order from the least vertex."""
    root = g.vertices[0]
    listed: set[Edge] = set()
    order: list[Edge] = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            e = Edge.between(u, w)
            if e not in listed:
                listed.add(e)
                order.append(e)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != g.num_vertices or len(order) != g.num_edges:
        raise DisconnectedGraphError("search requires a connected graph")
    return order


def find_interval_coloring(
    g: MeshGraph, t: int, budget: SearchBudget | None = None
) -> SearchResult:
    """Decide whether ``g`` has an interval t-coloring, within a budget.

    A partial assignment is abandoned when an endpoint's colors span
    more than degree-1 (no consecutive run of the right length inside
    1..t can contain them) or when fewer edges remain than colors still
    unused.  Outcome ``absent`` is only reported after the whole tree
    has been exhausted.
    """
    if t < 1:
        raise InvalidParameterError(f"palette size must be >= 1, got {t}")
    if budget is None:
        budget = SearchBudget()
    if g.num_edges > budget.max_edges:
        return SearchResult(
            Outcome.BUDGET_EXCEEDED,
            None,
            0,
            f"instance has {g.num_edges} edges, budget allows {budget.max_edges}",
        )
    order = _bfs_edge_order(g)
    num_edges = len(order)
    degree = {v: g.degree(v) for v in g.vertices}
    stacked: dict[GridVertex, list[int]] = {v: [] for v in g.vertices}
    present: dict[GridVertex, set[int]] = {v: set() for v in g.vertices}
    used_count = [0] * (t + 1)
    unused = t
    assigned: list[int] = [0] * num_edges
    next_color = [1] * num_edges
    nodes = 0
    started = time.monotonic()

    def fits(v: GridVertex, c: int) -> bool:
        if c in present[v]:
            return False
        lst = stacked[v]
        if not lst:
            return True
        lo = min(lst)
        hi = max(lst)
        return max(hi, c) - min(lo, c) <= degree[v] - 1

    idx = 0
    while True:
        if idx == num_edges:
            coloring = EdgeColoring(g, dict(zip(order, assigned)), t)
            assert verify_interval(coloring).interval
            return SearchResult(Outcome.FOUND, coloring, nodes)
        e = order[idx]
        c = next_color[idx]
        placed = False
        while c <= t:
            nodes += 1
            if budget.max_nodes is not None and nodes > budget.max_nodes:
                return SearchResult(
                    Outcome.BUDGET_EXCEEDED, None, nodes, "node cap reached"
                )
            if (
                budget.time_cap_s is not None
                and nodes & _TIME_CHECK_MASK == 0
                and time.monotonic() - started > budget.time_cap_s
            ):
                return SearchResult(
                    Outcome.BUDGET_EXCEEDED, None, nodes, "time cap reached"
                )
            if fits(e.u, c) and fits(e.v, c):
                stacked[e.u].append(c)
                stacked[e.v].append(c)
                present[e.u].add(c)
                present[e.v].add(c)
                used_count[c] += 1
                if used_count[c] == 1:
                    unused -= 1
                if unused > num_edges - idx - 1:
                    _unassign(stacked, present, used_count, e, c)
                    unused = unused + (1 if used_count[c] == 0 else 0)
                    c += 1
                    continue
                assigned[idx] = c
                next_color[idx] = c + 1
                idx += 1
                placed = True
                break
            c += 1
        if placed:
            continue
        next_color[idx] = 1
        idx -= 1
        if idx < 0:
            return SearchResult(Outcome.ABSENT, None, nodes)
        undone = assigned[idx]
        _unassign(stacked, present, used_count, order[idx], undone)
        if used_count[undone] == 0:
            unused += 1


def _unassign(
    stacked: dict[GridVertex, list[int]],
    present: dict[GridVertex, set[int]],
    used_count: list[int],
    e: Edge,
    c: int,
) -> None:
    stacked[e.u].pop()
    stacked[e.v].pop()
    present[e.u].discard(c)
    present[e.v].discard(c)
    used_count[c] -= 1


def exact_w(g: MeshGraph, budget: SearchBudget | None = None) -> int:
    """Least palette size admitting an interval coloring, by upward scan.

    Starts at the maximum degree (every palette must cover some vertex's
    full degree).  Raises ``BudgetExceededError`` instead of guessing
    when any single search is truncated.
    """
    lo = max_degree(g)
    hi = theorem1_upper(g)
    for t in range(lo, hi + 1):
        result = find_interval_coloring(g, t, budget)
        if result.outcome is Outcome.FOUND:
            return t
        if result.outcome is Outcome.BUDGET_EXCEEDED:
            raise BudgetExceededError(f"search for t={t} truncated: {result.detail}")
    raise NotIntervalColorableError(
        f"no interval t-coloring for any t in [{lo}, {hi}]"
    )


def exact_W(g: MeshGraph, budget: SearchBudget | None = None) -> int:
    """Greatest palette size admitting an interval coloring, by downward scan."""
    lo = max_degree(g)
    hi = theorem1_upper(g)
    for t in range(hi, lo - 1, -1):
        result = find_interval_coloring(g, t, budget)
        if result.outcome is Outcome.FOUND:
            return t
        if result.outcome is Outcome.BUDGET_EXCEEDED:
            raise BudgetExceededError(f"search for t={t} truncated: {result.detail}")
    raise NotIntervalColorableError(
        f"no interval t-coloring for any t in [{lo}, {hi}]"
    )
