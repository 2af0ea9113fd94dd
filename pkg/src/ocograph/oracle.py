"""Brute-force reference implementations.

Deliberately naive and independent of the tree algorithms: they work on
plain digraphs and enumerate.  Every exhaustive routine is guarded by an
:class:`OracleBudget` and polls an optional cancellation event.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .digraph import Digraph

__all__ = [
    "OracleBudget",
    "BudgetExceeded",
    "Cancelled",
    "DEFAULT_BUDGET",
    "brute_chromatic",
    "brute_coloring",
    "brute_longest_path",
    "brute_isomorphic",
    "brute_path_hom_exists",
]


class BudgetExceeded(RuntimeError):
    pass


class Cancelled(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 8
    max_candidates: int = 50_000_000


DEFAULT_BUDGET = OracleBudget()


class _Meter:
    def __init__(self, budget: OracleBudget, cancel: threading.Event | None):
        self.budget = budget
        self.cancel = cancel
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget.max_candidates:
            raise BudgetExceeded(f"more than {self.budget.max_candidates} candidates")
        if self.cancel is not None and self.count & 0x3FF == 1 and self.cancel.is_set():
            raise Cancelled("oracle run cancelled")


def _check_size(g: Digraph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds the oracle budget of {budget.max_vertices}")


def _require_oriented(g: Digraph) -> None:
    for u, v in g.arcs:
        if u in g.succ[v]:
            raise ValueError(f"not oriented: both ({u}, {v}) and ({v}, {u}) are arcs")


def _coloring_with(g: Digraph, k: int, meter: _Meter) -> list[int] | None:
    """Search colorings with at most ``k`` classes, classes numbered by first use."""
    n = g.n
    color = [-1] * n
    # between[a][b] counts assigned arcs from class a to class b
    between = [[0] * k for _ in range(k)]

    def consistent(v: int, c: int) -> bool:
        heads = {color[w] for w in g.succ[v] if color[w] != -1}
        tails = {color[w] for w in g.pred[v] if color[w] != -1}
        if c in heads or c in tails or heads & tails:
            return False
        return not any(between[h][c] for h in heads) and not any(
            between[c][t] for t in tails
        )

    def place(v: int, c: int, sign: int) -> None:
        for w in g.succ[v]:
            if color[w] != -1:
                between[c][color[w]] += sign
        for w in g.pred[v]:
            if color[w] != -1:
                between[color[w]][c] += sign

    def extend(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            meter.tick()
            if not consistent(v, c):
                continue
            place(v, c, +1)
            color[v] = c
            if extend(v + 1, max(used, c + 1)):
                return True
            color[v] = -1
            place(v, c, -1)
        return False

    return [c + 1 for c in color] if extend(0, 0) else None


def brute_coloring(
    g: Digraph,
    budget: OracleBudget = DEFAULT_BUDGET,
    cancel: threading.Event | None = None,
) -> dict[int, int]:
    """A minimum oriented coloring found by exhaustive search."""
    _require_oriented(g)
    _check_size(g, budget)
    if g.n == 0:
        return {}
    meter = _Meter(budget, cancel)
    for k in range(1, g.n + 1):
        found = _coloring_with(g, k, meter)
        if found is not None:
            return dict(enumerate(found))
    raise AssertionError("n colors always suffice")


def brute_chromatic(
    g: Digraph,
    budget: OracleBudget = DEFAULT_BUDGET,
    cancel: threading.Event | None = None,
) -> int:
    coloring = brute_coloring(g, budget, cancel)
    return max(coloring.values(), default=0)


def brute_longest_path(
    g: Digraph,
    budget: OracleBudget = DEFAULT_BUDGET,
    cancel: threading.Event | None = None,
) -> int:
    """Most arcs on a vertex-simple directed path."""
    sorter = TopologicalSorter({v: g.pred[v] for v in range(g.n)})
    try:
        topo = list(sorter.static_order())
    except CycleError:
        pass
    else:
        best = [0] * g.n
        for v in topo:
            for u in g.pred[v]:
                best[v] = max(best[v], best[u] + 1)
        return max(best, default=0)

    _check_size(g, budget)
    meter = _Meter(budget, cancel)
    longest = 0
    on_path = [False] * g.n

    def walk(v: int, length: int) -> None:
        nonlocal longest
        longest = max(longest, length)
        on_path[v] = True
        for w in g.succ[v]:
            if not on_path[w]:
                meter.tick()
                walk(w, length + 1)
        on_path[v] = False

    for start in range(g.n):
        walk(start, 0)
    return longest


def brute_isomorphic(
    g1: Digraph,
    g2: Digraph,
    budget: OracleBudget = DEFAULT_BUDGET,
    cancel: threading.Event | None = None,
) -> bool:
    """Search for an arc-preserving vertex bijection ``g1 -> g2``."""
    _check_size(g1, budget)
    _check_size(g2, budget)
    if g1.n != g2.n or g1.m != g2.m:
        return False
    sig1 = [(len(g1.pred[v]), len(g1.succ[v])) for v in range(g1.n)]
    sig2 = [(len(g2.pred[v]), len(g2.succ[v])) for v in range(g2.n)]
    if sorted(sig1) != sorted(sig2):
        return False
    meter = _Meter(budget, cancel)
    image = [-1] * g1.n
    taken = [False] * g2.n

    def extend(v: int) -> bool:
        if v == g1.n:
            return True
        for w in range(g2.n):
            if taken[w] or sig2[w] != sig1[v]:
                continue
            meter.tick()
            ok = all(
                (image[u] in g2.succ[w]) == (u in g1.succ[v])
                and (image[u] in g2.pred[w]) == (u in g1.pred[v])
                for u in range(v)
            )
            if not ok:
                continue
            image[v] = w
            taken[w] = True
            if extend(v + 1):
                return True
            taken[w] = False
        image[v] = -1
        return False

    return extend(0)


def brute_path_hom_exists(
    g: Digraph,
    k: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> bool:
    """Whether the oriented path with ``k`` arcs maps homomorphically into ``g``.

    Such a map is a directed walk with ``k`` arcs.  The set of walk endpoints
    is advanced one step at a time (a boolean vector-matrix product).
    """
    _check_size(g, budget)
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n == 0:
        return False
    ends = set(range(g.n))
    for _ in range(k):
        ends = {w for v in ends for w in g.succ[v]}
        if not ends:
            return False
    return True
