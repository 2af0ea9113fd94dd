"""Digraph representation, structural predicates and small forbidden patterns.

Vertices are dense integer ids ``0..n-1``.  A :class:`Digraph` is immutable
once built; adjacency sets are computed on construction and shared freely.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from collections.abc import Iterable

__all__ = [
    "Digraph",
    "UndirectedGraph",
    "PatternWitness",
    "PATTERNS",
    "is_oriented",
    "is_transitive",
    "is_acyclic",
    "underlying",
    "induced_subdigraph",
    "find_forbidden_pattern",
    "check_witness",
    "disjoint_union",
    "order_composition",
    "directed_path",
    "directed_cycle",
    "transitive_tournament",
    "relabel",
    "random_digraph",
    "random_oriented",
    "all_digraphs",
]

PATTERNS = ("BiorientedP2", "D1", "D5", "UndirectedP4")


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]
    succ: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    pred: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        succ: list[set[int]] = [set() for _ in range(n)]
        pred: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            succ[u].add(v)
            pred[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "succ", tuple(frozenset(s) for s in succ))
        object.__setattr__(self, "pred", tuple(frozenset(s) for s in pred))

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.succ[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.succ[u] or u in self.succ[v]

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, s: Iterable[int]) -> UndirectedGraph:
        order = sorted(set(s))
        index = {v: i for i, v in enumerate(order)}
        return UndirectedGraph(
            len(order),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def components(self, vertices: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced on ``vertices``.

        Components come back sorted internally and ordered by minimum vertex.
        """
        pool = set(range(self.n)) if vertices is None else set(vertices)
        comps = []
        for start in sorted(pool):
            if start not in pool:
                continue
            pool.discard(start)
            comp = [start]
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w in pool:
                        pool.discard(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def co_components(self, vertices: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of the complement, restricted to ``vertices``."""
        pool = set(range(self.n)) if vertices is None else set(vertices)
        comps = []
        for start in sorted(pool):
            if start not in pool:
                continue
            pool.discard(start)
            comp = [start]
            stack = [start]
            while stack:
                u = stack.pop()
                reach = [w for w in pool if w not in self.adj[u]]
                for w in reach:
                    pool.discard(w)
                    comp.append(w)
                    stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class PatternWitness:
    """A forbidden pattern induced on ``vertices``.

    ``D1`` is the chordless path ``u->v->w``; ``D5`` is the directed triangle
    ``u->v->w->u``; ``BiorientedP2`` is an opposite arc pair;
    ``UndirectedP4`` is an induced path ``a-b-c-d`` in the underlying graph.
    """

    pattern: str
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}")


def is_oriented(g: Digraph) -> bool:
    return all(u not in g.succ[v] for u, v in g.arcs)


def is_transitive(g: Digraph) -> bool:
    for u in range(g.n):
        for v in g.succ[u]:
            for w in g.succ[v]:
                if w != u and w not in g.succ[u]:
                    return False
    return True


def is_acyclic(g: Digraph) -> bool:
    indeg = [len(p) for p in g.pred]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for w in g.succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == g.n


def underlying(g: Digraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, g.arcs)


def induced_subdigraph(g: Digraph, s: Iterable[int]) -> Digraph:
    order = sorted(set(s))
    for v in order:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(order)}
    return Digraph(
        len(order),
        ((index[u], index[v]) for u, v in g.arcs if u in index and v in index),
    )


def _find_bioriented(g: Digraph) -> PatternWitness | None:
    for u in range(g.n):
        for v in sorted(g.succ[u]):
            if v > u and u in g.succ[v]:
                return PatternWitness("BiorientedP2", (u, v))
    return None


def _find_triple(g: Digraph) -> PatternWitness | None:
    # Assumes no opposite arcs, so (w, u) present means exactly the 3-cycle.
    for u in range(g.n):
        for v in sorted(g.succ[u]):
            for w in sorted(g.succ[v]):
                if w == u or w in g.succ[u]:
                    continue
                if u in g.succ[w]:
                    return PatternWitness("D5", (u, v, w))
                return PatternWitness("D1", (u, v, w))
    return None


def _find_p4(un: UndirectedGraph) -> PatternWitness | None:
    adj = un.adj
    for a in range(un.n):
        for b in sorted(adj[a]):
            for c in sorted(adj[b]):
                if c == a or c in adj[a]:
                    continue
                for d in sorted(adj[c]):
                    if d in (a, b) or d in adj[a] or d in adj[b]:
                        continue
                    return PatternWitness("UndirectedP4", (a, b, c, d))
    return None


def find_forbidden_pattern(g: Digraph) -> PatternWitness | None:
    """First forbidden pattern of an oriented co-graph occurring in ``g``.

    Searched in the order opposite arcs, D1/D5 triples, induced P4 in the
    underlying graph; each returns the lexicographically smallest tuple.
    ``None`` means ``g`` is an oriented co-graph.
    """
    return _find_bioriented(g) or _find_triple(g) or _find_p4(underlying(g))


def check_witness(g: Digraph, w: PatternWitness) -> bool:
    """Re-check that ``w`` is genuinely induced in ``g``."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    a = g.has_arc
    if w.pattern == "BiorientedP2":
        return len(vs) == 2 and a(vs[0], vs[1]) and a(vs[1], vs[0])
    if w.pattern in ("D1", "D5"):
        if len(vs) != 3:
            return False
        u, v, x = vs
        path = a(u, v) and a(v, x) and not a(v, u) and not a(x, v)
        if w.pattern == "D1":
            return path and not g.adjacent(u, x)
        return path and a(x, u) and not a(u, x)
    if len(vs) != 4:
        return False
    un = underlying(g)
    p, q, r, s = vs
    e = un.has_edge
    return (
        e(p, q) and e(q, r) and e(r, s)
        and not e(p, r) and not e(p, s) and not e(q, s)
    )


def disjoint_union(*gs: Digraph) -> Digraph:
    """Disjoint union; vertices of later operands are shifted past earlier ones."""
    arcs = []
    offset = 0
    for g in gs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        offset += g.n
    return Digraph(offset, arcs)


def order_composition(*gs: Digraph) -> Digraph:
    """Disjoint union plus every arc from an earlier operand to a later one."""
    arcs = []
    offset = 0
    blocks = []
    for g in gs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        blocks.append(range(offset, offset + g.n))
        offset += g.n
    for i, left in enumerate(blocks):
        for right in blocks[i + 1:]:
            arcs.extend((u, v) for u in left for v in right)
    return Digraph(offset, arcs)


def directed_path(n: int) -> Digraph:
    """The oriented path on ``n`` vertices (``n - 1`` arcs)."""
    return Digraph(n, ((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError("an oriented cycle needs at least 3 vertices")
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)))


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def relabel(g: Digraph, perm: list[int]) -> Digraph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of the vertex ids")
    return Digraph(g.n, ((perm[u], perm[v]) for u, v in g.arcs))


def random_digraph(n: int, rng: random.Random, p: float = 0.5) -> Digraph:
    """Loop-free digraph; each ordered pair is an arc with probability ``p``."""
    return Digraph(
        n, ((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p)
    )


def random_oriented(n: int, rng: random.Random, p: float = 0.5) -> Digraph:
    """Oriented digraph; each pair is joined with probability ``p``, direction a coin flip."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def all_digraphs(n: int, oriented: bool = False):
    """Every loop-free (or every oriented) digraph on ``n`` labelled vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    states = ((), ((0, 1),), ((1, 0),)) if oriented else ((), ((0, 1),), ((1, 0),), ((0, 1), (1, 0)))
    for choice in itertools.product(states, repeat=len(pairs)):
        arcs = []
        for (u, v), picked in zip(pairs, choice):
            for a, b in picked:
                arcs.append((u, v) if (a, b) == (0, 1) else (v, u))
        yield Digraph(n, arcs)
