"""Linear-time algorithms on canonical di-co-trees.

All routines walk the tree iteratively and accept only canonical trees
(Union and Order alternate, no unary nodes); run
:func:`~ocograph.cotree.canonicalize` first when in doubt.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .cotree import (
    CoExpr,
    Leaf,
    Order,
    Union,
    evaluate,
    NotCanonicalError,
    leaf_count,
    postorder,
    require_canonical,
)
from .digraph import Digraph, is_acyclic, is_oriented

__all__ = [
    "OrientedColoring",
    "LabelState",
    "verify_oriented_coloring",
    "label_coloring",
    "chromatic_number",
    "longest_path_length",
    "undirected_chromatic_and_clique",
    "hom_to_transitive_tournament",
    "is_transitive_tournament",
    "is_oriented_clique",
    "cotree_isomorphic",
]


@dataclass(frozen=True)
class OrientedColoring:
    colors: dict[int, int]
    k: int

    def __post_init__(self) -> None:
        if set(self.colors.values()) != set(range(1, self.k + 1)):
            raise ValueError("colors must cover exactly 1..k")


@dataclass
class LabelState:
    """Per-node values of the Label traversal, indexed by preorder position.

    ``nodes[p]`` is the tree node at preorder position ``p``; ``color[p]`` is
    ``None`` for internal nodes.
    """

    nodes: list[CoExpr]
    in_: list[int]
    out: list[int]
    color: list[int | None]


def verify_oriented_coloring(g: Digraph, c: OrientedColoring | dict[int, int]) -> bool:
    """Check both conditions of an oriented coloring.

    Adjacent vertices get distinct colors, and for any two colors all arcs
    between their classes point the same way.
    """
    colors = c.colors if isinstance(c, OrientedColoring) else c
    missing = [v for v in range(g.n) if v not in colors]
    if missing:
        raise ValueError(f"no color for vertices {missing}")
    direction: set[tuple[int, int]] = set()
    for u, v in g.arcs:
        cu, cv = colors[u], colors[v]
        if cu == cv:
            return False
        direction.add((cu, cv))
    return all((b, a) not in direction for a, b in direction)


def label_coloring(t: CoExpr) -> tuple[OrientedColoring, LabelState]:
    """Optimal oriented coloring of ``evaluate(t)`` by the Label traversal."""
    require_canonical(t)
    nodes: list[CoExpr] = []
    in_: list[int] = []
    out: list[int] = []
    color: list[int | None] = []

    def visit(node: CoExpr, i: int) -> int:
        p = len(nodes)
        nodes.append(node)
        in_.append(i)
        out.append(0)
        color.append(None)
        return p

    colors: dict[int, int] = {}
    # Frame: (preorder position, node, index of next child, current i)
    root = visit(t, 1)
    if isinstance(t, Leaf):
        color[root] = out[root] = 1
        colors[t.vertex] = 1
        return OrientedColoring(colors, 1), LabelState(nodes, in_, out, color)
    stack = [[root, t, 0, 1]]
    while stack:
        frame = stack[-1]
        p, node, k, i = frame
        if k == len(node.children):
            stack.pop()
            if stack:
                parent = stack[-1]
                _after_child(parent, in_, out, p)
            continue
        child = node.children[k]
        frame[2] = k + 1
        q = visit(child, i)
        if isinstance(child, Leaf):
            color[q] = out[q] = i
            colors[child.vertex] = i
            _after_child(frame, in_, out, q)
        else:
            stack.append([q, child, 0, i])
    k = out[root]
    return OrientedColoring(colors, k), LabelState(nodes, in_, out, color)


def _after_child(frame: list, in_: list[int], out: list[int], child_pos: int) -> None:
    p, node = frame[0], frame[1]
    j = out[child_pos]
    if out[p] < j:
        out[p] = j
    frame[3] = in_[p] if isinstance(node, Union) else j + 1


def _fold(
    t: CoExpr,
    leaf: Callable[[Leaf], int],
    union: Callable[[list[int]], int],
    order: Callable[[list[int]], int],
) -> int:
    require_canonical(t)
    value: dict[int, int] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            value[id(node)] = leaf(node)
            continue
        vals = [value.pop(id(c)) for c in node.children]
        value[id(node)] = union(vals) if isinstance(node, Union) else order(vals)
    return value[id(t)]


def chromatic_number(t: CoExpr) -> int:
    """Oriented chromatic number: 1 at leaves, max over unions, sum over orders."""
    return _fold(t, lambda _: 1, max, sum)


def longest_path_length(t: CoExpr) -> int:
    """Arcs on a longest oriented path: 0, max, sum plus (arity - 1)."""
    return _fold(t, lambda _: 0, max, lambda vals: sum(vals) + len(vals) - 1)


def undirected_chromatic_and_clique(t: CoExpr) -> tuple[int, int]:
    """``(chi, omega)`` of the underlying undirected co-graph.

    An Order node acts as a join on the underlying graph, so both values add
    up there and take the maximum at Union nodes.
    """
    require_canonical(t)
    value: dict[int, tuple[int, int]] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            value[id(node)] = (1, 1)
            continue
        vals = [value.pop(id(c)) for c in node.children]
        if isinstance(node, Union):
            value[id(node)] = (max(v[0] for v in vals), max(v[1] for v in vals))
        else:
            value[id(node)] = (sum(v[0] for v in vals), sum(v[1] for v in vals))
    return value[id(t)]


def hom_to_transitive_tournament(g: Digraph, k: int) -> dict[int, int] | None:
    """A homomorphism ``h: V -> 1..k`` with ``h(u) < h(v)`` on every arc, or None.

    For acyclic ``g`` the level of a vertex (1 + longest path ending in it)
    is the least possible image, so one exists iff every level is <= k.
    A cyclic ``g`` never maps into an acyclic target.
    """
    if not is_oriented(g):
        raise ValueError("hom_to_transitive_tournament needs an oriented digraph")
    if k < 0:
        raise ValueError("k must be non-negative")
    if not is_acyclic(g):
        return None
    level = [1] * g.n
    indeg = [len(p) for p in g.pred]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    while ready:
        u = ready.pop()
        for w in g.succ[u]:
            level[w] = max(level[w], level[u] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if g.n and max(level) > k:
        return None
    return dict(enumerate(level))


def is_transitive_tournament(g: Digraph) -> bool:
    if g.m != g.n * (g.n - 1) // 2 or not is_oriented(g):
        return False
    outdeg = sorted(len(s) for s in g.succ)
    return outdeg == list(range(g.n))


def is_oriented_clique(t: CoExpr) -> bool:
    """Whether ``evaluate(t)`` is an oriented clique (a transitive tournament).

    Three characterisations are computed and required to agree.
    """
    by_count = chromatic_number(t) == leaf_count(t)
    by_shape = not any(isinstance(node, Union) for node in postorder(t))
    by_graph = is_transitive_tournament(evaluate(t))
    if not by_count == by_shape == by_graph:
        raise AssertionError(
            f"clique characterisations disagree: count={by_count} "
            f"shape={by_shape} graph={by_graph}"
        )
    return by_count


_LEAF, _UNION, _ORDER = 0, 1, 2


@dataclass
class _FlatTree:
    """A tree in breadth-first order.

    Children of node ``i`` sit at ``first[i] : first[i] + arity[i]``, and
    level ``d`` spans ``bounds[d] : bounds[d + 1]``.
    """

    kind: list[int]
    first: list[int]
    arity: list[int]
    bounds: list[int]
    leaves: int


def _flatten(t: CoExpr) -> _FlatTree:
    # Also enforces canonical form, so no separate pass is needed.
    kind: list[int] = []
    first: list[int] = []
    arity: list[int] = []
    bounds = [0]
    level = [t]
    leaves = 0
    while level:
        nxt: list[CoExpr] = []
        base = bounds[-1] + len(level)
        for node in level:
            cls = type(node)
            if cls is Leaf:
                kind.append(_LEAF)
                first.append(0)
                arity.append(0)
                leaves += 1
                continue
            children = node.children
            if len(children) < 2:
                raise NotCanonicalError("internal node with fewer than 2 children")
            for c in children:
                if type(c) is cls:
                    raise NotCanonicalError(
                        "expected a canonical di-co-tree; canonicalize() it first"
                    )
            kind.append(_UNION if cls is Union else _ORDER)
            first.append(base + len(nxt))
            arity.append(len(children))
            nxt.extend(children)
        bounds.append(bounds[-1] + len(level))
        level = nxt
    return _FlatTree(kind, first, arity, bounds, leaves)


def cotree_isomorphic(t1: CoExpr, t2: CoExpr) -> bool:
    """Isomorphism of the digraphs of two canonical trees, level by level.

    Labels are assigned bottom-up.  A node's vector holds its kind followed
    by its children's integer labels, sorted for Union nodes and kept in
    child order for Order nodes.  Each level's vectors are compared as
    sorted sequences and then replaced by their rank among the distinct
    vectors of that level.
    """
    f1, f2 = _flatten(t1), _flatten(t2)
    if f1.kind[0] != f2.kind[0] or len(f1.bounds) != len(f2.bounds):
        return False
    if f1.leaves != f2.leaves:
        return False
    label1 = [0] * len(f1.kind)
    label2 = [0] * len(f2.kind)
    for depth in range(len(f1.bounds) - 2, -1, -1):
        vec1 = _level_vectors(f1, label1, depth)
        vec2 = _level_vectors(f2, label2, depth)
        if len(vec1) != len(vec2):
            return False
        if sorted(vec1) != sorted(vec2):
            return False
        rank = {vec: r for r, vec in enumerate(sorted(set(vec1)), start=1)}
        lo1, lo2 = f1.bounds[depth], f2.bounds[depth]
        label1[lo1:lo1 + len(vec1)] = [rank[v] for v in vec1]
        label2[lo2:lo2 + len(vec2)] = [rank[v] for v in vec2]
    return True


def _level_vectors(f: _FlatTree, label: list[int], depth: int) -> list[tuple[int, ...]]:
    out = []
    kind, first, arity = f.kind, f.first, f.arity
    for i in range(f.bounds[depth], f.bounds[depth + 1]):
        k = kind[i]
        if k == _LEAF:
            out.append((_LEAF,))
            continue
        lo = first[i]
        kids = label[lo:lo + arity[i]]
        if k == _UNION:
            kids.sort()
        out.append((k, *kids))
    return out
