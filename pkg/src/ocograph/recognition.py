"""Recognition of oriented co-graphs.

:func:`recognize` decomposes a digraph top-down: a disconnected underlying
graph splits into a union of its components, a disconnected complement
splits into an order over its co-components.  Anything else, or any
inconsistency in arc directions, is answered with a forbidden-pattern
witness from :func:`~ocograph.digraph.find_forbidden_pattern`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotree import CoExpr, Leaf, Order, Union, canonicalize
from .digraph import Digraph, PatternWitness, find_forbidden_pattern, underlying

__all__ = ["RecognitionOutcome", "recognize", "is_oriented_cograph"]


@dataclass(frozen=True)
class RecognitionOutcome:
    tree: CoExpr | None = None
    witness: PatternWitness | None = None

    def __post_init__(self) -> None:
        if (self.tree is None) == (self.witness is None):
            raise ValueError("exactly one of tree and witness must be set")

    @property
    def is_cograph(self) -> bool:
        return self.tree is not None


class _Reject(Exception):
    pass


def _order_parts(g: Digraph, parts: list[list[int]]) -> list[list[int]]:
    """Sort co-components by arc direction, or raise if no total order exists."""
    k = len(parts)
    beats = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            forward = backward = 0
            for u in parts[i]:
                succ = g.succ[u]
                pred = g.pred[u]
                for v in parts[j]:
                    forward += v in succ
                    backward += v in pred
            full = len(parts[i]) * len(parts[j])
            if forward == full and backward == 0:
                beats[i] += 1
            elif backward == full and forward == 0:
                beats[j] += 1
            else:
                raise _Reject
    # A tournament on k parts is transitive iff its score sequence is k-1..0.
    if sorted(beats) != list(range(k)):
        raise _Reject
    ranked = sorted(range(k), key=lambda i: -beats[i])
    return [parts[i] for i in ranked]


def _decompose(g: Digraph, un, vertices: list[int]) -> CoExpr:
    if len(vertices) == 1:
        return Leaf(vertices[0])
    comps = un.components(vertices)
    if len(comps) > 1:
        return Union(tuple(_decompose(g, un, c) for c in comps))
    parts = un.co_components(vertices)
    if len(parts) == 1:
        raise _Reject
    parts = _order_parts(g, parts)
    return Order(tuple(_decompose(g, un, p) for p in parts))


def recognize(g: Digraph) -> RecognitionOutcome:
    """Di-co-tree for ``g`` if it is an oriented co-graph, else a witness."""
    if g.n == 0:
        raise ValueError("cannot recognize the empty digraph")
    try:
        tree = _decompose(g, underlying(g), list(range(g.n)))
    except _Reject:
        witness = find_forbidden_pattern(g)
        if witness is None:
            raise AssertionError("decomposition failed but no forbidden pattern exists")
        return RecognitionOutcome(witness=witness)
    return RecognitionOutcome(tree=canonicalize(tree))


def is_oriented_cograph(g: Digraph) -> bool:
    """Pattern-based membership test, independent of :func:`recognize`."""
    return find_forbidden_pattern(g) is None
