"""Di-co-trees: expression trees over disjoint union and order composition.

Three node kinds make up a tree: :class:`Leaf`, :class:`Union` (``+`` in the
text format) and :class:`Order` (``>``).  Every traversal here is iterative,
so trees with millions of leaves are fine.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Union as _U

from .digraph import Digraph

__all__ = [
    "Leaf",
    "Union",
    "Order",
    "CoExpr",
    "CoTreeError",
    "ExpressionSyntaxError",
    "DuplicateLeafError",
    "NotCanonicalError",
    "leaves",
    "leaf_count",
    "height",
    "postorder",
    "validate",
    "is_canonical",
    "require_canonical",
    "evaluate",
    "canonicalize",
    "parse",
    "parse_named",
    "serialize",
    "random_canonical",
    "relabel_tree",
    "shuffle_unions",
]


class CoTreeError(ValueError):
    pass


class DuplicateLeafError(CoTreeError):
    pass


class NotCanonicalError(CoTreeError):
    pass


class ExpressionSyntaxError(CoTreeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, slots=True)
class Leaf:
    vertex: int


@dataclass(frozen=True, slots=True)
class Union:
    children: tuple[CoExpr, ...]


@dataclass(frozen=True, slots=True)
class Order:
    children: tuple[CoExpr, ...]


CoExpr = _U[Leaf, Union, Order]


def postorder(t: CoExpr):
    """Yield every node after all of its descendants, children left to right."""
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf) or expanded:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            stack.append((child, False))


def leaves(t: CoExpr) -> list[int]:
    """Leaf vertex ids in left-to-right order."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.vertex)
        else:
            stack.extend(reversed(node.children))
    return out


def leaf_count(t: CoExpr) -> int:
    return len(leaves(t))


def height(t: CoExpr) -> int:
    h = 0
    stack = [(t, 0)]
    while stack:
        node, depth = stack.pop()
        h = max(h, depth)
        if not isinstance(node, Leaf):
            stack.extend((c, depth + 1) for c in node.children)
    return h


def validate(t: CoExpr) -> None:
    """Raise unless ``t`` has unique leaves and every internal node has >= 2 children."""
    seen = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            if node.vertex in seen:
                raise DuplicateLeafError(f"leaf {node.vertex} occurs more than once")
            seen.add(node.vertex)
        elif isinstance(node, (Union, Order)):
            if len(node.children) < 2:
                raise CoTreeError(f"{type(node).__name__} node with fewer than 2 children")
            stack.extend(node.children)
        else:
            raise CoTreeError(f"not a tree node: {node!r}")


def is_canonical(t: CoExpr) -> bool:
    """Union and Order alternate along every root-to-leaf path, no unary nodes."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            continue
        if len(node.children) < 2:
            return False
        for child in node.children:
            if type(child) is type(node):
                return False
            stack.append(child)
    return True


def require_canonical(t: CoExpr) -> None:
    if not is_canonical(t):
        raise NotCanonicalError("expected a canonical di-co-tree; canonicalize() it first")


def evaluate(t: CoExpr) -> Digraph:
    """Build the digraph denoted by ``t``; vertex count is ``max leaf id + 1``."""
    validate(t)
    arcs = []
    below: dict[int, list[int]] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            below[id(node)] = [node.vertex]
            continue
        parts = [below.pop(id(c)) for c in node.children]
        if isinstance(node, Order):
            for i, left in enumerate(parts):
                for right in parts[i + 1:]:
                    arcs.extend((u, v) for u in left for v in right)
        below[id(node)] = [v for part in parts for v in part]
    vertices = below[id(t)]
    return Digraph(max(vertices) + 1, arcs)


def canonicalize(t: CoExpr) -> CoExpr:
    """Flatten same-kind parent/child chains and contract unary nodes.

    The result denotes exactly the same digraph (same ids, same arcs).
    """
    done: dict[int, CoExpr] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            done[id(node)] = node
            continue
        kids: list[CoExpr] = []
        for child in node.children:
            c = done.pop(id(child))
            if type(c) is type(node):
                kids.extend(c.children)
            else:
                kids.append(c)
        if len(kids) == 1:
            done[id(node)] = kids[0]
        elif len(kids) == len(node.children) and all(
            a is b for a, b in zip(kids, node.children)
        ):
            done[id(node)] = node
        else:
            done[id(node)] = type(node)(tuple(kids))
    return done[id(t)]


_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_]+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        if match.group(1) is not None:
            tokens.append(("id", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            ch = match.group(2)
            if ch not in "+>()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", match.start(2))
            tokens.append((ch, ch, match.start(2)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr := term ('+' term)* ; term := atom ('>' atom)* ; atom := id | '(' expr ')'

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names: list[str] = []

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            want = {"id": "identifier", "end": "end of input"}.get(kind, repr(kind))
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExpressionSyntaxError(f"expected {want}, found {got}", tok[2])
        self.pos += 1
        return tok

    def expr(self):
        parts = [self.term()]
        while self.peek()[0] == "+":
            self.pos += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else ("+", parts)

    def term(self):
        parts = [self.atom()]
        while self.peek()[0] == ">":
            self.pos += 1
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else (">", parts)

    def atom(self):
        kind, value, where = self.peek()
        if kind == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        self.take("id")
        self.names.append(value)
        return ("id", value, where)

    def run(self):
        if self.peek()[0] == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        raw = self.expr()
        self.take("end")
        return raw


def parse_named(text: str) -> tuple[CoExpr, list[str]]:
    """Parse an expression; returns the tree and ``names[vertex_id]``.

    Leaf ids follow left-to-right leaf order, except that when the
    identifiers are exactly the integers ``0..n-1`` they are used as ids
    directly (so ``parse(serialize(t)) == t``).
    """
    parser = _Parser(text)
    raw = parser.run()
    names = parser.names
    seen: dict[str, int] = {}
    for name in names:
        if name in seen:
            raise DuplicateLeafError(f"duplicate leaf name {name!r}")
        seen[name] = len(seen)
    numeric = all(s.isdigit() and (s == "0" or not s.startswith("0")) for s in names)
    if numeric and sorted(int(s) for s in names) == list(range(len(names))):
        ids = {s: int(s) for s in names}
    else:
        ids = seen
    ordered_names = [""] * len(names)
    for s, i in ids.items():
        ordered_names[i] = s

    def build(node):
        # Nesting depth is bounded by the parenthesis depth of the input.
        if node[0] == "id":
            return Leaf(ids[node[1]])
        cls = Union if node[0] == "+" else Order
        return cls(tuple(build(p) for p in node[1]))

    return build(raw), ordered_names


def parse(text: str) -> CoExpr:
    return parse_named(text)[0]


def serialize(t: CoExpr, names: list[str] | dict[int, str] | None = None) -> str:
    """Render ``t`` in the expression grammar; internal children are parenthesised."""
    out: dict[int, str] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            out[id(node)] = str(node.vertex) if names is None else names[node.vertex]
            continue
        pieces = []
        for child in node.children:
            s = out.pop(id(child))
            pieces.append(s if isinstance(child, Leaf) else f"({s})")
        out[id(node)] = (" + " if isinstance(node, Union) else " > ").join(pieces)
    return out[id(t)]


def random_canonical(n: int, seed: int, max_arity: int = 4) -> CoExpr:
    """Random canonical tree with leaves ``0..n-1`` in left-to-right order.

    Deterministic for a fixed ``(n, seed, max_arity)``.  The root kind is a
    coin flip; every internal node splits its leaf budget into 2..max_arity
    non-empty parts.
    """
    if n < 1:
        raise ValueError("random_canonical needs n >= 1")
    if max_arity < 2:
        raise ValueError("max_arity must be at least 2")
    rng = random.Random(seed)
    root_kind = rng.choice((Union, Order))
    # Each frame: [size, kind, list of built children, pending part sizes]
    next_leaf = 0
    result: CoExpr | None = None
    stack: list[list] = []

    def open_frame(size: int, kind):
        k = rng.randint(2, min(size, max_arity))
        cuts = sorted(rng.sample(range(1, size), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        stack.append([kind, [], sizes[::-1]])

    if n == 1:
        return Leaf(0)
    open_frame(n, root_kind)
    while stack:
        frame = stack[-1]
        kind, built, pending = frame
        if not pending:
            stack.pop()
            node = kind(tuple(built))
            if stack:
                stack[-1][1].append(node)
            else:
                result = node
            continue
        size = pending.pop()
        if size == 1:
            built.append(Leaf(next_leaf))
            next_leaf += 1
        else:
            open_frame(size, Order if kind is Union else Union)
    assert result is not None
    return result


def relabel_tree(t: CoExpr, perm: list[int]) -> CoExpr:
    """Replace every leaf id ``v`` by ``perm[v]``."""
    done: dict[int, CoExpr] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            done[id(node)] = Leaf(perm[node.vertex])
        else:
            done[id(node)] = type(node)(tuple(done.pop(id(c)) for c in node.children))
    return done[id(t)]


def shuffle_unions(t: CoExpr, rng: random.Random) -> CoExpr:
    """Permute the children of every Union node; the digraph is unchanged."""
    done: dict[int, CoExpr] = {}
    for node in postorder(t):
        if isinstance(node, Leaf):
            done[id(node)] = node
            continue
        kids = [done.pop(id(c)) for c in node.children]
        if isinstance(node, Union):
            rng.shuffle(kids)
        done[id(node)] = type(node)(tuple(kids))
    return done[id(t)]
