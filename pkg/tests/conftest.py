import itertools

import pytest

from ocograph.digraph import Digraph


def naive_is_coloring(g: Digraph, c) -> bool:
    """Both coloring conditions, checked literally over all arc pairs."""
    for u, v in g.arcs:
        if c[u] == c[v]:
            return False
    for (u, v), (x, y) in itertools.product(g.arcs, repeat=2):
        if c[v] == c[x] and c[u] == c[y]:
            return False
    return True


def naive_chromatic(g: Digraph) -> int:
    """Smallest k such that one of the k**n maps is an oriented coloring."""
    for k in range(1, g.n + 1):
        if any(naive_is_coloring(g, c) for c in itertools.product(range(k), repeat=g.n)):
            return k
    return 0


def naive_isomorphic(g1: Digraph, g2: Digraph) -> bool:
    if g1.n != g2.n:
        return False
    return any(
        {(p[u], p[v]) for u, v in g1.arcs} == g2.arcs
        for p in itertools.permutations(range(g1.n))
    )


@pytest.fixture
def T3():
    return Digraph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def C3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])
