import itertools
import random

import pytest

from ocograph.digraph import (
    Digraph,
    PatternWitness,
    all_digraphs,
    check_witness,
    directed_cycle,
    disjoint_union,
    find_forbidden_pattern,
    induced_subdigraph,
    is_acyclic,
    is_oriented,
    is_transitive,
    order_composition,
    transitive_tournament,
    underlying,
)


def test_digraph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        Digraph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Digraph(2, [(0, 2)])


def test_duplicate_arcs_collapse():
    g = Digraph(2, [(0, 1), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize(
    "arcs, expected",
    [
        ([(0, 1)], True),
        ([(0, 1), (1, 0)], False),
        ([(0, 1), (1, 2), (0, 2)], True),
    ],
)
def test_is_oriented(arcs, expected):
    assert is_oriented(Digraph(3, arcs)) is expected


@pytest.mark.parametrize(
    "arcs, expected",
    [
        ([(0, 1), (1, 2), (0, 2)], True),
        ([(0, 1), (1, 2)], False),
        ([(0, 1), (1, 2), (2, 0)], False),
    ],
)
def test_is_transitive(arcs, expected):
    assert is_transitive(Digraph(3, arcs)) is expected


def test_underlying():
    assert underlying(Digraph(2, [(0, 1), (1, 0)])).edges == {(0, 1)}
    assert underlying(transitive_tournament(3)).edges == {(0, 1), (0, 2), (1, 2)}
    empty = underlying(Digraph(3))
    assert empty.n == 3 and not empty.edges


def test_induced_subdigraph(T3):
    assert induced_subdigraph(T3, {0, 2}) == Digraph(2, [(0, 1)])
    assert induced_subdigraph(T3, range(3)) == T3
    assert induced_subdigraph(T3, []) == Digraph(0)
    with pytest.raises(ValueError):
        induced_subdigraph(T3, [3])


def test_forbidden_pattern_examples(T3, C3):
    assert find_forbidden_pattern(T3) is None
    assert find_forbidden_pattern(Digraph(3, [(0, 1), (1, 2)])) == PatternWitness("D1", (0, 1, 2))
    assert find_forbidden_pattern(C3) == PatternWitness("D5", (0, 1, 2))
    # a->b, c->b, c->d: no D1/D5 since no two arcs compose
    p4 = Digraph(4, [(0, 1), (2, 1), (2, 3)])
    assert find_forbidden_pattern(p4) == PatternWitness("UndirectedP4", (0, 1, 2, 3))
    assert find_forbidden_pattern(Digraph(3, [(2, 1), (1, 2), (0, 1)])) == PatternWitness(
        "BiorientedP2", (1, 2)
    )


def test_witness_rechecks_reject_fakes(T3):
    assert not check_witness(T3, PatternWitness("D1", (0, 1, 2)))
    assert not check_witness(T3, PatternWitness("D5", (0, 1, 2)))
    assert not check_witness(T3, PatternWitness("BiorientedP2", (0, 1)))
    assert not check_witness(T3, PatternWitness("UndirectedP4", (0, 1, 2, 0)))
    with pytest.raises(ValueError):
        PatternWitness("D8", (0, 1))


def _has_induced_p4(un) -> bool:
    for quad in itertools.permutations(range(un.n), 4):
        a, b, c, d = quad
        e = un.has_edge
        if e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d)):
            return True
    return False


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pattern_free_iff_structural_conditions(n):
    for g in all_digraphs(n):
        w = find_forbidden_pattern(g)
        expected = is_oriented(g) and is_transitive(g) and not _has_induced_p4(underlying(g))
        assert (w is None) is expected, g
        if w is not None:
            assert check_witness(g, w)


def test_pattern_free_iff_structural_conditions_sampled_six():
    rng = random.Random(6)
    for _ in range(400):
        n = rng.randint(5, 6)
        g = Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.3])
        expected = is_oriented(g) and is_transitive(g) and not _has_induced_p4(underlying(g))
        assert (find_forbidden_pattern(g) is None) is expected


def test_transitive_oriented_implies_acyclic():
    for g in all_digraphs(4):
        if is_oriented(g) and is_transitive(g):
            assert is_acyclic(g)
    assert not is_acyclic(directed_cycle(3))


def test_underlying_commutes_with_induced():
    rng = random.Random(0)
    for g in itertools.islice(all_digraphs(4), 0, None, 7):
        s = [v for v in range(4) if rng.random() < 0.5]
        assert underlying(induced_subdigraph(g, s)) == underlying(g).induced(s)


def test_compositions():
    a = Digraph(1)
    assert order_composition(a, a, a) == transitive_tournament(3)
    assert disjoint_union(a, a) == Digraph(2)
    g = order_composition(Digraph(2, [(0, 1)]), a)
    assert g.arcs == {(0, 1), (0, 2), (1, 2)}


def test_co_components():
    un = underlying(order_composition(Digraph(2), Digraph(1)))
    assert un.co_components() == [[0, 1], [2]]
    assert un.components() == [[0, 1, 2]]
