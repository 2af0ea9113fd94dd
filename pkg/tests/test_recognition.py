import random

import pytest

from ocograph.cotree import Leaf, Order, evaluate, is_canonical, random_canonical, relabel_tree
from ocograph.digraph import (
    Digraph,
    PatternWitness,
    all_digraphs,
    check_witness,
    directed_cycle,
    disjoint_union,
    is_oriented,
    is_transitive,
    transitive_tournament,
)
from ocograph.recognition import RecognitionOutcome, is_oriented_cograph, recognize


def test_transitive_tournament_is_a_chain(T3):
    out = recognize(T3)
    assert out.tree == Order((Leaf(0), Leaf(1), Leaf(2)))


def test_chain_order_follows_arcs():
    g = Digraph(3, [(2, 0), (2, 1), (0, 1)])
    assert recognize(g).tree == Order((Leaf(2), Leaf(0), Leaf(1)))


def test_path_gives_d1():
    out = recognize(Digraph(3, [(0, 1), (1, 2)]))
    assert out.witness == PatternWitness("D1", (0, 1, 2))
    assert not out.is_cograph


def test_outcome_holds_exactly_one():
    with pytest.raises(ValueError):
        RecognitionOutcome()


def test_is_oriented_cograph_examples(T3, C3):
    assert is_oriented_cograph(T3)
    assert not is_oriented_cograph(C3)
    assert is_oriented_cograph(disjoint_union(T3, T3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_agreement_exhaustive(n):
    for g in all_digraphs(n):
        out = recognize(g)
        if out.tree is not None:
            assert is_oriented_cograph(g)
            assert evaluate(out.tree) == g
            assert is_canonical(out.tree)
            assert is_transitive(g) and is_oriented(g)
        else:
            assert not is_oriented_cograph(g)
            assert check_witness(g, out.witness)


def test_round_trip_large_random():
    rng = random.Random(11)
    for seed in range(30):
        n = rng.randint(1, 200)
        t = random_canonical(n, seed)
        perm = list(range(n))
        rng.shuffle(perm)
        g = evaluate(relabel_tree(t, perm))
        out = recognize(g)
        assert evaluate(out.tree) == g


def test_recognize_is_deterministic():
    g = evaluate(random_canonical(30, 4))
    assert recognize(g) == recognize(g)


def test_non_cographs_get_witnesses():
    for g in (directed_cycle(4), directed_cycle(5), Digraph(4, [(0, 1), (2, 1), (2, 3)])):
        out = recognize(g)
        assert out.witness is not None and check_witness(g, out.witness)


def test_mixed_direction_between_parts():
    # Complement-disconnected but arcs between the parts point both ways.
    g = Digraph(4, [(0, 2), (3, 0), (1, 2), (1, 3), (0, 1)])
    out = recognize(g)
    assert out.witness is not None and check_witness(g, out.witness)


def test_empty_digraph_rejected():
    with pytest.raises(ValueError):
        recognize(Digraph(0))


def test_single_vertex(T3):
    assert recognize(Digraph(1)).tree == Leaf(0)
    assert recognize(transitive_tournament(1)).tree == Leaf(0)
