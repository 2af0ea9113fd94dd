"""Oriented co-graphs: recognition, optimal oriented coloring, longest
oriented paths and isomorphism on di-co-trees, with brute-force oracles."""

from .algorithms import (
    LabelState,
    OrientedColoring,
    chromatic_number,
    cotree_isomorphic,
    hom_to_transitive_tournament,
    is_oriented_clique,
    label_coloring,
    longest_path_length,
    undirected_chromatic_and_clique,
    verify_oriented_coloring,
)
from .cotree import (
    CoExpr,
    Leaf,
    Order,
    Union,
    canonicalize,
    evaluate,
    parse,
    random_canonical,
    serialize,
)
from .digraph import Digraph, PatternWitness, find_forbidden_pattern, underlying
from .recognition import RecognitionOutcome, is_oriented_cograph, recognize

__version__ = "0.1.0"
