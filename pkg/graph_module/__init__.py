"""
Graph Module

Multigraph model, combinatorial oracles, Tutte polynomial and small-graph
isomorphism.
"""

from .multigraph import Multigraph, complete_graph, members, path_graph, popcount, triangle
from .combinatorics import (
    bridges, count_trees_matrixtree, cut_size, delta_subgraph, enumerate_forests,
    enumerate_trees, external_activity, is_forest, is_slim,
)
from .tutte import TuttePolynomial, tutte
from .isomorphism import are_isomorphic, canonical_form, enumerate_multigraphs

__all__ = [
    'Multigraph', 'complete_graph', 'members', 'path_graph', 'popcount', 'triangle',
    'bridges', 'count_trees_matrixtree', 'cut_size', 'delta_subgraph', 'enumerate_forests',
    'enumerate_trees', 'external_activity', 'is_forest', 'is_slim',
    'TuttePolynomial', 'tutte',
    'are_isomorphic', 'canonical_form', 'enumerate_multigraphs',
]
