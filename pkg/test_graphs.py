"""
Tests for the graph layer: parsing, cuts, forests, external activity,
Tutte polynomials, spanning trees, bridges and isomorphism.
"""

import random

import networkx as nx
import pytest
import sympy

from graph_module.combinatorics import (
    activity_histogram, bridges, count_trees_matrixtree, cut_size, delta_subgraph,
    enumerate_forests, enumerate_trees, external_activity, forest_activity_series, is_forest,
    is_slim, slim_subsets, tree_activity_series,
)
from graph_module.isomorphism import are_isomorphic, canonical_form, enumerate_multigraphs
from graph_module.multigraph import Multigraph, mask_of, members, popcount
from graph_module.tutte import tutte
from utils.errors import (
    BoundExceededError, DisconnectedGraphError, GraphParseError, InvalidInputError, NotAForestError,
)
from utils.schema import GalgConfig, HilbertSeries


# --- parsing ---------------------------------------------------------------

def test_parse_reads_header_edges_and_comments():
    g = Multigraph.parse("# a triangle\nvertices 3\n0 1\n0 2  # second\n\n2 1\n")
    assert g.n_vertices == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_parse_round_trips_text(double_edge):
    assert Multigraph.parse(double_edge.to_text()) == double_edge


@pytest.mark.parametrize("text, line", [
    ("0 1\n", 1),
    ("vertices three\n", 1),
    ("vertices 3\n0 1 2\n", 2),
    ("vertices 3\n0 0\n", 2),
    ("vertices 3\n0 5\n", 2),
    ("vertices 3\n0 1\nx 1\n", 3),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        Multigraph.parse(text)
    assert info.value.line_number == line


def test_parse_requires_header():
    with pytest.raises(GraphParseError):
        Multigraph.parse("# nothing here\n")


def test_constructor_rejects_loops_and_bad_vertices():
    with pytest.raises(InvalidInputError):
        Multigraph(2, ((1, 1),))
    with pytest.raises(InvalidInputError):
        Multigraph(2, ((0, 2),))
    with pytest.raises(InvalidInputError):
        Multigraph(0, ())


def test_bitmask_helpers():
    assert mask_of([0, 2, 5]) == 0b100101
    assert members(0b100101) == [0, 2, 5]
    assert popcount(0b100101) == 3


# --- cuts and forests ------------------------------------------------------

def test_cut_size(tri, double_edge, path3):
    assert cut_size(tri, 0b001) == 2
    assert cut_size(tri, 0b111) == 0
    assert cut_size(double_edge, 0b01) == 2
    assert cut_size(path3, 0b101) == 2
    with pytest.raises(InvalidInputError):
        cut_size(tri, 0)
    with pytest.raises(InvalidInputError):
        cut_size(tri, 0b1000)


def test_singleton_cuts_add_up_to_twice_the_edges(small_corpus):
    for g in small_corpus:
        assert sum(cut_size(g, 1 << v) for v in range(g.n_vertices)) == 2 * g.n_edges


def test_is_forest(tri, double_edge):
    assert is_forest(tri, 0b011)
    assert not is_forest(tri, 0b111)
    assert not is_forest(double_edge, 0b11)
    assert is_forest(double_edge, 0b10)


def test_external_activity_examples(tri, double_edge):
    assert external_activity(tri, 0) == 0
    assert external_activity(tri, 0b110) == 1
    assert external_activity(tri, 0b011) == 0
    assert external_activity(tri, 0b101) == 0
    assert external_activity(double_edge, 0b10) == 1
    assert external_activity(double_edge, 0b01) == 0
    with pytest.raises(NotAForestError):
        external_activity(tri, 0b111)


def test_forest_and_tree_counts(tri, k4):
    assert sum(1 for _ in enumerate_forests(tri)) == 7
    assert sum(1 for _ in enumerate_trees(tri)) == 3
    assert sum(1 for _ in enumerate_forests(k4)) == 38
    assert sum(1 for _ in enumerate_trees(k4)) == 16


def test_activity_series_of_triangle(tri):
    assert forest_activity_series(tri) == HilbertSeries.of(1, 2, 3, 1)
    assert tree_activity_series(tri) == HilbertSeries.of(1, 2)


def test_activity_histogram_does_not_depend_on_edge_order(small_corpus):
    rng = random.Random(7)
    for g in small_corpus:
        expected = activity_histogram(g)
        for _ in range(3):
            order = list(range(g.n_edges))
            rng.shuffle(order)
            assert activity_histogram(g.permute_edges(order)) == expected


def test_enumeration_bound():
    with pytest.raises(BoundExceededError):
        list(enumerate_forests(Multigraph(2, ((0, 1),) * 5), GalgConfig(enumeration_bound=4)))


# --- Tutte polynomial and spanning trees -----------------------------------

def test_tutte_small_graphs(tri, double_edge, k4):
    assert str(tutte(tri)) == "x^2 + x + y"
    assert str(tutte(double_edge)) == "x + y"
    x, y = sympy.symbols("x y")
    expected = x**3 + 3*x**2 + 2*x + 4*x*y + 2*y + 3*y**2 + y**3
    assert sympy.expand(tutte(k4).as_sympy() - expected) == 0


def test_tutte_evaluations_match_enumeration(small_corpus):
    for g in small_corpus:
        poly = tutte(g)
        assert poly.forest_count == sum(1 for _ in enumerate_forests(g))
        if g.is_connected():
            assert poly.tree_count == count_trees_matrixtree(g)


@pytest.mark.parametrize("graph", [
    nx.complete_graph(4),
    nx.cycle_graph(5),
    nx.wheel_graph(5),
])
def test_tutte_agrees_with_networkx(graph):
    g = Multigraph(graph.number_of_nodes(), tuple(graph.edges()))
    assert sympy.expand(tutte(g).as_sympy() - nx.tutte_polynomial(graph)) == 0


def test_matrix_tree(k4, double_edge):
    assert count_trees_matrixtree(k4) == 16
    assert count_trees_matrixtree(double_edge) == 2
    assert count_trees_matrixtree(Multigraph(3, ((0, 1),))) == 0


# --- bridges, Delta-subgraph, slim subsets --------------------------------

def test_bridges_and_delta(bridged_triangles, path3, tri):
    assert bridges(bridged_triangles) == 1 << 6
    assert bridges(path3) == 0b11
    assert bridges(tri) == 0
    delta = delta_subgraph(bridged_triangles)
    assert delta.graph.n_vertices == 6
    assert delta.graph.n_edges == 6
    assert delta.edge_indices == [0, 1, 2, 3, 4, 5]
    assert delta_subgraph(path3).graph == Multigraph(1, ())


def test_parallel_edges_are_never_bridges(double_edge):
    assert bridges(double_edge) == 0
    # double edge 0-1 with a pendant 1-2, then a separate edge 3-4
    g = Multigraph(5, ((0, 1), (1, 2), (0, 1), (3, 4)))
    assert bridges(g) == 0b1010


def test_bridges_match_single_edge_removal(small_corpus):
    for g in small_corpus:
        expected = 0
        for e, (u, v) in enumerate(g.edges):
            sides = g.components(g.all_edges_mask & ~(1 << e))
            if not any(u in side and v in side for side in sides):
                expected |= 1 << e
        assert bridges(g) == expected


def test_components_of_edge_subsets(bridged_triangles):
    assert bridged_triangles.components() == [[0, 1, 2, 3, 4, 5]]
    assert bridged_triangles.components(0b0111111) == [[0, 1, 2], [3, 4, 5]]
    assert bridged_triangles.components(0) == [[v] for v in range(6)]
    sub = bridged_triangles.to_networkx(0b1000001)
    assert sorted(sub.edges(keys=True)) == [(0, 1, 0), (2, 3, 6)]
    assert sub.number_of_nodes() == 6
    assert not Multigraph(3, ((0, 1),)).is_connected()


def test_slim_subsets(tri, path3):
    assert sorted(slim_subsets(tri)) == [0, 0b001, 0b010, 0b100]
    assert list(slim_subsets(path3)) == [0]
    assert is_slim(tri, 0b100)
    assert not is_slim(tri, 0b011)
    with pytest.raises(DisconnectedGraphError):
        is_slim(Multigraph(3, ((0, 1),)), 0)


# --- isomorphism and enumeration -------------------------------------------

def test_enumeration_counts():
    assert len(enumerate_multigraphs(3, 3)) == 3
    assert len(enumerate_multigraphs(3, 3, connected=True)) == 2
    assert len(enumerate_multigraphs(4, 3, connected=True)) == 2


def test_enumerated_classes_are_pairwise_distinct(small_corpus):
    forms = [(g.n_vertices, canonical_form(g)) for g in small_corpus]
    assert len(forms) == len(set(forms))


def test_isomorphism_finds_relabelings(small_corpus, config):
    rng = random.Random(3)
    for g in small_corpus:
        perm = list(range(g.n_vertices))
        rng.shuffle(perm)
        h = g.relabel(perm)
        mapping = are_isomorphic(g, h, config)
        assert mapping is not None
        assert g.relabel(mapping).multiplicity_matrix() == h.multiplicity_matrix()


def test_isomorphism_agrees_with_networkx(config):
    graphs = enumerate_multigraphs(4, 4)
    for a in graphs:
        for b in graphs:
            ours = are_isomorphic(a, b, config) is not None
            assert ours == nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_isomorphism_bound(k4):
    with pytest.raises(BoundExceededError):
        are_isomorphic(k4, k4, GalgConfig(iso_max_vertices=3))
