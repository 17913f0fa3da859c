"""
Tests for graded and filtered Hilbert series, majorization and the
generic-f series.
"""

import pytest

from algebra_module.generators import GeneratorKind, vertex_family
from algebra_module.hilbert import (
    algebra_series, filtered_run, filtered_series, generic_series, graded_series, joint_rank,
    majorize, span_contains,
)
from algebra_module.squarefree import Ambient, AmbientKind, phi
from algebra_module.unipoly import UniPoly
from graph_module.combinatorics import count_trees_matrixtree, forest_activity_series, tree_activity_series
from graph_module.multigraph import Multigraph
from graph_module.tutte import tutte
from utils.errors import AmbientMismatchError, BoundExceededError, InvalidInputError
from utils.schema import GalgConfig, HilbertSeries, Majorization


def _series(g, kind, ambient=AmbientKind.FULL, **kwargs):
    return algebra_series(g, kind, ambient, config=GalgConfig(), **kwargs).series


# --- the series value type -------------------------------------------------

def test_hilbert_series_basics():
    series = HilbertSeries.from_dims([1, 4, 7])
    assert series == HilbertSeries.of(1, 3, 3)
    assert series.total == 7
    assert series.degree == 2
    assert series.prefix_sums(4) == [1, 4, 7, 7]
    assert str(series) == "1+3t+3t^2"
    assert str(HilbertSeries.of(1, 1, 0, 1)) == "1+t+t^3"
    assert HilbertSeries.of(1, 2, 0, 0) == HilbertSeries.of(1, 2)
    with pytest.raises(InvalidInputError):
        HilbertSeries.of(1, -1)


@pytest.mark.parametrize("coefficients", [(), (0,), (2, 1), (0, 0, 0), (3,)])
def test_hilbert_series_starts_with_one(coefficients):
    with pytest.raises(InvalidInputError, match="start with 1"):
        HilbertSeries(coefficients)
    with pytest.raises(InvalidInputError):
        HilbertSeries.from_dims([2, 5])


@pytest.mark.parametrize("a, b, expected", [
    ((1, 3, 3), (1, 2, 4), Majorization.GREATER),
    ((1, 1, 1), (1, 2), Majorization.LESS),
    ((1, 2, 3), (1, 3, 1, 1), Majorization.INCOMPARABLE),
    ((1, 2), (1, 2), Majorization.EQUAL),
])
def test_majorize(a, b, expected):
    assert majorize(HilbertSeries(a), HilbertSeries(b)) is expected


# --- graded series of C ----------------------------------------------------

def test_graded_series_of_small_graphs(tri, double_edge, single_edge):
    assert _series(tri, "C") == HilbertSeries.of(1, 2, 3, 1)
    assert _series(double_edge, "C") == HilbertSeries.of(1, 1, 1)
    assert _series(single_edge, "C") == HilbertSeries.of(1, 1)
    assert _series(Multigraph(2, ()), "C") == HilbertSeries.of(1)


def test_graded_series_counts_forests_by_activity(small_corpus):
    for g in small_corpus:
        series = _series(g, "C")
        assert series == forest_activity_series(g)
        assert series.total == tutte(g).forest_count


def test_tree_graded_series(tri, k4, bowtie, bridged_triangles):
    assert _series(tri, "C", AmbientKind.TREE) == HilbertSeries.of(1, 2)
    assert _series(k4, "C", AmbientKind.TREE).total == 16
    assert _series(bowtie, "C", AmbientKind.TREE) == HilbertSeries.of(1, 4, 4)
    assert _series(bridged_triangles, "C", AmbientKind.TREE) == HilbertSeries.of(1, 4, 4)


def test_tree_graded_series_counts_trees_by_activity(small_corpus):
    for g in small_corpus:
        if not g.is_connected():
            continue
        series = _series(g, "C", AmbientKind.TREE)
        assert series == tree_activity_series(g)
        assert series.total == count_trees_matrixtree(g)


def test_graded_series_rejects_inhomogeneous_generators(tri):
    ambient = Ambient(tri)
    with pytest.raises(InvalidInputError):
        graded_series(vertex_family(tri, GeneratorKind.Y, ambient), ambient)


# --- filtered series of K and F[f] -----------------------------------------

def test_filtered_series_of_triangle(tri):
    run = algebra_series(tri, "K", config=GalgConfig())
    assert run.series.total == 7
    assert run.series.coefficients[:2] == (1, 3)
    assert run.dims[:2] == [1, 4]
    assert run.dims[-1] == 7
    assert run.plateau_k == len(run.dims) - 1


def test_filtered_series_with_identity_is_graded_series(small_corpus):
    for g in small_corpus:
        assert _series(g, "f", f=UniPoly.identity()) == _series(g, "C")


def test_c_and_k_are_the_same_algebra(small_corpus):
    for g in small_corpus:
        ambient = Ambient(g)
        xs = vertex_family(g, GeneratorKind.X, ambient)
        ys = vertex_family(g, GeneratorKind.Y, ambient)
        assert span_contains(xs, ys)
        assert span_contains(ys, xs)
        assert joint_rank(xs, ys) == tutte(g).forest_count


def test_tree_filtered_series_of_two_triangles(bowtie, bridged_triangles):
    # the shared cut vertex contributes a quadratic term to its generator
    assert _series(bowtie, "K", AmbientKind.TREE) == HilbertSeries.of(1, 5, 3)
    assert _series(bridged_triangles, "K", AmbientKind.TREE) == HilbertSeries.of(1, 4, 4)


def test_filtered_run_reports_plateau(double_edge):
    ambient = Ambient(double_edge)
    run = filtered_run(vertex_family(double_edge, GeneratorKind.Y, ambient), ambient)
    # Y_0 - 1 and Y_1 - 1 share their quadratic part but not their linear one
    assert run.dims == [1, 3]
    assert run.series == HilbertSeries.of(1, 2)
    assert run.plateau_k == 1


def test_filtered_series_of_constants_only(tri):
    ambient = Ambient(tri)
    assert filtered_series([ambient.one()], ambient) == HilbertSeries.of(1)
    assert filtered_series([], ambient) == HilbertSeries.of(1)


def test_mixed_ambients_are_rejected(tri, double_edge):
    with pytest.raises(AmbientMismatchError):
        filtered_series([phi(0, Ambient(tri)), phi(0, Ambient(double_edge))])


def test_rank_bound(k4):
    with pytest.raises(BoundExceededError):
        algebra_series(k4, "K", config=GalgConfig(max_edges=5))


# --- generic series --------------------------------------------------------

def test_generic_series_reaches_consensus(tri, double_edge):
    result = generic_series(tri, config=GalgConfig())
    assert result.consensus
    assert result.seeds == [0, 1, 2]
    assert len(result.samples) == 3
    assert result.series.total == 7
    assert generic_series(double_edge, seeds=[4, 5], config=GalgConfig()).consensus


def test_generic_series_needs_two_seeds(tri):
    with pytest.raises(InvalidInputError):
        generic_series(tri, seeds=[0], config=GalgConfig())


def test_generic_series_majorizes_every_f(small_corpus):
    for g in small_corpus:
        generic = generic_series(g, seeds=[0, 1], config=GalgConfig()).series
        for f in (UniPoly.identity(), UniPoly.exp_minus_one(max(g.n_edges, 1)), UniPoly.of(0, 1, 1)):
            series = _series(g, "f", f=f)
            assert series.total == generic.total
            assert majorize(series, generic) in (Majorization.LESS, Majorization.EQUAL)


def test_generic_algebra_series_reports_consensus(tri):
    result = algebra_series(tri, "generic", seeds=[0, 1], config=GalgConfig())
    assert result.consensus is True
    assert result.dims[-1] == 7
