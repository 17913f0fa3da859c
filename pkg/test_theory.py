"""
Tests for relation checks, reconstruction invariants and the per-graph
validation suite.
"""

import random

import pytest

from algebra_module.generators import GeneratorKind, vertex_family
from algebra_module.squarefree import Ambient
from algebra_module.unipoly import UniPoly
from graph_module.isomorphism import are_isomorphic
from graph_module.multigraph import Multigraph
from theory_module.invariants import (
    check_generator_family, degree_d, incident_edge_count, inverse_sum, multiplicity, reconstruct,
)
from theory_module.relations import check_pI, check_qI, check_tree_relations
from theory_module.validation import run_checks
from utils.errors import (
    BoundExceededError, DisconnectedGraphError, InconsistentFamilyError, InvalidInputError,
    NotNilpotentError,
)
from utils.schema import GalgConfig


# --- relations -------------------------------------------------------------

def test_relations_hold_on_triangle(tri, config):
    p = check_pI(tri, config)
    assert p.family == "p" and p.holds
    assert len(p.checks) == 7
    assert all(c.sharp for c in p.checks if len(c.subset) == 1)
    assert check_qI(tri, config).holds


def test_relations_hold_on_small_corpus(small_corpus, config):
    for g in small_corpus:
        assert check_pI(g, config).holds
        assert check_qI(g, config).holds
        if g.is_connected():
            suite = check_tree_relations(g, config)
            assert suite.holds
            assert suite.checks[-1].relation == "prodY"


def test_tree_relations_skip_the_full_vertex_set(k4, config):
    suite = check_tree_relations(k4, config)
    subsets = [c.subset for c in suite.checks if c.relation == "pT"]
    assert len(subsets) == 14
    assert (0, 1, 2, 3) not in subsets


def test_relation_errors(tri):
    with pytest.raises(DisconnectedGraphError):
        check_tree_relations(Multigraph(3, ((0, 1),)), GalgConfig())
    with pytest.raises(BoundExceededError):
        check_pI(tri, GalgConfig(subset_max_vertices=2))


# --- degrees and multiplicities --------------------------------------------

def test_degree_of_vertex_generators(k4, double_edge):
    for g in (k4, double_edge):
        for i, z in enumerate(vertex_family(g, GeneratorKind.Y_TILDE)):
            assert degree_d(z) == g.degree(i)
    with pytest.raises(NotNilpotentError):
        degree_d(vertex_family(k4, GeneratorKind.Y)[0])


def test_multiplicity(tri, double_edge, path3):
    assert multiplicity(double_edge, 0, 1) == 2
    assert multiplicity(tri, 0, 2) == 1
    assert multiplicity(path3, 0, 2) == 0
    with pytest.raises(InvalidInputError):
        multiplicity(tri, 1, 1)


def test_incident_edge_count(tri, path3):
    tri_family = vertex_family(tri, GeneratorKind.Y_TILDE)
    path_family = vertex_family(path3, GeneratorKind.Y_TILDE)
    assert incident_edge_count(tri_family, [0, 1], [1, 2]) == 3
    assert incident_edge_count(path_family, [0], [5]) == 1
    assert incident_edge_count(path_family, [0, 2], [1, -1]) == 2
    with pytest.raises(InvalidInputError):
        incident_edge_count(tri_family, [0, 1], [3, 3])
    with pytest.raises(InvalidInputError):
        incident_edge_count(tri_family, [0, 1], [0, 1])
    with pytest.raises(InvalidInputError):
        incident_edge_count(tri_family, [0, 1], [1])


def test_inverse_sums_vanish(k4):
    assert inverse_sum(vertex_family(k4, GeneratorKind.Y_TILDE)).is_zero()
    f = UniPoly.of(0, 3, -2, 1)
    assert inverse_sum(vertex_family(k4, GeneratorKind.F, f=f), f).is_zero()


# --- reconstruction --------------------------------------------------------

def test_reconstruction_is_exact_without_relabeling(small_corpus):
    for g in small_corpus:
        if g.isolated_vertices():
            continue
        rebuilt = reconstruct(vertex_family(g, GeneratorKind.Y_TILDE))
        assert rebuilt.multiplicity_matrix() == g.multiplicity_matrix()


def test_reconstruction_after_relabeling(small_corpus, config):
    rng = random.Random(5)
    for g in small_corpus:
        if g.isolated_vertices():
            continue
        perm = list(range(g.n_vertices))
        rng.shuffle(perm)
        rebuilt = reconstruct(vertex_family(g.relabel(perm), GeneratorKind.Y_TILDE))
        assert are_isomorphic(rebuilt, g, config) is not None


def test_reconstruction_from_f_generators(k4, double_edge):
    f = UniPoly.of(0, 1, 1)
    for g in (k4, double_edge):
        rebuilt = reconstruct(vertex_family(g, GeneratorKind.F, f=f), f)
        assert rebuilt.multiplicity_matrix() == g.multiplicity_matrix()
    with pytest.raises(InvalidInputError):
        reconstruct(vertex_family(k4, GeneratorKind.F, f=UniPoly.identity()), UniPoly.identity())


def test_reconstruction_rejects_inconsistent_families(path3, tri):
    family = vertex_family(path3, GeneratorKind.Y_TILDE)
    with pytest.raises(InconsistentFamilyError):
        reconstruct(family[:2])
    with pytest.raises(InconsistentFamilyError):
        reconstruct([])
    with pytest.raises(InconsistentFamilyError):
        reconstruct(vertex_family(tri, GeneratorKind.Y))
    zero = Ambient(path3).zero()
    with pytest.raises(InconsistentFamilyError):
        reconstruct([family[0], family[1], zero])


def test_generator_family_report(tri):
    report = check_generator_family(vertex_family(tri, GeneratorKind.Y_TILDE))
    assert report.consistent
    assert report.degrees == [2, 2, 2]
    assert report.multiplicities == {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    assert not check_generator_family(vertex_family(tri, GeneratorKind.Y)).consistent


# --- validation suite ------------------------------------------------------

def _names(report):
    return {item.name: item for item in report.checks}


def test_run_checks_on_triangle(tri, config):
    report = run_checks(tri, config)
    assert report.passed
    assert [r.family for r in report.relations] == ["p", "q", "tree"]
    assert report.family.consistent
    assert _names(report)["tree dimension multiplies across bridges"].skipped


def test_run_checks_with_bridges(bridged_triangles, config):
    report = run_checks(bridged_triangles, config)
    assert report.passed
    assert _names(report)["tree dimension multiplies across bridge 6"].passed


def test_run_checks_on_disconnected_graph(config):
    report = run_checks(Multigraph(4, ((0, 1), (0, 1), (2, 3))), config)
    assert report.passed
    names = _names(report)
    assert names["tree relations vanish"].skipped
    assert names["tree algebra checks"].skipped
    assert report.relations[-1].skipped == "graph is disconnected"


def test_run_checks_skips_reconstruction_with_isolated_vertices(config):
    report = run_checks(Multigraph(3, ((0, 1),)), config)
    assert report.passed
    assert _names(report)["reconstruction round-trip"].skipped


@pytest.mark.slow
def test_every_small_graph_passes_validation(acceptance_corpus, config):
    failed = [g for g in acceptance_corpus if not run_checks(g, config).passed]
    assert not failed, f"{len(failed)} graphs failed, first {failed[0]}"
