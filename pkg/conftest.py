"""
Shared fixtures: named graphs, a default config and enumerated corpora.
"""

from typing import List

import pytest

from graph_module.isomorphism import enumerate_multigraphs
from graph_module.multigraph import Multigraph, complete_graph, path_graph, triangle
from utils.schema import GalgConfig


def build_corpus(max_vertices: int, max_edges: int, connected: bool = False) -> List[Multigraph]:
    """Every loopless multigraph up to isomorphism within the given size."""
    graphs = []
    for n in range(1, max_vertices + 1):
        for m in range(max_edges + 1):
            graphs.extend(enumerate_multigraphs(n, m, connected=connected))
    return graphs


@pytest.fixture
def config() -> GalgConfig:
    return GalgConfig()


@pytest.fixture
def tri() -> Multigraph:
    return triangle()


@pytest.fixture
def single_edge() -> Multigraph:
    return Multigraph(2, ((0, 1),))


@pytest.fixture
def double_edge() -> Multigraph:
    return Multigraph(2, ((0, 1), (0, 1)))


@pytest.fixture
def path3() -> Multigraph:
    return path_graph(3)


@pytest.fixture
def k4() -> Multigraph:
    return complete_graph(4)


@pytest.fixture
def bowtie() -> Multigraph:
    """Two triangles sharing vertex 0."""
    return Multigraph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)))


@pytest.fixture
def bridged_triangles() -> Multigraph:
    """Two triangles joined by the bridge 2-3 (edge 6)."""
    return Multigraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)))


@pytest.fixture(scope="session")
def small_corpus() -> List[Multigraph]:
    return build_corpus(4, 4)


@pytest.fixture(scope="session")
def acceptance_corpus() -> List[Multigraph]:
    return build_corpus(5, 7)
