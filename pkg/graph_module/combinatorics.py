"""
Combinatorial oracles on multigraphs

Cuts, spanning forests and trees, external activity, bridges, slim subsets
and the Delta-subgraph. These are the independent counts the algebra side is
checked against.
"""

import logging
from collections import Counter, deque
from typing import Dict, Iterator, List, NamedTuple, Optional

import networkx as nx
import numpy as np
import sympy

from graph_module.multigraph import (
    EdgeSubset, Multigraph, VertexSubset, members, popcount,
)
from utils.errors import (
    BoundExceededError, DisconnectedGraphError, InvalidInputError, NotAForestError,
)
from utils.schema import GalgConfig, HilbertSeries

logger = logging.getLogger(__name__)


def cut_size(g: Multigraph, subset: VertexSubset) -> int:
    """D_I: the number of edges with exactly one endpoint in I."""
    if subset == 0:
        raise InvalidInputError("empty vertex subset")
    if subset < 0 or subset >> g.n_vertices:
        raise InvalidInputError(f"vertex subset {bin(subset)} is not inside 0..{g.n_vertices - 1}")
    return sum(1 for u, v in g.edges if (subset >> u & 1) != (subset >> v & 1))


def is_forest(g: Multigraph, forest: EdgeSubset) -> bool:
    """True iff the edge subset is acyclic; parallel copies form a 2-cycle."""
    dsu = g.disjoint_set(0)
    for _, (u, v) in g.edges_of(forest):
        if not dsu.union(u, v):
            return False
    return True


def _forest_path(g: Multigraph, forest: EdgeSubset, source: int, target: int) -> Optional[List[int]]:
    """Edge indices on the unique forest path source -> target, or None."""
    adjacency: Dict[int, List[tuple]] = {}
    for i, (u, v) in g.edges_of(forest):
        adjacency.setdefault(u, []).append((v, i))
        adjacency.setdefault(v, []).append((u, i))
    parent_edge = {source: None}
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        if vertex == target:
            break
        for nxt, index in adjacency.get(vertex, ()):
            if nxt not in parent_edge:
                parent_edge[nxt] = (vertex, index)
                queue.append(nxt)
    if target not in parent_edge:
        return None
    path = []
    vertex = target
    while parent_edge[vertex] is not None:
        vertex, index = parent_edge[vertex]
        path.append(index)
    return path


def external_activity(g: Multigraph, forest: EdgeSubset) -> int:
    """Number of edges e outside F that are minimal on the cycle they close with F.

    The linear order is the edge-list order of g.
    """
    if not is_forest(g, forest):
        raise NotAForestError(f"edge subset {members(forest)} contains a cycle")
    active = 0
    for e, (u, v) in enumerate(g.edges):
        if forest >> e & 1:
            continue
        path = _forest_path(g, forest, u, v)
        if path is not None and all(index > e for index in path):
            active += 1
    return active


def _check_enumeration_bound(g: Multigraph, config: Optional[GalgConfig]) -> None:
    bound = (config or GalgConfig.from_env()).enumeration_bound
    if g.n_edges > bound:
        raise BoundExceededError("enumeration bound (edges)", bound, g.n_edges)


def enumerate_forests(g: Multigraph, config: Optional[GalgConfig] = None) -> Iterator[EdgeSubset]:
    """All acyclic edge subsets, by include/exclude backtracking over the edge order."""
    _check_enumeration_bound(g, config)
    edges = g.edges

    def grow(index: int, mask: int, labels: tuple) -> Iterator[int]:
        if index == len(edges):
            yield mask
            return
        yield from grow(index + 1, mask, labels)
        u, v = edges[index]
        if labels[u] != labels[v]:
            old, new = labels[v], labels[u]
            merged = tuple(new if label == old else label for label in labels)
            yield from grow(index + 1, mask | 1 << index, merged)

    yield from grow(0, 0, tuple(range(g.n_vertices)))


def enumerate_trees(g: Multigraph, config: Optional[GalgConfig] = None) -> Iterator[EdgeSubset]:
    """Spanning trees: forests with one edge fewer than there are vertices."""
    size = g.n_vertices - 1
    for forest in enumerate_forests(g, config):
        if popcount(forest) == size:
            yield forest


def count_trees_matrixtree(g: Multigraph) -> int:
    """Number of spanning trees as a principal minor of the Laplacian (exact)."""
    if not g.is_connected():
        return 0
    if g.n_vertices == 1:
        return 1
    laplacian = np.zeros((g.n_vertices, g.n_vertices), dtype=np.int64)
    for u, v in g.edges:
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    minor = sympy.Matrix(laplacian[1:, 1:].tolist())
    return int(minor.det(method="bareiss"))


def bridges(g: Multigraph) -> EdgeSubset:
    """Edges whose removal disconnects their endpoints.

    networkx skips a vertex pair carrying parallel edges, so each reported
    bridge owns exactly one edge key, which is its edge index.
    """
    graph = g.to_networkx()
    result = 0
    for u, v in nx.bridges(graph):
        (index,) = graph[u][v]
        result |= 1 << index
    return result


class DeltaSubgraph(NamedTuple):
    graph: Multigraph
    vertex_map: Dict[int, int]  # vertex of g -> vertex of the Delta-subgraph
    edge_indices: List[int]  # edges of g that survive, in order


def delta_subgraph(g: Multigraph) -> DeltaSubgraph:
    """Subgraph on the non-bridge edges and their endpoints.

    When every edge is a bridge the result is the one-vertex edgeless graph
    with an empty vertex map.
    """
    keep = g.all_edges_mask & ~bridges(g)
    if keep == 0:
        return DeltaSubgraph(Multigraph(1, ()), {}, [])
    graph, vertex_map = g.induced_on_edges(keep)
    return DeltaSubgraph(graph, vertex_map, members(keep))


def require_connected(g: Multigraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError()


def is_slim(g: Multigraph, subgraph: EdgeSubset) -> bool:
    """True iff the spanning subgraph on E minus H is connected."""
    require_connected(g)
    return g.disjoint_set(g.all_edges_mask & ~subgraph).components == 1


def slim_subsets(g: Multigraph, config: Optional[GalgConfig] = None) -> Iterator[EdgeSubset]:
    """All slim edge subsets; their complements are the connected spanning subgraphs."""
    require_connected(g)
    _check_enumeration_bound(g, config)
    full = g.all_edges_mask
    for mask in range(full + 1):
        if g.disjoint_set(full & ~mask).components == 1:
            yield mask


def forest_activity_series(g: Multigraph, config: Optional[GalgConfig] = None) -> HilbertSeries:
    """Counts #{F : EA(F) = |E| - |F| - k} indexed by k."""
    buckets: Counter = Counter()
    for forest in enumerate_forests(g, config):
        k = g.n_edges - popcount(forest) - external_activity(g, forest)
        buckets[k] += 1
    return HilbertSeries(tuple(buckets[k] for k in range(max(buckets) + 1)))


def tree_activity_series(g: Multigraph, config: Optional[GalgConfig] = None) -> HilbertSeries:
    """Counts #{T : EA(T) = |E| - n - k} indexed by k, n + 1 being the vertex count."""
    require_connected(g)
    n = g.n_vertices - 1
    buckets: Counter = Counter()
    for tree in enumerate_trees(g, config):
        buckets[g.n_edges - n - external_activity(g, tree)] += 1
    return HilbertSeries(tuple(buckets[k] for k in range(max(buckets) + 1)))


def activity_histogram(g: Multigraph, config: Optional[GalgConfig] = None) -> Dict[int, Counter]:
    """Forest size -> multiset of external activities (order-independent aggregate)."""
    histogram: Dict[int, Counter] = {}
    for forest in enumerate_forests(g, config):
        histogram.setdefault(popcount(forest), Counter())[external_activity(g, forest)] += 1
    return histogram
