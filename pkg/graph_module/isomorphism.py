"""
Isomorphism and canonical enumeration for small multigraphs

Brute force over vertex permutations, pruned by degree and by the
multiplicities to already-placed vertices. Intended for at most ~10 vertices.
"""

import logging
from itertools import combinations, combinations_with_replacement, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from graph_module.multigraph import Multigraph
from utils.errors import BoundExceededError
from utils.schema import GalgConfig

logger = logging.getLogger(__name__)


def _multiplicity_table(g: Multigraph) -> List[List[int]]:
    table = [[0] * g.n_vertices for _ in range(g.n_vertices)]
    for u, v in g.edges:
        table[u][v] += 1
        table[v][u] += 1
    return table


def are_isomorphic(g1: Multigraph, g2: Multigraph,
                   config: Optional[GalgConfig] = None) -> Optional[List[int]]:
    """A multiplicity-preserving bijection phi (g1 vertex v -> g2 vertex phi[v]), or None."""
    bound = (config or GalgConfig.from_env()).iso_max_vertices
    largest = max(g1.n_vertices, g2.n_vertices)
    if largest > bound:
        raise BoundExceededError("isomorphism vertex bound", bound, largest)

    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return None
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return None
    if sorted(g1.multiplicity_matrix().values()) != sorted(g2.multiplicity_matrix().values()):
        return None

    m1, m2 = _multiplicity_table(g1), _multiplicity_table(g2)
    n = g1.n_vertices
    # place high-degree vertices first: they constrain the most
    order = sorted(range(n), key=lambda v: -deg1[v])
    mapping: Dict[int, int] = {}
    used = [False] * n

    def extend(position: int) -> bool:
        if position == n:
            return True
        v = order[position]
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            if any(m1[v][p] != m2[w][mapping[p]] for p in mapping):
                continue
            mapping[v], used[w] = w, True
            if extend(position + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    if not extend(0):
        return None
    return [mapping[v] for v in range(n)]


def _pairs(n_vertices: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n_vertices), 2))


def _is_canonical(vector: Tuple[int, ...], pairs: Sequence[Tuple[int, int]],
                  n_vertices: int) -> bool:
    table = [[0] * n_vertices for _ in range(n_vertices)]
    for (u, v), m in zip(pairs, vector):
        table[u][v] = table[v][u] = m
    for perm in permutations(range(n_vertices)):
        for (u, v), m in zip(pairs, vector):
            image = table[perm[u]][perm[v]]
            if image != m:
                if image < m:
                    return False
                break
    return True


def canonical_form(g: Multigraph) -> Tuple[int, ...]:
    """Lexicographically minimal multiplicity vector over all vertex permutations."""
    table = _multiplicity_table(g)
    pairs = _pairs(g.n_vertices)
    return min(tuple(table[p[u]][p[v]] for u, v in pairs)
               for p in permutations(range(g.n_vertices)))


def graph_from_vector(n_vertices: int, vector: Sequence[int]) -> Multigraph:
    edges = []
    for (u, v), m in zip(_pairs(n_vertices), vector):
        edges.extend([(u, v)] * m)
    return Multigraph(n_vertices, tuple(edges))


def enumerate_multigraphs(n_vertices: int, n_edges: int, connected: bool = False) -> List[Multigraph]:
    """One representative per isomorphism class, in canonical order.

    Distributes the edges over the vertex pairs and keeps the distributions
    that are their own canonical form.
    """
    pairs = _pairs(n_vertices)
    if not pairs:
        return [Multigraph(n_vertices, ())] if n_edges == 0 else []
    vectors = set()
    for choice in combinations_with_replacement(range(len(pairs)), n_edges):
        vector = [0] * len(pairs)
        for index in choice:
            vector[index] += 1
        vectors.add(tuple(vector))
    graphs = []
    for vector in sorted(vectors):
        graph = graph_from_vector(n_vertices, vector)
        # connectivity is the cheaper filter
        if connected and not graph.is_connected():
            continue
        if _is_canonical(vector, pairs, n_vertices):
            graphs.append(graph)
    logger.debug(f"enumerated {len(graphs)} classes with V={n_vertices}, E={n_edges}")
    return graphs
