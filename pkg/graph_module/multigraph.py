"""
Multigraph model

A loopless labeled multigraph on vertices 0..N-1 with an ordered edge list,
plus the bitmask helpers used for vertex and edge subsets everywhere else.

Graph text format:

    # comment
    vertices 3
    0 1
    1 2
    0 1        <- repeated line = parallel edge

Edge order is line order; it is the linear order used for external activity.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

import networkx as nx

from utils.errors import GraphParseError, InvalidInputError
from utils.schema import HARD_EDGE_LIMIT

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
# VertexSubset and EdgeSubset are plain int bitmasks.
VertexSubset = int
EdgeSubset = int


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> List[int]:
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class DisjointSet:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False if they were already merged."""
        xroot, yroot = self.find(x), self.find(y)
        if xroot == yroot:
            return False
        if self.rank[xroot] < self.rank[yroot]:
            xroot, yroot = yroot, xroot
        self.parent[yroot] = xroot
        if self.rank[xroot] == self.rank[yroot]:
            self.rank[xroot] += 1
        self.components -= 1
        return True

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; the edge order is part of the value."""
    n_vertices: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise InvalidInputError("a graph needs at least one vertex")
        normalized = []
        for index, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if u == v:
                raise InvalidInputError(f"edge {index} is a loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InvalidInputError(
                    f"edge {index} = ({u}, {v}) uses a vertex outside 0..{self.n_vertices - 1}")
            normalized.append((min(u, v), max(u, v)))
        if len(normalized) > HARD_EDGE_LIMIT:
            raise InvalidInputError(f"at most {HARD_EDGE_LIMIT} edges are supported")
        object.__setattr__(self, "edges", tuple(normalized))

    # --- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Edge]) -> "Multigraph":
        return cls(n_vertices, tuple(tuple(e) for e in edges))

    @classmethod
    def parse(cls, text: str) -> "Multigraph":
        n_vertices = None
        edges: List[Edge] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if n_vertices is None:
                if len(tokens) != 2 or tokens[0] != "vertices":
                    raise GraphParseError("expected 'vertices N' header", line_number)
                try:
                    n_vertices = int(tokens[1])
                except ValueError:
                    raise GraphParseError(f"vertex count {tokens[1]!r} is not an integer", line_number)
                if n_vertices < 1:
                    raise GraphParseError("vertex count must be positive", line_number)
                continue
            if len(tokens) != 2:
                raise GraphParseError(f"expected 'u v', got {line!r}", line_number)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise GraphParseError(f"non-integer vertex in {line!r}", line_number)
            if u == v:
                raise GraphParseError(f"loop at vertex {u} (graphs must be loopless)", line_number)
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise GraphParseError(f"vertex out of range 0..{n_vertices - 1} in {line!r}", line_number)
            edges.append((u, v))
        if n_vertices is None:
            raise GraphParseError("missing 'vertices N' header")
        if len(edges) > HARD_EDGE_LIMIT:
            raise GraphParseError(f"at most {HARD_EDGE_LIMIT} edges are supported")
        return cls(n_vertices, tuple(edges))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "Multigraph":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def to_text(self) -> str:
        lines = [f"vertices {self.n_vertices}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    # --- basic queries ----------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def all_edges_mask(self) -> EdgeSubset:
        return (1 << len(self.edges)) - 1

    @property
    def all_vertices_mask(self) -> VertexSubset:
        return (1 << self.n_vertices) - 1

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> List[int]:
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incident_mask(self, v: int) -> EdgeSubset:
        return mask_of(i for i, e in enumerate(self.edges) if v in e)

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return sum(1 for e in self.edges if e == key)

    def multiplicity_matrix(self) -> Dict[Edge, int]:
        counts: Dict[Edge, int] = {}
        for e in self.edges:
            counts[e] = counts.get(e, 0) + 1
        return counts

    def isolated_vertices(self) -> List[int]:
        return [v for v, d in enumerate(self.degrees()) if d == 0]

    def edges_of(self, mask: EdgeSubset) -> Iterator[Tuple[int, Edge]]:
        for i in members(mask):
            yield i, self.edges[i]

    # --- connectivity -----------------------------------------------------

    def disjoint_set(self, mask: EdgeSubset = -1) -> DisjointSet:
        """Union-find over all vertices using the edges in `mask`."""
        dsu = DisjointSet(self.n_vertices)
        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1:
                dsu.union(u, v)
        return dsu

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def components(self, mask: EdgeSubset = -1) -> List[List[int]]:
        """Vertex sets of the connected components of the spanning subgraph on `mask`."""
        return sorted(sorted(part) for part in nx.connected_components(self.to_networkx(mask)))

    # --- derived graphs ---------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Graph with vertex v renamed to perm[v]; edge order kept."""
        if sorted(perm) != list(range(self.n_vertices)):
            raise InvalidInputError("relabeling must be a permutation of the vertices")
        return Multigraph(self.n_vertices, tuple((perm[u], perm[v]) for u, v in self.edges))

    def permute_edges(self, order: Sequence[int]) -> "Multigraph":
        """Graph whose i-th edge is the order[i]-th edge of this one."""
        if sorted(order) != list(range(self.n_edges)):
            raise InvalidInputError("edge order must be a permutation of the edge indices")
        return Multigraph(self.n_vertices, tuple(self.edges[i] for i in order))

    def induced_on_edges(self, mask: EdgeSubset) -> Tuple["Multigraph", Dict[int, int]]:
        """Subgraph on the edges of `mask` and their endpoints, relabeled compactly.

        Returns the subgraph and the map old vertex -> new vertex.
        """
        used = sorted({v for _, e in self.edges_of(mask) for v in e})
        relabel = {old: new for new, old in enumerate(used)}
        edges = tuple((relabel[u], relabel[v]) for _, (u, v) in self.edges_of(mask))
        return Multigraph(max(len(used), 1), edges), relabel

    def induced_on_vertices(self, vertices: Sequence[int]) -> Tuple["Multigraph", Dict[int, int]]:
        keep = sorted(vertices)
        relabel = {old: new for new, old in enumerate(keep)}
        edges = tuple((relabel[u], relabel[v]) for u, v in self.edges
                      if u in relabel and v in relabel)
        return Multigraph(len(keep), edges), relabel

    def to_networkx(self, mask: EdgeSubset = -1) -> nx.MultiGraph:
        """Spanning subgraph on the edges of `mask`; edge keys are edge indices."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n_vertices))
        for index, (u, v) in self.edges_of(mask & self.all_edges_mask):
            graph.add_edge(u, v, key=index, index=index)
        return graph

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Multigraph(V={self.n_vertices}, E=[{body}])"


# Small named graphs used by tests, docs and the CLI demo.
def triangle() -> Multigraph:
    return Multigraph(3, ((0, 1), (0, 2), (1, 2)))


def path_graph(n_vertices: int) -> Multigraph:
    return Multigraph(n_vertices, tuple((i, i + 1) for i in range(n_vertices - 1)))


def complete_graph(n_vertices: int) -> Multigraph:
    return Multigraph(n_vertices, tuple((i, j) for i in range(n_vertices)
                                        for j in range(i + 1, n_vertices)))
