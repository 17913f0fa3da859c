"""
Search for Tutte-equivalent graphs that the filtered series separates

Canonical multigraphs of a given size are grouped by Tutte polynomial
(forest mode) or by the Tutte polynomial of their Delta-subgraph (tree
mode). Inside a group every pair with equal graded and distinct filtered
series is reported together with the majorization relations among its
series.

Tree mode walks every vertex count up to the requested one at fixed
cyclomatic number |E| - |V|: adding a bridge adds one vertex and one edge
and leaves the Delta-subgraph unchanged, so Delta-equivalent graphs of
different sizes land in the same group.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from algebra_module.hilbert import algebra_series, majorize
from algebra_module.squarefree import AmbientKind
from graph_module.combinatorics import delta_subgraph
from graph_module.isomorphism import are_isomorphic, enumerate_multigraphs
from graph_module.multigraph import Multigraph
from graph_module.tutte import tutte
from utils.errors import BoundExceededError, InternalInconsistencyError, InvalidInputError
from utils.reports import ExpGenericEntry, GraphModel, SearchPair, SearchReport
from utils.schema import GalgConfig, HilbertSeries, Majorization

logger = logging.getLogger(__name__)

# Witness series of the two separating examples
FOREST_EXAMPLE_GRADED = HilbertSeries.of(1, 3, 6, 9, 8, 4, 1)
FOREST_EXAMPLE_FILTERED = {HilbertSeries.of(1, 4, 10, 14, 3), HilbertSeries.of(1, 4, 10, 15, 2)}
FOREST_EXAMPLE_GENERIC = {HilbertSeries.of(1, 4, 10, 15, 2), HilbertSeries.of(1, 4, 10, 16, 1)}
TREE_EXAMPLE_GRADED = HilbertSeries.of(1, 4, 4)
TREE_EXAMPLE_FILTERED = {HilbertSeries.of(1, 5, 3), HilbertSeries.of(1, 6, 2)}

_FLIPPED = {
    Majorization.LESS: Majorization.GREATER,
    Majorization.GREATER: Majorization.LESS,
    Majorization.EQUAL: Majorization.EQUAL,
    Majorization.INCOMPARABLE: Majorization.INCOMPARABLE,
}


@dataclass
class GraphSeries:
    """Everything the search needs to know about one canonical graph."""
    graph: Multigraph
    key: str
    graded: HilbertSeries
    filtered: HilbertSeries
    generic: Optional[HilbertSeries] = None
    consensus: Optional[bool] = None


@dataclass
class _Task:
    graph: Multigraph
    mode: str
    generic: bool
    seeds: Sequence[int]
    config: GalgConfig


def _analyze(task: _Task) -> GraphSeries:
    g, config = task.graph, task.config
    if task.mode == "forest":
        ambient = AmbientKind.FULL
        key = str(tutte(g))
    else:
        ambient = AmbientKind.TREE
        key = str(tutte(delta_subgraph(g).graph))
    graded = algebra_series(g, "C", ambient, config=config).series
    filtered = algebra_series(g, "K", ambient, config=config).series
    result = GraphSeries(graph=g, key=key, graded=graded, filtered=filtered)
    if task.generic:
        generic = algebra_series(g, "generic", ambient, seeds=task.seeds, config=config)
        result.generic, result.consensus = generic.series, generic.consensus
    return result


def candidate_graphs(vertices: int, edges: int, mode: str) -> List[Multigraph]:
    """Canonical graphs to examine, in deterministic order."""
    if mode == "forest":
        return enumerate_multigraphs(vertices, edges)
    graphs = []
    for n in range(1, vertices + 1):
        m = edges - (vertices - n)
        if m >= 0:
            graphs.extend(enumerate_multigraphs(n, m, connected=True))
    return graphs


def _relations(named: Dict[str, HilbertSeries]) -> Dict[str, str]:
    relations = {}
    for (left, a), (right, b) in combinations(named.items(), 2):
        relation = majorize(a, b)
        if majorize(b, a) is not _FLIPPED[relation]:
            raise InternalInconsistencyError(f"majorization of {left} and {right} is not antisymmetric")
        relations[f"{left} vs {right}"] = relation.value
    return relations


def _matches_example(mode: str, graded: HilbertSeries, a: GraphSeries, b: GraphSeries) -> bool:
    filtered = {a.filtered, b.filtered}
    if mode == "forest":
        if a.generic is not None and b.generic is not None:
            if {a.generic, b.generic} != FOREST_EXAMPLE_GENERIC:
                return False
        return graded == FOREST_EXAMPLE_GRADED and filtered == FOREST_EXAMPLE_FILTERED
    return graded == TREE_EXAMPLE_GRADED and filtered == TREE_EXAMPLE_FILTERED


def _pair(mode: str, a: GraphSeries, b: GraphSeries, config: GalgConfig) -> Optional[SearchPair]:
    if a.graded != b.graded or a.filtered == b.filtered:
        return None
    if are_isomorphic(a.graph, b.graph, config) is not None:
        raise InternalInconsistencyError(f"isomorphic graphs {a.graph} and {b.graph} in the enumeration")
    named = {"graded": a.graded, "filtered_a": a.filtered, "filtered_b": b.filtered}
    if a.generic is not None and b.generic is not None:
        named.update(generic_a=a.generic, generic_b=b.generic)
    return SearchPair(
        graph_a=GraphModel.from_graph(a.graph),
        graph_b=GraphModel.from_graph(b.graph),
        tutte=a.key,
        graded=list(a.graded.coefficients),
        filtered_a=list(a.filtered.coefficients),
        filtered_b=list(b.filtered.coefficients),
        generic_a=list(a.generic.coefficients) if a.generic else None,
        generic_b=list(b.generic.coefficients) if b.generic else None,
        relations=_relations(named),
        matches_example=_matches_example(mode, a.graded, a, b),
    )


def search(vertices: int, edges: int, mode: str = "forest", generic: bool = False,
           seeds: Optional[Sequence[int]] = None, workers: int = 1, quiet: bool = False,
           config: Optional[GalgConfig] = None) -> SearchReport:
    """Report Tutte-equivalent pairs with equal graded and distinct filtered series."""
    config = config or GalgConfig.from_env()
    if mode not in ("forest", "tree"):
        raise InvalidInputError(f"unknown search mode {mode!r}")
    if vertices < 1 or edges < 0:
        raise InvalidInputError("need at least one vertex and a non-negative edge count")
    if vertices > config.search_max_vertices:
        raise BoundExceededError("search vertex bound", config.search_max_vertices, vertices)
    if edges > config.search_max_edges:
        raise BoundExceededError("search edge bound", config.search_max_edges, edges)
    seeds = list(seeds) if seeds is not None else list(range(config.generic_seeds))

    graphs = candidate_graphs(vertices, edges, mode)
    logger.info(f"🔍 Searching {len(graphs)} canonical graphs (V={vertices}, E={edges}, mode={mode})")
    tasks = [_Task(g, mode, generic, seeds, config) for g in graphs]
    progress = dict(total=len(tasks), desc="series", disable=quiet)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(tqdm(executor.map(_analyze, tasks, chunksize=8), **progress))
    else:
        results = [_analyze(task) for task in tqdm(tasks, **progress)]

    groups: Dict[str, List[GraphSeries]] = {}
    for result in results:
        groups.setdefault(result.key, []).append(result)

    pairs = []
    for group in groups.values():
        for a, b in combinations(group, 2):
            pair = _pair(mode, a, b, config)
            if pair is not None:
                pairs.append(pair)

    example_found = any(p.matches_example for p in pairs)
    if not pairs:
        logger.warning(f"⚠️ No separated pairs at V={vertices}, E={edges} ({mode} mode)")
    elif not example_found:
        logger.warning(f"⚠️ {len(pairs)} separated pairs, but none realizes the example series")
    else:
        logger.info(f"✅ Found {len(pairs)} separated pairs, example series realized")

    exp_generic = None
    if generic:
        exp_generic = [ExpGenericEntry(graph=GraphModel.from_graph(r.graph),
                                       filtered=list(r.filtered.coefficients),
                                       generic=list(r.generic.coefficients),
                                       consensus=bool(r.consensus),
                                       exp_is_generic=r.filtered == r.generic)
                       for r in results]

    return SearchReport(vertices=vertices, edges=edges, mode=mode, graphs=len(graphs),
                        groups=len(groups), pairs=pairs, example_found=example_found,
                        exp_generic=exp_generic)
