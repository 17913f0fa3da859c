"""
Report builders shared by the CLI and the HTTP surface
"""

import logging
import random
from typing import Optional, Sequence, Tuple

from algebra_module.generators import GeneratorKind, vertex_family
from algebra_module.hilbert import algebra_series
from algebra_module.squarefree import AmbientKind
from algebra_module.unipoly import UniPoly
from graph_module.combinatorics import count_trees_matrixtree, enumerate_forests
from graph_module.isomorphism import are_isomorphic
from graph_module.multigraph import Multigraph
from graph_module.tutte import tutte
from theory_module.invariants import check_generator_family, reconstruct
from utils.errors import InvalidInputError
from utils.reports import FamilyReport, GraphModel, ReconstructReport, SeriesReport, TutteReport
from utils.schema import GalgConfig

logger = logging.getLogger(__name__)

ALGEBRAS = ("C", "K", "CT", "KT", "f:<file>", "fT:<file>", "generic", "genericT")


def parse_algebra(name: str) -> Tuple[str, AmbientKind, Optional[str]]:
    """'KT' -> ('K', tree, None); 'f:poly.txt' -> ('f', full, 'poly.txt'); bare 'f' has no file."""
    if name in ("f", "fT") or name.startswith(("f:", "fT:")):
        head, _, path = name.partition(":")
        return "f", AmbientKind.TREE if head == "fT" else AmbientKind.FULL, path or None
    table = {
        "C": ("C", AmbientKind.FULL), "K": ("K", AmbientKind.FULL),
        "CT": ("C", AmbientKind.TREE), "KT": ("K", AmbientKind.TREE),
        "generic": ("generic", AmbientKind.FULL), "genericT": ("generic", AmbientKind.TREE),
    }
    if name not in table:
        raise InvalidInputError(f"unknown algebra {name!r}; expected one of {', '.join(ALGEBRAS)}")
    kind, ambient = table[name]
    return kind, ambient, None


def series_report(g: Multigraph, algebra: str, f: Optional[UniPoly] = None,
                  seeds: Optional[Sequence[int]] = None,
                  config: Optional[GalgConfig] = None) -> SeriesReport:
    """Series of the named algebra with the matching combinatorial count alongside.

    For 'f:<file>' algebras the polynomial is read from the file unless f is given.
    """
    config = config or GalgConfig.from_env()
    kind, ambient, path = parse_algebra(algebra)
    if kind == "f" and f is None:
        if path is None:
            raise InvalidInputError(f"algebra {algebra!r} needs a polynomial file")
        f = UniPoly.from_file(path)
    result = algebra_series(g, kind, ambient, f=f, seeds=seeds, config=config)
    report = SeriesReport(
        algebra=algebra,
        series=list(result.series.coefficients),
        total=result.series.total,
        plateau_k=result.plateau_k,
        dims=result.dims,
        consensus=result.consensus,
        pretty=str(result.series),
    )
    if ambient is AmbientKind.TREE:
        report.trees = count_trees_matrixtree(g)
    else:
        report.forests = tutte(g).forest_count
    logger.info(f"✅ {algebra}: {result.series} (total {report.total})")
    return report


def tutte_report(g: Multigraph, config: Optional[GalgConfig] = None) -> TutteReport:
    config = config or GalgConfig.from_env()
    poly = tutte(g)
    enumerated = None
    if g.n_edges <= config.enumeration_bound:
        enumerated = sum(1 for _ in enumerate_forests(g, config))
    return TutteReport(
        polynomial=str(poly),
        coefficients=[(i, j, c) for (i, j), c in poly.coefficients],
        forests=poly.forest_count,
        trees=poly.tree_count,
        matrix_tree=count_trees_matrixtree(g),
        enumerated_forests=enumerated,
    )


def reconstruct_report(g: Multigraph, relabel_seed: Optional[int] = None,
                       config: Optional[GalgConfig] = None) -> ReconstructReport:
    """Shuffle the vertex labels, rebuild the graph from its Y - 1 family and compare."""
    config = config or GalgConfig.from_env()
    perm = list(range(g.n_vertices))
    if relabel_seed is not None:
        random.Random(relabel_seed).shuffle(perm)
    family = vertex_family(g.relabel(perm), GeneratorKind.Y_TILDE)
    rebuilt = reconstruct(family)
    mapping = are_isomorphic(rebuilt, g, config)
    if mapping is None:
        logger.error(f"❌ Reconstructed {rebuilt} is not isomorphic to {g}")
    return ReconstructReport(
        original=GraphModel.from_graph(g),
        relabeling=perm,
        reconstructed=GraphModel.from_graph(rebuilt),
        isomorphic=mapping is not None,
        mapping=mapping,
        family=FamilyReport.from_family(check_generator_family(family)),
    )
