"""
Relation checks for the four presentations

The defining relations are evaluated on the concrete generators inside the
edge algebra (or its tree quotient) for every nonempty vertex subset I:

    p_I  = (sum_{i in I} X_i)^(D_I + 1)
    q_I  = (prod_{i in I} Y_i - 1)^(D_I + 1)
    p_I^T, q_I^T with exponent D_I for proper I, and prod_i Y_i^T = 1.

Each check also probes one power below the exponent to see whether the
exponent is sharp.
"""

import logging
from typing import Callable, List, Optional

from algebra_module.generators import GeneratorKind, vertex_family
from algebra_module.hilbert import check_rank_bound
from algebra_module.squarefree import AlgebraElement, Ambient, AmbientKind, mul, product_of
from graph_module.combinatorics import cut_size, require_connected
from graph_module.multigraph import Multigraph, members
from utils.errors import BoundExceededError
from utils.schema import GalgConfig, RelationCheck, RelationSuite

logger = logging.getLogger(__name__)


def _check_subset_bound(g: Multigraph, config: GalgConfig) -> None:
    if g.n_vertices > config.subset_max_vertices:
        raise BoundExceededError("subset enumeration bound (vertices)", config.subset_max_vertices,
                                 g.n_vertices)


def _evaluate(base: AlgebraElement, exponent: int, subset: int, relation: str) -> RelationCheck:
    """Whether base^exponent vanishes, and whether base^(exponent - 1) does not."""
    below = base ** max(exponent - 1, 0)
    power = mul(below, base) if exponent else below
    sharp = bool(below) if exponent else None
    return RelationCheck(subset=tuple(members(subset)), exponent=exponent,
                         vanishes=power.is_zero(), sharp=sharp, relation=relation)


def _run(g: Multigraph, family: str, relation: str, gens: List[AlgebraElement],
         combine: Callable[[List[AlgebraElement]], AlgebraElement],
         exponent_of: Callable[[int], int], proper_only: bool) -> List[RelationCheck]:
    checks = []
    full = g.all_vertices_mask
    for subset in range(1, full + 1):
        if proper_only and subset == full:
            continue
        base = combine([gens[i] for i in members(subset)])
        checks.append(_evaluate(base, exponent_of(cut_size(g, subset)), subset, relation))
    failures = [c for c in checks if not c.vanishes]
    if failures:
        logger.warning(f"❌ {len(failures)} {family} relations fail, first at I={list(failures[0].subset)}")
    else:
        logger.debug(f"✅ all {len(checks)} {family} relations vanish")
    return checks


def _sum(ambient: Ambient) -> Callable[[List[AlgebraElement]], AlgebraElement]:
    def combine(elements: List[AlgebraElement]) -> AlgebraElement:
        total = ambient.zero()
        for element in elements:
            total = total + element
        return total
    return combine


def _product_minus_one(ambient: Ambient) -> Callable[[List[AlgebraElement]], AlgebraElement]:
    def combine(elements: List[AlgebraElement]) -> AlgebraElement:
        return product_of(elements, ambient) - 1
    return combine


def check_pI(g: Multigraph, config: Optional[GalgConfig] = None) -> RelationSuite:
    """(sum_{i in I} X_i)^(D_I + 1) = 0 for every nonempty I, with sharpness at D_I."""
    config = config or GalgConfig.from_env()
    _check_subset_bound(g, config)
    check_rank_bound(g, config)
    ambient = Ambient(g, AmbientKind.FULL)
    gens = vertex_family(g, GeneratorKind.X, ambient)
    checks = _run(g, "p", "p", gens, _sum(ambient), lambda d: d + 1, proper_only=False)
    return RelationSuite(family="p", checks=checks)


def check_qI(g: Multigraph, config: Optional[GalgConfig] = None) -> RelationSuite:
    """(prod_{i in I} Y_i - 1)^(D_I + 1) = 0 for every nonempty I."""
    config = config or GalgConfig.from_env()
    _check_subset_bound(g, config)
    check_rank_bound(g, config)
    ambient = Ambient(g, AmbientKind.FULL)
    gens = vertex_family(g, GeneratorKind.Y, ambient)
    checks = _run(g, "q", "q", gens, _product_minus_one(ambient), lambda d: d + 1, proper_only=False)
    return RelationSuite(family="q", checks=checks)


def check_tree_relations(g: Multigraph, config: Optional[GalgConfig] = None) -> RelationSuite:
    """Tree-quotient relations: exponent D_I for proper I, plus prod_i Y_i^T = 1.

    Sharpness in the tree quotient is reported as observed; it is not
    expected to hold for every subset.
    """
    config = config or GalgConfig.from_env()
    require_connected(g)
    _check_subset_bound(g, config)
    check_rank_bound(g, config)
    ambient = Ambient(g, AmbientKind.TREE)
    xs = vertex_family(g, GeneratorKind.X, ambient)
    ys = vertex_family(g, GeneratorKind.Y, ambient)

    checks = _run(g, "tree p", "pT", xs, _sum(ambient), lambda d: d, proper_only=True)
    checks += _run(g, "tree q", "qT", ys, _product_minus_one(ambient), lambda d: d, proper_only=True)
    total = product_of(ys, ambient) - 1
    checks.append(RelationCheck(subset=tuple(range(g.n_vertices)), exponent=1,
                                vanishes=total.is_zero(), relation="prodY"))
    return RelationSuite(family="tree", checks=checks)
