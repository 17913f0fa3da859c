"""
Reconstruction invariants

The degree d(R) of a nilpotent R of K_G is the number of edges whose phi_e
appears in R's degree-one part. From the degrees of the vertex generators
Z_i = Y_i - 1 and of their pairwise sums one reads off vertex degrees and
edge multiplicities, and so rebuilds the graph.

With f having nonzero linear and quadratic terms the same bookkeeping works
for Z_i = f(X_i); the inverse-sum validation then uses the compositional
inverse of f instead of ln(1 + z).
"""

import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from algebra_module.generators import apply_series, gen_Y_tilde, log1p_element
from algebra_module.squarefree import AlgebraElement, Ambient, linear_combination
from algebra_module.unipoly import UniPoly
from graph_module.multigraph import Multigraph, popcount
from utils.errors import (
    InconsistentFamilyError, InternalInconsistencyError, InvalidInputError, NotNilpotentError,
)
from utils.schema import GeneratorFamilyReport

logger = logging.getLogger(__name__)


def degree_d(r: AlgebraElement) -> int:
    """Number of edges e with phi_e in the degree-one part of a nilpotent R."""
    if r.constant_term:
        raise NotNilpotentError()
    return popcount(r.support_degree1())


def pair_multiplicity(z_i: AlgebraElement, z_j: AlgebraElement) -> int:
    """(d(Z_i) + d(Z_j) - d(Z_i + Z_j)) / 2: edges shared by two vertex generators."""
    numerator = degree_d(z_i) + degree_d(z_j) - degree_d(z_i + z_j)
    if numerator % 2:
        raise InternalInconsistencyError(f"odd multiplicity numerator {numerator}")
    return numerator // 2


def multiplicity(g: Multigraph, i: int, j: int) -> int:
    """Edges between i and j, computed from Y_i - 1 and Y_j - 1 only."""
    if i == j:
        raise InvalidInputError("multiplicity needs two distinct vertices")
    ambient = Ambient(g)
    return pair_multiplicity(gen_Y_tilde(g, i, ambient), gen_Y_tilde(g, j, ambient))


def incident_edge_count(gens: Sequence[AlgebraElement], subset: Sequence[int],
                        coeffs: Sequence) -> int:
    """d(sum_{i in I} a_i Z_i) for distinct nonzero a_i: edges touching I."""
    if len(coeffs) != len(subset):
        raise InvalidInputError(f"{len(subset)} vertices but {len(coeffs)} coefficients")
    coeffs = [Fraction(c) for c in coeffs]
    if any(c == 0 for c in coeffs):
        raise InvalidInputError("coefficients must be nonzero")
    if len(set(coeffs)) != len(coeffs):
        raise InvalidInputError("coefficients must be pairwise distinct")
    if not subset:
        return 0
    ambient = gens[subset[0]].ambient
    return degree_d(linear_combination([gens[i] for i in subset], coeffs, ambient))


def _check_series(f: Optional[UniPoly]) -> None:
    if f is None:
        return
    if not f.has_zero_constant or not f.has_nonzero_linear or f.coefficient(2) == 0:
        raise InvalidInputError("reconstruction needs f(0) = 0 with nonzero linear and quadratic terms")


def inverse_sum(gens: Sequence[AlgebraElement], f: Optional[UniPoly] = None) -> AlgebraElement:
    """sum_i ln(1 + Z_i), or sum_i f^{-1}(Z_i) when f is given."""
    ambient = gens[0].ambient
    total = ambient.zero()
    if f is None:
        for z in gens:
            total = total + log1p_element(z)
        return total
    inverse = f.compose_inverse(max(ambient.graph.n_edges, 1))
    for z in gens:
        total = total + apply_series(inverse, z)
    return total


def _degrees_and_multiplicities(gens: Sequence[AlgebraElement]) -> Tuple[List[int], Dict[Tuple[int, int], int]]:
    degrees = [degree_d(z) for z in gens]
    multiplicities = {}
    for i, j in combinations(range(len(gens)), 2):
        multiplicities[(i, j)] = pair_multiplicity(gens[i], gens[j])
    return degrees, multiplicities


def reconstruct(gens: Sequence[AlgebraElement], f: Optional[UniPoly] = None) -> Multigraph:
    """Rebuild the multigraph from a vertex-generator family {Z_i}.

    The family is not trusted: degrees must add up over the recovered edges
    and the inverse sum must vanish, otherwise InconsistentFamilyError.
    """
    _check_series(f)
    if not gens:
        raise InconsistentFamilyError("empty family")
    ambient = gens[0].ambient
    for index, z in enumerate(gens):
        if z.ambient != ambient:
            raise InconsistentFamilyError(f"generator {index} lives in another ambient")
        if z.constant_term:
            raise InconsistentFamilyError(f"generator {index} is not nilpotent")

    try:
        degrees, multiplicities = _degrees_and_multiplicities(gens)
    except InternalInconsistencyError as e:
        raise InconsistentFamilyError(str(e))

    for index, d in enumerate(degrees):
        if d == 0:
            raise InconsistentFamilyError(f"generator {index} has degree 0 (isolated vertex)")
    if any(m < 0 for m in multiplicities.values()):
        raise InconsistentFamilyError("negative edge multiplicity")
    for index, d in enumerate(degrees):
        incident = sum(m for pair, m in multiplicities.items() if index in pair)
        if incident != d:
            raise InconsistentFamilyError(f"vertex {index} has degree {d} but {incident} recovered edges")
    if sum(degrees) != 2 * sum(multiplicities.values()):
        raise InconsistentFamilyError("degree total does not match recovered edges")
    if not inverse_sum(gens, f).is_zero():
        raise InconsistentFamilyError("inverse sum of the generators does not vanish")

    edges = []
    for (i, j), m in multiplicities.items():
        edges.extend([(i, j)] * m)
    graph = Multigraph(len(gens), tuple(edges))
    logger.debug(f"reconstructed {graph}")
    return graph


def _random_distinct(rng: random.Random, size: int) -> List[int]:
    return rng.sample([v for v in range(-50, 51) if v], size)


def check_generator_family(gens: Sequence[AlgebraElement], f: Optional[UniPoly] = None,
                           trials: int = 5, seed: int = 0) -> GeneratorFamilyReport:
    """Nilpotency, vanishing inverse sum, coefficient-independent incident degrees
    and integral pairwise multiplicities of a family {Z_i}."""
    _check_series(f)
    if not gens:
        raise InvalidInputError("empty generator family")
    ambient = gens[0].ambient
    nilpotent = all(not z.constant_term and (z ** (ambient.graph.n_edges + 1)).is_zero()
                    for z in gens)
    if not nilpotent:
        return GeneratorFamilyReport(False, False, False, False, [], {})

    inverse_ok = inverse_sum(gens, f).is_zero()

    rng = random.Random(seed)
    stable = True
    everything = list(range(len(gens)))
    subsets = [everything] + [sorted(rng.sample(everything, rng.randint(1, len(gens))))
                              for _ in range(trials)]
    for subset in subsets:
        counts = {incident_edge_count(gens, subset, _random_distinct(rng, len(subset)))
                  for _ in range(trials)}
        if len(counts) != 1:
            logger.warning(f"⚠️ incident degree of I={subset} depends on coefficients: {sorted(counts)}")
            stable = False

    degrees = [degree_d(z) for z in gens]
    multiplicities = {}
    integral = True
    for i, j in combinations(everything, 2):
        numerator = degrees[i] + degrees[j] - degree_d(gens[i] + gens[j])
        if numerator % 2 or numerator < 0:
            integral = False
        multiplicities[(i, j)] = numerator // 2
    return GeneratorFamilyReport(nilpotent, inverse_ok, stable, integral, degrees, multiplicities)
