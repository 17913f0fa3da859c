"""
Hilbert series of subalgebras of the edge algebra

Graded series for homogeneous degree-one generators, filtered series for
arbitrary generators (the series of the associated graded algebra), the
generic series of F[f]_G over random admissible f, and the majorization
order used to compare them.
"""

import logging
import random
from itertools import accumulate
from typing import List, Optional, Sequence, Tuple, Union

from algebra_module.generators import GeneratorKind, vertex_family
from algebra_module.span import SpanBasis
from algebra_module.squarefree import AlgebraElement, Ambient, AmbientKind, mul, resolve_ambient
from algebra_module.unipoly import UniPoly
from graph_module.multigraph import Multigraph
from utils.errors import AmbientMismatchError, BoundExceededError, InvalidInputError
from utils.schema import (
    FilteredRun, GalgConfig, GenericSeriesResult, HilbertSeries, Majorization,
    SeriesComputation,
)

logger = logging.getLogger(__name__)

AmbientLike = Union[Ambient, AmbientKind, str]


def check_rank_bound(g: Multigraph, config: Optional[GalgConfig] = None) -> None:
    """Rank computations are exponential in |E|; refuse graphs above GALG_MAX_EDGES."""
    bound = (config or GalgConfig.from_env()).max_edges
    if g.n_edges > bound:
        raise BoundExceededError("GALG_MAX_EDGES", bound, g.n_edges)


def _common_ambient(gens: Sequence[AlgebraElement], ambient: Optional[Ambient]) -> Ambient:
    if ambient is None:
        if not gens:
            raise InvalidInputError("an ambient is required when there are no generators")
        ambient = gens[0].ambient
    for gen in gens:
        if gen.ambient != ambient:
            raise AmbientMismatchError("generators live in different ambient algebras")
    return ambient


def graded_series(gens: Sequence[AlgebraElement], ambient: Optional[Ambient] = None,
                  config: Optional[GalgConfig] = None) -> HilbertSeries:
    """Dimensions of the span of k-fold products of degree-one generators, k = 0, 1, ...

    Component k is spanned by g * b over the generators g and a basis b of
    component k - 1, so each level only multiplies against the previous one.
    """
    ambient = _common_ambient(gens, ambient)
    check_rank_bound(ambient.graph, config)
    for index, gen in enumerate(gens):
        if not gen.is_homogeneous(1):
            raise InvalidInputError(f"generator {index} is not homogeneous of degree 1")

    coefficients = [1]
    component = [ambient.one()]
    while True:
        basis = SpanBasis(ambient)
        basis.extend(mul(gen, row) for row in component for gen in gens)
        if not basis.rank:
            break
        coefficients.append(basis.rank)
        component = basis.rows
        logger.debug(f"graded component {len(coefficients) - 1}: dim {basis.rank}")
    return HilbertSeries(tuple(coefficients))


def _filtration(gens: Sequence[AlgebraElement], ambient: Ambient) -> Tuple[SpanBasis, List[int]]:
    # F_{k+1} = F_k + sum_g g * F_k, and F_k = F_{k-1} + span(rows added at
    # level k), so only the rows added last need multiplying. The filtration
    # is multiplicative (F_k = F_1^k), hence the first plateau is final.
    basis = SpanBasis(ambient)
    fresh = basis.extend([ambient.one()])
    dims = [basis.rank]
    while True:
        fresh = basis.extend(mul(gen, row) for row in fresh for gen in gens)
        if not fresh:
            break
        dims.append(basis.rank)
        logger.debug(f"filtration level {len(dims) - 1}: dim {basis.rank}")
    return basis.freeze(), dims


def filtered_run(gens: Sequence[AlgebraElement], ambient: Optional[Ambient] = None,
                 config: Optional[GalgConfig] = None) -> FilteredRun:
    """dim F_k up to the plateau and the associated graded series."""
    ambient = _common_ambient(gens, ambient)
    check_rank_bound(ambient.graph, config)
    _, dims = _filtration(gens, ambient)
    return FilteredRun(dims=dims, series=HilbertSeries.from_dims(dims), plateau_k=len(dims) - 1)


def filtered_series(gens: Sequence[AlgebraElement], ambient: Optional[Ambient] = None,
                    config: Optional[GalgConfig] = None) -> HilbertSeries:
    return filtered_run(gens, ambient, config).series


def subalgebra_span(gens: Sequence[AlgebraElement], ambient: Optional[Ambient] = None,
                    config: Optional[GalgConfig] = None) -> SpanBasis:
    """Frozen echelon basis of the whole subalgebra generated by gens."""
    ambient = _common_ambient(gens, ambient)
    check_rank_bound(ambient.graph, config)
    basis, _ = _filtration(gens, ambient)
    return basis


def span_contains(gens_a: Sequence[AlgebraElement], gens_b: Sequence[AlgebraElement],
                  config: Optional[GalgConfig] = None) -> bool:
    """Whether the subalgebra generated by gens_b lies inside the one generated by gens_a."""
    outer = subalgebra_span(gens_a, config=config)
    inner = subalgebra_span(gens_b, outer.ambient, config)
    return all(outer.contains(row) for row in inner.rows)


def joint_rank(gens_a: Sequence[AlgebraElement], gens_b: Sequence[AlgebraElement],
               config: Optional[GalgConfig] = None) -> int:
    """Rank of the union of both subalgebras' spanning sets."""
    basis = subalgebra_span(gens_a, config=config).copy()
    other = subalgebra_span(gens_b, basis.ambient, config)
    basis.extend(other.rows)
    return basis.rank


def majorize(a: HilbertSeries, b: HilbertSeries) -> Majorization:
    """Compare by prefix sums, the shorter series padded with zeros."""
    length = max(len(a.coefficients), len(b.coefficients))
    sums_a, sums_b = a.prefix_sums(length), b.prefix_sums(length)
    bigger = any(x > y for x, y in zip(sums_a, sums_b))
    smaller = any(x < y for x, y in zip(sums_a, sums_b))
    if bigger and smaller:
        return Majorization.INCOMPARABLE
    if bigger:
        return Majorization.GREATER
    if smaller:
        return Majorization.LESS
    return Majorization.EQUAL


def _maximal_sample(samples: List[HilbertSeries]) -> HilbertSeries:
    for candidate in samples:
        if all(majorize(candidate, other) in (Majorization.GREATER, Majorization.EQUAL)
               for other in samples):
            return candidate
    # no maximum: return the first sample nothing lies strictly above
    for candidate in samples:
        if not any(majorize(other, candidate) is Majorization.GREATER for other in samples):
            return candidate
    return samples[0]


def generic_series(g: Multigraph, seeds: Optional[Sequence[int]] = None,
                   ambient: AmbientLike = AmbientKind.FULL,
                   config: Optional[GalgConfig] = None) -> GenericSeriesResult:
    """Filtered series of F[f]_G for one random admissible f per seed.

    Agreement across seeds stands in for genericity. Without agreement the
    majorization-largest sample is returned and consensus is False.
    """
    config = config or GalgConfig.from_env()
    seeds = list(seeds) if seeds is not None else list(range(config.generic_seeds))
    if len(seeds) < 2:
        raise InvalidInputError("generic series needs at least 2 seeds")
    ambient = resolve_ambient(g, ambient)
    check_rank_bound(g, config)

    samples = []
    for seed in seeds:
        f = UniPoly.random_admissible(random.Random(seed), max(g.n_edges, 1))
        gens = vertex_family(g, GeneratorKind.F, ambient, f)
        samples.append(filtered_run(gens, ambient, config).series)

    consensus = all(sample == samples[0] for sample in samples)
    if consensus:
        return GenericSeriesResult(samples[0], True, samples, seeds)
    logger.warning(f"⚠️ No consensus across seeds {seeds}: {', '.join(map(str, samples))}")
    return GenericSeriesResult(_maximal_sample(samples), False, samples, seeds)


def _graded_computation(series: HilbertSeries) -> SeriesComputation:
    return SeriesComputation(series=series, plateau_k=series.degree,
                             dims=list(accumulate(series.coefficients)))


def algebra_series(g: Multigraph, kind: str, ambient: AmbientLike = AmbientKind.FULL,
                   f: Optional[UniPoly] = None, seeds: Optional[Sequence[int]] = None,
                   config: Optional[GalgConfig] = None) -> SeriesComputation:
    """Series of C (graded), K, F[f] or the generic algebra, in either ambient."""
    config = config or GalgConfig.from_env()
    check_rank_bound(g, config)
    ambient = resolve_ambient(g, ambient)
    kind = kind.upper() if kind in ("c", "k") else kind

    if kind == "C":
        gens = vertex_family(g, GeneratorKind.X, ambient)
        return _graded_computation(graded_series(gens, ambient, config))
    if kind == "K":
        run = filtered_run(vertex_family(g, GeneratorKind.Y, ambient), ambient, config)
        return SeriesComputation(run.series, run.plateau_k, run.dims)
    if kind == "f":
        if f is None:
            raise InvalidInputError("algebra 'f' needs a polynomial")
        run = filtered_run(vertex_family(g, GeneratorKind.F, ambient, f), ambient, config)
        return SeriesComputation(run.series, run.plateau_k, run.dims)
    if kind == "generic":
        result = generic_series(g, seeds, ambient, config)
        return SeriesComputation(result.series, result.series.degree,
                                 list(accumulate(result.series.coefficients)),
                                 consensus=result.consensus)
    raise InvalidInputError(f"unknown algebra {kind!r}")
