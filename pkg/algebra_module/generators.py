"""
Vertex generators of the graph algebras

X_i = sum_e c_{i,e} phi_e, Y_i = exp(X_i) = prod_e (1 + c_{i,e} phi_e),
Y_i - 1, and f(X_i) for a univariate f, in either ambient.
"""

from enum import Enum
from fractions import Fraction
from typing import List, Optional, Union

from algebra_module.squarefree import (
    AlgebraElement, Ambient, AmbientKind, mul, resolve_ambient,
)
from algebra_module.unipoly import UniPoly
from graph_module.multigraph import Multigraph
from utils.errors import InvalidInputError

AmbientLike = Union[Ambient, AmbientKind, str]


class GeneratorKind(str, Enum):
    X = "X"
    Y = "Y"
    Y_TILDE = "Ytilde"
    F = "f"


def _check_vertex(g: Multigraph, i: int) -> None:
    if not 0 <= i < g.n_vertices:
        raise InvalidInputError(f"invalid vertex {i}")


def coeff_c(g: Multigraph, i: int, e: int) -> int:
    """+1 if e joins i to a larger vertex, -1 if to a smaller one, 0 if not incident."""
    _check_vertex(g, i)
    if not 0 <= e < g.n_edges:
        raise InvalidInputError(f"invalid edge index {e}")
    u, v = g.edges[e]
    if i == u:
        return 1
    if i == v:
        return -1
    return 0


def gen_X(g: Multigraph, i: int, ambient: AmbientLike = AmbientKind.FULL) -> AlgebraElement:
    ambient = resolve_ambient(g, ambient)
    _check_vertex(g, i)
    terms = {}
    for e in range(g.n_edges):
        c = coeff_c(g, i, e)
        if c:
            terms[1 << e] = Fraction(c)
    return AlgebraElement(ambient, terms)


def gen_Y(g: Multigraph, i: int, ambient: AmbientLike = AmbientKind.FULL) -> AlgebraElement:
    """Product form prod_e (1 + c_{i,e} phi_e)."""
    ambient = resolve_ambient(g, ambient)
    _check_vertex(g, i)
    result = ambient.one()
    for e in range(g.n_edges):
        c = coeff_c(g, i, e)
        if c:
            result = mul(result, AlgebraElement(ambient, {0: 1, 1 << e: c}))
    return result


def gen_Y_tilde(g: Multigraph, i: int, ambient: AmbientLike = AmbientKind.FULL) -> AlgebraElement:
    return gen_Y(g, i, ambient) - 1


def exp_element(x: AlgebraElement) -> AlgebraElement:
    """Truncated exponential 1 + x + x^2/2! + ... of an element without constant term."""
    if x.constant_term:
        raise InvalidInputError("exp is only taken of elements without constant term")
    result = x.ambient.one()
    power = x.ambient.one()
    j = 0
    while True:
        j += 1
        power = mul(power, x) * Fraction(1, j)
        if not power:
            return result
        result = result + power


def log1p_element(z: AlgebraElement) -> AlgebraElement:
    """Truncated ln(1 + z) = z - z^2/2 + z^3/3 - ... of an element without constant term."""
    if z.constant_term:
        raise InvalidInputError("ln(1 + z) is only taken of elements without constant term")
    result = z.ambient.zero()
    power = z.ambient.one()
    j = 0
    while True:
        j += 1
        power = mul(power, z)
        if not power:
            return result
        result = result + power * Fraction((-1) ** (j - 1), j)


def gen_Y_exp(g: Multigraph, i: int, ambient: AmbientLike = AmbientKind.FULL) -> AlgebraElement:
    """Y_i as the truncated exponential of X_i (cross-check for the product form)."""
    return exp_element(gen_X(g, i, ambient))


def gen_f(g: Multigraph, i: int, f: UniPoly, ambient: AmbientLike = AmbientKind.FULL) -> AlgebraElement:
    """f(X_i) by Horner evaluation; f is truncated at degree |E| first."""
    if not f.has_zero_constant:
        raise InvalidInputError("f must have zero constant term")
    x = gen_X(g, i, ambient)
    return f.truncate(max(g.n_edges, 1)).evaluate_at(x)


def apply_series(f: UniPoly, z: AlgebraElement) -> AlgebraElement:
    """f(z) for a nilpotent z; f is truncated at degree |E|."""
    return f.truncate(max(z.ambient.graph.n_edges, 1)).evaluate_at(z)


def vertex_family(g: Multigraph, kind: Union[GeneratorKind, str],
                  ambient: AmbientLike = AmbientKind.FULL,
                  f: Optional[UniPoly] = None) -> List[AlgebraElement]:
    """The generator of the requested kind for every vertex 0..n, sharing one ambient."""
    kind = GeneratorKind(kind)
    ambient = resolve_ambient(g, ambient)
    if kind is GeneratorKind.X:
        return [gen_X(g, i, ambient) for i in range(g.n_vertices)]
    if kind is GeneratorKind.Y:
        return [gen_Y(g, i, ambient) for i in range(g.n_vertices)]
    if kind is GeneratorKind.Y_TILDE:
        return [gen_Y_tilde(g, i, ambient) for i in range(g.n_vertices)]
    if f is None:
        raise InvalidInputError("generator kind 'f' needs a polynomial")
    return [gen_f(g, i, f, ambient) for i in range(g.n_vertices)]
