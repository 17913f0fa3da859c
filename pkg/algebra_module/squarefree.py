"""
Square-free edge algebra and its tree quotient

Elements are sparse maps edge-subset bitmask -> Fraction. In the full ambient
the monomial basis is every edge subset; in the tree ambient monomials whose
support is not slim (complement disconnected) are zero. Non-slim supports
are closed under taking supersets, so dropping them eagerly after every
product is a normal form for the quotient.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from graph_module.combinatorics import require_connected
from graph_module.multigraph import EdgeSubset, Multigraph, members, popcount
from utils.errors import AmbientMismatchError, InvalidInputError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class AmbientKind(str, Enum):
    FULL = "full"
    TREE = "tree"


@dataclass(frozen=True)
class Ambient:
    """Which algebra an element lives in: Phi_G or its tree quotient."""
    graph: Multigraph
    kind: AmbientKind = AmbientKind.FULL
    _slim_cache: Dict[int, bool] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", AmbientKind(self.kind))
        if self.kind is AmbientKind.TREE:
            require_connected(self.graph)

    @property
    def is_tree(self) -> bool:
        return self.kind is AmbientKind.TREE

    def admits(self, support: EdgeSubset) -> bool:
        """Whether the monomial with this support survives in the ambient."""
        if self.kind is AmbientKind.FULL:
            return True
        cached = self._slim_cache.get(support)
        if cached is None:
            g = self.graph
            cached = g.disjoint_set(g.all_edges_mask & ~support).components == 1
            self._slim_cache[support] = cached
        return cached

    def dimension(self) -> int:
        """Linear dimension: 2^|E|, or the number of slim subsets."""
        if self.kind is AmbientKind.FULL:
            return 1 << self.graph.n_edges
        return sum(1 for mask in range(self.graph.all_edges_mask + 1) if self.admits(mask))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {0: Fraction(1)})

    def scalar(self, c: Scalar) -> "AlgebraElement":
        return AlgebraElement(self, {0: Fraction(c)})


def resolve_ambient(g: Multigraph, ambient: Union[Ambient, AmbientKind, str]) -> Ambient:
    if isinstance(ambient, Ambient):
        if ambient.graph != g:
            raise AmbientMismatchError("ambient belongs to a different graph")
        return ambient
    return Ambient(g, AmbientKind(ambient))


class AlgebraElement:
    """Immutable sparse element; equality is equality of normal forms."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[EdgeSubset, Scalar]):
        full = ambient.graph.all_edges_mask
        clean: Dict[EdgeSubset, Fraction] = {}
        for support, coeff in terms.items():
            if support & ~full:
                raise InvalidInputError(f"monomial {members(support)} uses edges outside the graph")
            if coeff and ambient.admits(support):
                clean[support] = Fraction(coeff)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # --- queries ----------------------------------------------------------

    def coefficient(self, support: EdgeSubset) -> Fraction:
        return self.terms.get(support, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def support_degree1(self) -> EdgeSubset:
        """Edges e with a nonzero coefficient on the monomial phi_e."""
        mask = 0
        for support in self.terms:
            if support and support & (support - 1) == 0:
                mask |= support
        return mask

    def is_homogeneous(self, degree: int) -> bool:
        return all(popcount(s) == degree for s in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[Tuple[EdgeSubset, Fraction]]:
        return iter(self.terms.items())

    # --- arithmetic -------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.ambient is not other.ambient and self.ambient != other.ambient:
            raise AmbientMismatchError("elements live in different ambient algebras")

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ambient.scalar(other)
        return NotImplemented

    def __add__(self, other) -> "AlgebraElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return AlgebraElement(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.ambient, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AlgebraElement":
        return (-self) + other

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.ambient, {s: c * other for s, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if exponent < 0:
            raise InvalidInputError("negative powers are not defined")
        result = self.ambient.one()
        for _ in range(exponent):
            result = mul(result, self)
            if not result:
                break
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: Fraction(other)} if other else {})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"AlgebraElement({self.ambient.kind.value}, {self})"

    def __str__(self) -> str:
        """Debug serialization: 'c * phi_i phi_j ...' terms in lexicographic support order."""
        if not self.terms:
            return "0"
        parts = []
        for support in sorted(self.terms, key=members):
            coeff = self.terms[support]
            monomial = "".join(f"φ_{{{i}}}" for i in members(support)) or "1"
            parts.append(f"{coeff} * {monomial}")
        return " + ".join(parts)


def phi(e: int, ambient: Ambient) -> AlgebraElement:
    """The edge variable phi_e."""
    if not 0 <= e < ambient.graph.n_edges:
        raise InvalidInputError(f"invalid edge index {e}")
    return AlgebraElement(ambient, {1 << e: Fraction(1)})


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product: disjoint supports multiply to their union, overlaps vanish."""
    a._check(b)
    ambient = a.ambient
    product: Dict[EdgeSubset, Fraction] = {}
    for sa, ca in a.terms.items():
        for sb, cb in b.terms.items():
            if sa & sb:
                continue
            support = sa | sb
            if not ambient.admits(support):
                continue
            product[support] = product.get(support, 0) + ca * cb
    return AlgebraElement(ambient, product)


def coefficient(a: AlgebraElement, support: EdgeSubset) -> Fraction:
    return a.coefficient(support)


def support_degree1(a: AlgebraElement) -> EdgeSubset:
    return a.support_degree1()


def linear_combination(elements: Iterable[AlgebraElement], coeffs: Iterable[Scalar],
                       ambient: Ambient) -> AlgebraElement:
    result = ambient.zero()
    for element, c in zip(elements, coeffs):
        result = result + element * Fraction(c)
    return result


def product_of(elements: Iterable[AlgebraElement], ambient: Ambient) -> AlgebraElement:
    result = ambient.one()
    for element in elements:
        result = mul(result, element)
    return result
