"""
Tutte polynomial by deletion-contraction

Parallel classes are handled as a bundle: a class of k parallel edges that
forms a cut contributes (x + y + ... + y^(k-1)); otherwise one copy is deleted
and the contraction turns the remaining k-1 copies into loops.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import sympy

from graph_module.multigraph import DisjointSet, Multigraph

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class TuttePolynomial:
    """Map (i, j) -> coefficient of x^i y^j; all coefficients positive."""
    coefficients: Tuple[Tuple[Monomial, int], ...]

    @classmethod
    def from_dict(cls, coefficients: Dict[Monomial, int]) -> "TuttePolynomial":
        return cls(tuple(sorted((m, c) for m, c in coefficients.items() if c)))

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.coefficients)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x ** i * y ** j for (i, j), c in self.coefficients)

    @property
    def forest_count(self) -> int:
        return self.evaluate(2, 1)

    @property
    def tree_count(self) -> int:
        return self.evaluate(1, 1)

    def as_sympy(self) -> sympy.Expr:
        x, y = sympy.symbols("x y")
        return sympy.expand(sum(c * x ** i * y ** j for (i, j), c in self.coefficients))

    def __str__(self) -> str:
        terms = []
        for (i, j), c in sorted(self.coefficients, key=lambda t: (-t[0][0] - t[0][1], -t[0][0])):
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            body = "*".join(factors)
            if not body:
                terms.append(str(c))
            else:
                terms.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(terms) if terms else "0"


def _add(a: Counter, b: Counter) -> Counter:
    out = Counter(a)
    out.update(b)
    return out


def _shift(poly: Counter, dx: int, dy: int) -> Counter:
    return Counter({(i + dx, j + dy): c for (i, j), c in poly.items()})


def _contract(edges: Tuple[Tuple[int, int], ...], keep: int, drop: int) -> Tuple[Tuple[int, int], ...]:
    merged = []
    for u, v in edges:
        u = keep if u == drop else u
        v = keep if v == drop else v
        merged.append((min(u, v), max(u, v)))
    return tuple(sorted(merged))


@lru_cache(maxsize=None)
def _tutte(edges: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[Monomial, int], ...]:
    loops = sum(1 for u, v in edges if u == v)
    edges = tuple(e for e in edges if e[0] != e[1])
    if not edges:
        return (((0, loops), 1),)
    u, v = edges[0]
    k = edges.count((u, v))
    rest = tuple(e for e in edges if e != (u, v))

    labels = sorted({w for e in edges for w in e})
    index = {w: i for i, w in enumerate(labels)}
    dsu = DisjointSet(len(labels))
    for a, b in rest:
        dsu.union(index[a], index[b])

    contracted = Counter(dict(_tutte(_contract(rest, u, v))))
    if not dsu.connected(index[u], index[v]):
        # k parallel edges forming a cut: (x + y + ... + y^(k-1)) T(G/e)
        result = _shift(contracted, 1, 0)
        for j in range(1, k):
            result = _add(result, _shift(contracted, 0, j))
    else:
        deleted = Counter(dict(_tutte(tuple(sorted(rest + ((u, v),) * (k - 1))))))
        result = _add(deleted, _shift(contracted, 0, k - 1))
    result = _shift(result, 0, loops)
    return tuple(sorted(result.items()))


def tutte(g: Multigraph) -> TuttePolynomial:
    """Tutte polynomial of g (isolated vertices and components do not matter)."""
    return TuttePolynomial.from_dict(dict(_tutte(tuple(sorted(g.edges)))))
