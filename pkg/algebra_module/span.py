"""
Exact echelon bases of linear spans inside the edge algebra

Rows are kept with distinct pivots, the pivot of a row being its smallest
monomial bitmask, normalized to coefficient 1. A vector is reduced by
repeatedly clearing its smallest monomial while that monomial is a pivot:
every row's other monomials are larger than its pivot, so the smallest
monomial strictly increases and the loop ends. A nonzero element of the span
always has a pivot as its smallest monomial, which makes the leftover of a
reduction zero exactly for members of the span.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from algebra_module.squarefree import AlgebraElement, Ambient

Terms = Dict[int, Fraction]


class SpanBasis:
    """Row-echelon basis of a span; single writer while built, read-only after freeze()."""

    def __init__(self, ambient: Ambient):
        self.ambient = ambient
        self._rows: Dict[int, Terms] = {}
        self._frozen = False

    def _reduce(self, terms: Terms) -> Terms:
        residual = dict(terms)
        while residual:
            pivot = min(residual)
            row = self._rows.get(pivot)
            if row is None:
                break
            factor = residual[pivot]
            for support, c in row.items():
                value = residual.get(support, 0) - factor * c
                if value:
                    residual[support] = value
                else:
                    residual.pop(support, None)
        return residual

    def add(self, element: AlgebraElement) -> Optional[AlgebraElement]:
        """Insert an element; returns the new basis row, or None if it was already in the span."""
        if self._frozen:
            raise RuntimeError("SpanBasis is frozen")
        residual = self._reduce(element.terms)
        if not residual:
            return None
        pivot = min(residual)
        lead = residual[pivot]
        row = {support: c / lead for support, c in residual.items()}
        self._rows[pivot] = row
        return AlgebraElement(self.ambient, row)

    def extend(self, elements: Iterable[AlgebraElement]) -> List[AlgebraElement]:
        """Insert many elements; returns the rows that enlarged the span, in insertion order."""
        added = []
        for element in elements:
            row = self.add(element)
            if row is not None:
                added.append(row)
        return added

    def contains(self, element: AlgebraElement) -> bool:
        return not self._reduce(element.terms)

    def freeze(self) -> "SpanBasis":
        self._frozen = True
        return self

    def copy(self) -> "SpanBasis":
        clone = SpanBasis(self.ambient)
        clone._rows = {p: dict(r) for p, r in self._rows.items()}
        return clone

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    @property
    def rows(self) -> List[AlgebraElement]:
        return [AlgebraElement(self.ambient, self._rows[p]) for p in self.pivots]
