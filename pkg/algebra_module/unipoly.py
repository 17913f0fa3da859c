"""
Univariate polynomials over the rationals

Used for the function f in F[f]_G. Text format: comma-separated coefficients
from degree 0 upward, e.g. "0, 1, 1/2, 1/6".
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from utils.errors import GraphParseError, InvalidInputError


def _trim(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _mul_truncated(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if not x:
            continue
        for j, y in enumerate(b[:order + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class UniPoly:
    """Coefficient list over Q, index = degree, trailing zeros trimmed."""
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(Fraction(c) for c in self.coefficients))

    @classmethod
    def of(cls, *coefficients: Union[int, Fraction, str]) -> "UniPoly":
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def parse(cls, text: str) -> "UniPoly":
        body = " ".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
        if not body:
            raise GraphParseError("empty polynomial")
        coeffs = []
        for position, token in enumerate(body.split(",")):
            token = token.strip()
            try:
                coeffs.append(Fraction(token))
            except (ValueError, ZeroDivisionError):
                raise GraphParseError(f"coefficient {position} ({token!r}) is not a rational number")
        return cls(tuple(coeffs))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "UniPoly":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def identity(cls) -> "UniPoly":
        return cls.of(0, 1)

    @classmethod
    def exp_minus_one(cls, order: int) -> "UniPoly":
        """exp(x) - 1 truncated at degree `order`."""
        return cls(tuple([Fraction(0)] + [Fraction(1, factorial(j)) for j in range(1, order + 1)]))

    @classmethod
    def log1p(cls, order: int) -> "UniPoly":
        """ln(1 + x) truncated at degree `order`."""
        return cls(tuple([Fraction(0)] + [Fraction((-1) ** (j - 1), j) for j in range(1, order + 1)]))

    @classmethod
    def random_admissible(cls, rng: random.Random, degree: int, bound: int = 1000) -> "UniPoly":
        """Integer coefficients in [-bound, bound], exact degree, zero constant, nonzero linear term."""
        degree = max(degree, 1)
        coeffs = [0] + [rng.randint(-bound, bound) for _ in range(degree)]
        while coeffs[1] == 0:
            coeffs[1] = rng.randint(-bound, bound)
        while coeffs[degree] == 0:
            coeffs[degree] = rng.randint(-bound, bound)
        return cls(tuple(Fraction(c) for c in coeffs))

    # --- predicates -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    @property
    def has_zero_constant(self) -> bool:
        return self.coefficient(0) == 0

    @property
    def has_nonzero_linear(self) -> bool:
        return self.coefficient(1) != 0

    def truncate(self, order: int) -> "UniPoly":
        return UniPoly(self.coefficients[:order + 1])

    # --- evaluation -------------------------------------------------------

    def evaluate_at(self, x):
        """Horner evaluation; works for Fractions and algebra elements alike."""
        result = 0 * x
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def compose_truncated(self, inner: "UniPoly", order: int) -> "UniPoly":
        """self(inner(x)) modulo x^(order+1)."""
        result: List[Fraction] = [Fraction(0)] * (order + 1)
        inner_coeffs = list(inner.coefficients)
        for c in reversed(self.coefficients):
            result = _mul_truncated(result, inner_coeffs, order)
            result[0] += c
        return UniPoly(tuple(result))

    def compose_inverse(self, order: int) -> "UniPoly":
        """Series reversion g with self(g(x)) = x mod x^(order+1).

        Requires a zero constant term and a nonzero linear term.
        """
        if not self.has_zero_constant or not self.has_nonzero_linear:
            raise InvalidInputError("compositional inverse needs f(0) = 0 and f'(0) != 0")
        a1 = self.coefficient(1)
        inverse = [Fraction(0), 1 / a1] + [Fraction(0)] * max(order - 1, 0)
        for k in range(2, order + 1):
            composed = self.compose_truncated(UniPoly(tuple(inverse[:k])), k)
            inverse[k] = -composed.coefficient(k) / a1
        return UniPoly(tuple(inverse[:order + 1]))

    def to_text(self) -> str:
        return ", ".join(str(c) for c in self.coefficients) or "0"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(f"{c}{'*' + power if power else ''}")
        return " + ".join(terms) or "0"
