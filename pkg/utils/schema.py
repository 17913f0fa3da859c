"""
Schema definitions for the graph algebra toolkit

This module contains the configuration and the plain value types shared by
the graph, algebra and theory modules.
"""

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from dotenv import load_dotenv

from utils.errors import ConfigError, InvalidInputError

# Edge subsets are machine-word bitmasks.
HARD_EDGE_LIMIT = 63


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")
    return value


# Configuration Schema
@dataclass
class GalgConfig:
    """Resource bounds and defaults, overridable from the environment."""
    max_edges: int = 16  # rank computations are exponential in |E|
    enumeration_bound: int = 24  # forest/tree enumeration
    iso_max_vertices: int = 10
    subset_max_vertices: int = 12  # relation checks enumerate vertex subsets
    search_max_vertices: int = 6
    search_max_edges: int = 8
    generic_seeds: int = 3
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "GalgConfig":
        """Build a config from GALG_* environment variables (and .env)."""
        load_dotenv()
        config = cls(
            max_edges=_env_int("GALG_MAX_EDGES", cls.max_edges),
            enumeration_bound=_env_int("GALG_ENUMERATION_BOUND", cls.enumeration_bound),
            iso_max_vertices=_env_int("GALG_ISO_MAX_VERTICES", cls.iso_max_vertices),
            subset_max_vertices=_env_int("GALG_SUBSET_MAX_VERTICES", cls.subset_max_vertices),
            search_max_vertices=_env_int("GALG_SEARCH_MAX_VERTICES", cls.search_max_vertices),
            search_max_edges=_env_int("GALG_SEARCH_MAX_EDGES", cls.search_max_edges),
            generic_seeds=_env_int("GALG_GENERIC_SEEDS", cls.generic_seeds),
            log_level=os.getenv("GALG_LOG_LEVEL", cls.log_level).upper(),
        )
        if config.max_edges > HARD_EDGE_LIMIT:
            raise ConfigError(f"GALG_MAX_EDGES cannot exceed {HARD_EDGE_LIMIT}")
        return config


# Hilbert Series Schema
@dataclass(frozen=True)
class HilbertSeries:
    """Dimensions of the (associated) graded components, index = degree."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise InvalidInputError(f"Hilbert series must start with 1, got {coeffs}")
        if any(c < 0 for c in coeffs):
            raise InvalidInputError(f"negative Hilbert series coefficient in {coeffs}")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients: int) -> "HilbertSeries":
        return cls(tuple(coefficients))

    @classmethod
    def from_dims(cls, dims: List[int]) -> "HilbertSeries":
        """Series of an associated graded algebra from the dims of F_0 <= F_1 <= ..."""
        coeffs = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])]
        return cls(tuple(coeffs))

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def prefix_sums(self, length: Optional[int] = None) -> List[int]:
        length = length if length is not None else len(self.coefficients)
        sums, running = [], 0
        for k in range(length):
            running += self.coefficients[k] if k < len(self.coefficients) else 0
            sums.append(running)
        return sums

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0 and k > 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("t" if c == 1 else f"{c}t")
            else:
                terms.append(f"t^{k}" if c == 1 else f"{c}t^{k}")
        return "+".join(terms)


class Majorization(str, Enum):
    """Outcome of comparing two sequences by prefix sums."""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass
class FilteredRun:
    """Raw output of a filtration computation."""
    dims: List[int]  # dim F_0, dim F_1, ... up to the plateau
    series: HilbertSeries
    plateau_k: int  # first k with F_{k+1} = F_k


@dataclass
class SeriesComputation:
    """A Hilbert series together with how it was obtained."""
    series: HilbertSeries
    plateau_k: int
    dims: List[int]  # cumulative dimensions, index = filtration (or grading) level
    consensus: Optional[bool] = None  # set for generic series only


@dataclass
class GenericSeriesResult:
    """Series shared by generic f, plus how the samples agreed."""
    series: HilbertSeries
    consensus: bool
    samples: List[HilbertSeries] = field(default_factory=list)
    seeds: List[int] = field(default_factory=list)


# Relation Check Schema
@dataclass
class RelationCheck:
    """One evaluated relation for a vertex subset I."""
    subset: Tuple[int, ...]
    exponent: int
    vanishes: bool
    sharp: Optional[bool] = None  # whether the power one below the exponent is nonzero
    relation: str = "p"


@dataclass
class RelationSuite:
    """All relation checks of one family on one graph."""
    family: str  # 'p', 'q' or 'tree'
    checks: List[RelationCheck]
    skipped: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.skipped is not None or all(c.vanishes for c in self.checks)


@dataclass
class GeneratorFamilyReport:
    """The four properties a vertex-generator family must have."""
    nilpotent: bool
    inverse_sum_vanishes: bool
    incident_degree_stable: bool
    multiplicities_integral: bool
    degrees: List[int]
    multiplicities: Dict[Tuple[int, int], int]

    @property
    def consistent(self) -> bool:
        return (self.nilpotent and self.inverse_sum_vanishes
                and self.incident_degree_stable and self.multiplicities_integral)
