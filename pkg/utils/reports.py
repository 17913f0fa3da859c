"""
JSON report models

Everything the CLI prints on stdout and the HTTP surface returns is one of
these pydantic models.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from graph_module.multigraph import Multigraph
from utils.schema import GeneratorFamilyReport, RelationSuite


class GraphModel(BaseModel):
    """A multigraph as vertex count plus ordered edge list."""
    vertices: int
    edges: List[Tuple[int, int]]

    @classmethod
    def from_graph(cls, g: Multigraph) -> "GraphModel":
        return cls(vertices=g.n_vertices, edges=list(g.edges))


class SeriesReport(BaseModel):
    algebra: str
    series: List[int]
    total: int
    plateau_k: int
    dims: List[int] = Field(default_factory=list, description="dim F_k for k = 0..plateau_k")
    consensus: Optional[bool] = None
    forests: Optional[int] = Field(None, description="T(2,1), for full-ambient algebras")
    trees: Optional[int] = Field(None, description="Laplacian-minor tree count, for tree algebras")
    pretty: str = ""


class RelationEntry(BaseModel):
    I: List[int]
    exponent: int
    vanishes: bool
    sharp: Optional[bool] = None
    relation: str = "p"


class RelationReport(BaseModel):
    family: str
    holds: bool
    skipped: Optional[str] = None
    entries: List[RelationEntry] = Field(default_factory=list)

    @classmethod
    def from_suite(cls, suite: RelationSuite) -> "RelationReport":
        return cls(
            family=suite.family,
            holds=suite.holds,
            skipped=suite.skipped,
            entries=[RelationEntry(I=list(c.subset), exponent=c.exponent, vanishes=c.vanishes,
                                   sharp=c.sharp, relation=c.relation) for c in suite.checks],
        )


class FamilyReport(BaseModel):
    nilpotent: bool
    inverse_sum_vanishes: bool
    incident_degree_stable: bool
    multiplicities_integral: bool
    degrees: List[int]
    multiplicities: Dict[str, int] = Field(default_factory=dict, description="'i-j' -> edge count")
    consistent: bool

    @classmethod
    def from_family(cls, family: GeneratorFamilyReport) -> "FamilyReport":
        return cls(
            nilpotent=family.nilpotent,
            inverse_sum_vanishes=family.inverse_sum_vanishes,
            incident_degree_stable=family.incident_degree_stable,
            multiplicities_integral=family.multiplicities_integral,
            degrees=family.degrees,
            multiplicities={f"{i}-{j}": m for (i, j), m in family.multiplicities.items()},
            consistent=family.consistent,
        )


class CheckItem(BaseModel):
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


class CheckReport(BaseModel):
    graph: GraphModel
    passed: bool
    checks: List[CheckItem]
    relations: List[RelationReport] = Field(default_factory=list)
    family: Optional[FamilyReport] = None


class SearchPair(BaseModel):
    graph_a: GraphModel
    graph_b: GraphModel
    tutte: str = Field(..., description="shared Tutte polynomial (of the Delta-subgraphs in tree mode)")
    graded: List[int]
    filtered_a: List[int]
    filtered_b: List[int]
    generic_a: Optional[List[int]] = None
    generic_b: Optional[List[int]] = None
    relations: Dict[str, str] = Field(default_factory=dict, description="'left vs right' -> majorization")
    matches_example: bool = False


class ExpGenericEntry(BaseModel):
    graph: GraphModel
    filtered: List[int]
    generic: List[int]
    consensus: bool
    exp_is_generic: bool


class SearchReport(BaseModel):
    vertices: int
    edges: int
    mode: str
    graphs: int
    groups: int
    pairs: List[SearchPair]
    example_found: bool
    exp_generic: Optional[List[ExpGenericEntry]] = None


class TutteReport(BaseModel):
    polynomial: str
    coefficients: List[Tuple[int, int, int]] = Field(..., description="(i, j, c) for c * x^i y^j")
    forests: int
    trees: int
    matrix_tree: int
    enumerated_forests: Optional[int] = None


class ReconstructReport(BaseModel):
    original: GraphModel
    relabeling: List[int]
    reconstructed: GraphModel
    isomorphic: bool
    mapping: Optional[List[int]] = None
    family: FamilyReport
