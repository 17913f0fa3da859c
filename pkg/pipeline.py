"""
Graph Algebra Server

A FastAPI server exposing the graph algebra computations over HTTP:
1. Parses graphs sent in the text format ("vertices N", then "u v" lines)
2. Computes Hilbert series of C, K, F[f] and generic algebras
3. Runs the theorem validation suite
4. Reports Tutte polynomials and reconstruction round-trips

API Endpoints:
- POST /api/series: Hilbert series of one algebra
- POST /api/check: Theorem validation suite
- POST /api/tutte: Tutte polynomial and counts
- POST /api/reconstruct: Rebuild a graph from its vertex generators
- GET /api/status: Server status and configured bounds
"""

import logging
from contextlib import asynccontextmanager
from datetime import datetime
from typing import Optional

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from algebra_module.unipoly import UniPoly
from graph_module.multigraph import Multigraph
from theory_module.commands import reconstruct_report, series_report, tutte_report
from theory_module.validation import run_checks
from utils.errors import BoundExceededError, GalgError, GraphParseError, InvalidInputError
from utils.reports import CheckReport, ReconstructReport, SeriesReport, TutteReport
from utils.schema import GalgConfig

logger = logging.getLogger(__name__)

VERSION = "1.0.0"


# Pydantic models for API requests
class GraphRequest(BaseModel):
    """A graph in the text format."""
    graph: str = Field(..., min_length=1, description="'vertices N' followed by 'u v' edge lines")


class SeriesRequest(GraphRequest):
    algebra: str = Field(default="C", description="C, K, CT, KT, f, fT, generic or genericT")
    polynomial: Optional[str] = Field(None, description="coefficients of f from degree 0, for f and fT")
    seeds: Optional[int] = Field(None, ge=2, le=20, description="seed count for generic series")


class ReconstructRequest(GraphRequest):
    relabel_seed: Optional[int] = Field(None, description="shuffle vertex labels before rebuilding")


class ServerStatus(BaseModel):
    status: str
    version: str
    started_at: str
    config: GalgConfig


# Server state
class ServerState:
    def __init__(self):
        self.config: Optional[GalgConfig] = None
        self.started_at: str = ""

    def initialize(self):
        """Load configuration from the environment."""
        self.config = GalgConfig.from_env()
        self.started_at = datetime.now().isoformat()
        logger.info(f"✅ Configuration loaded: {self.config}")


state = ServerState()


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("🚀 Starting Graph Algebra Server...")
    state.initialize()
    yield


app = FastAPI(
    title="Graph Algebra Server",
    description="Hilbert series, relation checks and reconstruction for graph algebras",
    version=VERSION,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _config() -> GalgConfig:
    if state.config is None:
        state.initialize()
    return state.config


def _parse(text: str) -> Multigraph:
    try:
        return Multigraph.parse(text)
    except GraphParseError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _fail(e: GalgError) -> HTTPException:
    """Map library errors to status codes: 400 bad input, 413 over a bound, 422 otherwise."""
    if isinstance(e, (GraphParseError, InvalidInputError)):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, BoundExceededError):
        return HTTPException(status_code=413, detail=str(e))
    return HTTPException(status_code=422, detail=str(e))


@app.post("/api/series", response_model=SeriesReport)
def series_endpoint(request: SeriesRequest):
    """Hilbert series of the requested algebra."""
    g = _parse(request.graph)
    algebra, f = request.algebra, None
    if algebra in ("f", "fT"):
        if not request.polynomial:
            raise HTTPException(status_code=400, detail=f"algebra {algebra} needs a polynomial")
        try:
            f = UniPoly.parse(request.polynomial)
        except GraphParseError as e:
            raise HTTPException(status_code=400, detail=str(e))
    seeds = list(range(request.seeds)) if request.seeds else None
    try:
        return series_report(g, algebra, f=f, seeds=seeds, config=_config())
    except GalgError as e:
        raise _fail(e)


@app.post("/api/check", response_model=CheckReport)
def check_endpoint(request: GraphRequest):
    """Theorem validation suite; the report says which checks passed."""
    g = _parse(request.graph)
    try:
        return run_checks(g, _config())
    except GalgError as e:
        raise _fail(e)


@app.post("/api/tutte", response_model=TutteReport)
def tutte_endpoint(request: GraphRequest):
    g = _parse(request.graph)
    try:
        return tutte_report(g, _config())
    except GalgError as e:
        raise _fail(e)


@app.post("/api/reconstruct", response_model=ReconstructReport)
def reconstruct_endpoint(request: ReconstructRequest):
    g = _parse(request.graph)
    try:
        return reconstruct_report(g, request.relabel_seed, _config())
    except GalgError as e:
        raise _fail(e)


@app.get("/api/status", response_model=ServerStatus)
def status_endpoint():
    config = _config()
    return ServerStatus(status="ok", version=VERSION, started_at=state.started_at, config=config)


if __name__ == "__main__":
    config = GalgConfig.from_env()
    logging.basicConfig(level=config.log_level, format="%(levelname)s %(name)s: %(message)s")
    logger.info("🌐 Serving on http://localhost:7000")
    uvicorn.run(app, host="localhost", port=7000)
