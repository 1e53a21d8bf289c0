"""
HTTP Surface
============

FastAPI application exposing the batch commands as POST endpoints. Request
bodies bundle the documents the CLI reads from files; responses are the same
report models.
"""

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from config.constants import COMMANDS
from config.settings import get_settings
from flat_manifold_utils.errors import FlatManifoldError, OracleMismatch
from models.reports import (
    ComplementResponse,
    CorpusResponse,
    DecompositionResponse,
    ErrorResponse,
    FoliationResponse,
    IntersectionResponse,
    ReductionResponse,
    ValidationResponse,
)
from models.requests import (
    ComplementRequest,
    DecomposeRequest,
    FoliateRequest,
    IntersectRequest,
    KleinRequest,
    ReduceRequest,
    RegularRepRequest,
    ValidateRequest,
)
from utils.logger import setup_logger

from . import commands

logger = setup_logger(__name__)
settings = get_settings()

SERVICE_VERSION = "1.0.0"

app = FastAPI(
    title="Flat Manifold Service",
    description="Exact computations for Bieberbach groups: invariant subspaces, foliations, intersection numbers",
    version=SERVICE_VERSION,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(FlatManifoldError)
async def flat_manifold_error_handler(request: Request, exc: FlatManifoldError):
    status = 409 if isinstance(exc, OracleMismatch) else 422
    logger.warning(f"{request.url.path} failed: {exc.code}: {exc.message}")
    payload = ErrorResponse(**exc.to_payload())
    return JSONResponse(status_code=status, content=payload.model_dump(mode="json"))


@app.get("/")
async def root():
    """Root endpoint with service information"""
    return {
        "service": settings.service_name,
        "version": SERVICE_VERSION,
        "status": "running",
        "schema_version": settings.schema_version,
        "commands": [c for c in COMMANDS if c != "serve"],
        "bounds": {
            "group_order_bound": settings.group_order_bound,
            "reduce_norm_bound": settings.reduce_norm_bound,
            "generic_search_limit": settings.generic_search_limit,
        },
        "documentation": "/docs",
    }


@app.get("/health")
async def health_check():
    return {"status": "healthy", "service": settings.service_name, "version": SERVICE_VERSION}


@app.post("/validate", response_model=ValidationResponse)
def validate(body: ValidateRequest):
    return commands.cmd_validate(body.group, settings)


@app.post("/reduce", response_model=ReductionResponse)
def reduce(body: ReduceRequest):
    return commands.cmd_reduce(body.group, settings, body.norm_bound, body.matrices_only)


@app.post("/foliate", response_model=FoliationResponse)
def foliate(body: FoliateRequest):
    return commands.cmd_foliate(body.group, body.subspace, body.cosets, settings)


@app.post("/intersect", response_model=IntersectionResponse)
def intersect(body: IntersectRequest):
    return commands.cmd_intersect(body.group, body.v1, body.v2, body.oracle, settings)


@app.post("/klein", response_model=CorpusResponse)
def klein(body: KleinRequest):
    return commands.cmd_klein(body.n, settings)


@app.post("/regular-rep", response_model=CorpusResponse)
def regular_rep(body: RegularRepRequest):
    return commands.cmd_regular_rep(body.table, settings)


@app.post("/decompose", response_model=DecompositionResponse)
def decompose(body: DecomposeRequest):
    return commands.cmd_decompose(body.group, body.subspace, settings, body.norm_bound)


@app.post("/complement", response_model=ComplementResponse)
def complement(body: ComplementRequest):
    return commands.cmd_complement(body.group, body.subspace, settings)
