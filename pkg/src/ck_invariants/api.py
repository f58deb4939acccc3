"""HTTP front end: FastAPI routes over the service handlers.

Error mapping: invalid documents are 400, size guards are 422, and a
failed internal cross-check is 500 (it indicates a bug, not bad input).
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__, service
from .errors import GuardExceeded, InternalInvariantError, InvalidPresentation

app = FastAPI(
    title="ck-invariants",
    version=__version__,
    description=(
        "Exact K-theory calculator for Cuntz-Krieger algebras of finite "
        "0-1 matrices and eventually periodic infinite presentations."
    ),
)


class KGroupsRequest(BaseModel):
    document: service.DocumentModel
    unital: bool = True
    canonicalize: bool = False


class SpectrumRequest(BaseModel):
    document: service.DocumentModel
    canonicalize: bool = False


class RelationsRequest(BaseModel):
    document: service.DocumentModel
    size_bound: Optional[int] = None
    canonicalize: bool = False


class OracleRequest(BaseModel):
    document: service.DocumentModel
    slabs: Optional[List[int]] = None
    canonicalize: bool = False


class ValidateRequest(BaseModel):
    document: service.DocumentModel
    canonicalize: bool = False


def _error_response(status: int, kind: str, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"type": kind, "message": str(exc)}},
    )


@app.exception_handler(InvalidPresentation)
async def _invalid_presentation(request: Request, exc: InvalidPresentation):
    return _error_response(400, "validation", exc)


@app.exception_handler(GuardExceeded)
async def _guard_exceeded(request: Request, exc: GuardExceeded):
    return _error_response(422, "guard", exc)


@app.exception_handler(InternalInvariantError)
async def _internal_invariant(request: Request, exc: InternalInvariantError):
    return _error_response(500, "internal", exc)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/kgroups", response_model=service.KGroupsReport, response_model_exclude_none=True)
def kgroups(req: KGroupsRequest) -> service.KGroupsReport:
    return service.compute_kgroups(
        req.document.model_dump(), unital=req.unital, canonicalize=req.canonicalize
    )


@app.post("/spectrum", response_model=service.SpectrumReport)
def spectrum(req: SpectrumRequest) -> service.SpectrumReport:
    return service.compute_spectrum(req.document.model_dump(), canonicalize=req.canonicalize)


@app.post("/relations", response_model=service.RelationsReport)
def relations(req: RelationsRequest) -> service.RelationsReport:
    return service.compute_relations(
        req.document.model_dump(), size_bound=req.size_bound, canonicalize=req.canonicalize
    )


@app.post("/oracle", response_model=service.OracleReport)
def oracle(req: OracleRequest) -> service.OracleReport:
    return service.compute_oracle(
        req.document.model_dump(), slabs=req.slabs, canonicalize=req.canonicalize
    )


@app.post("/validate", response_model=service.ValidateReport, response_model_exclude_none=True)
def validate(req: ValidateRequest) -> service.ValidateReport:
    return service.compute_validate(req.document.model_dump(), canonicalize=req.canonicalize)
