"""FastAPI application wrapping the service handlers.

Every computation is a pure function over the request body, so the
service is stateless and safe for concurrent clients.  Run it with

    uvicorn evokit.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import EvokitError
from . import handlers, models

app = FastAPI(
    title="evokit",
    description=(
        "Exact-arithmetic analysis of finite-dimensional algebras and "
        "their evolution-algebra approximations."
    ),
    version="0.1.0",
)


@app.exception_handler(EvokitError)
async def domain_error_handler(_: Request, exc: EvokitError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.post("/info", response_model=models.InfoReport)
def info(request: models.InfoRequest) -> models.InfoReport:
    return handlers.info(request)


@app.post("/approx", response_model=models.ApproxReport)
def approx(request: models.ApproxRequest) -> models.ApproxReport:
    return handlers.approx(request)


@app.post("/exists", response_model=models.ExistenceReportModel)
def exists(request: models.ExistsRequest) -> models.ExistenceReportModel:
    return handlers.exists(request)


@app.post("/nilpotent", response_model=models.NilpotentReport)
def nilpotent(request: models.NilpotentRequest) -> models.NilpotentReport:
    return handlers.nilpotent(request)


@app.post("/iso", response_model=models.IsoReport)
def iso(request: models.IsoRequest) -> models.IsoReport:
    return handlers.iso(request)


@app.post("/distance", response_model=models.DistanceReport)
def distance(request: models.DistanceRequest) -> models.DistanceReport:
    return handlers.distance(request)


@app.get("/catalog", response_model=models.CatalogListReport)
def catalog_list() -> models.CatalogListReport:
    return handlers.catalog_list()


@app.post("/catalog/entry", response_model=models.CatalogEntryReport)
def catalog_entry(request: models.CatalogEntryRequest) -> models.CatalogEntryReport:
    return handlers.catalog_entry(request)


@app.post("/verify", response_model=models.VerifyReport)
def verify(request: models.VerifyRequest) -> models.VerifyReport:
    return handlers.verify(request)
