"""Pydantic request and response models for the HTTP service.

These are also the CLI's report types: every rational travels as a
string in the canonical "p/q" form so round-trips stay bit-exact.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class AlgebraDocument(BaseModel):
    """Wire form of an algebra, identical to the on-disk file format."""

    dim: int
    kind: Literal["general", "evolution"]
    gamma: list[tuple[int, int, int, str]] | None = None
    matrix: list[list[str]] | None = None


class MatrixDocument(BaseModel):
    rows: list[list[str]]


class ChainSummary(BaseModel):
    kind: str
    dims: list[int]
    reaches_zero: bool
    index: int | None = None
    stable_dim: int | None = None


class InfoRequest(BaseModel):
    algebra: AlgebraDocument


class InfoReport(BaseModel):
    dim: int
    kind: str
    identities: dict[str, bool]
    chains: list[ChainSummary]
    dim_square: int | None = None
    triangularizable: bool | None = None


class ApproxRequest(BaseModel):
    algebra: AlgebraDocument
    point: list[str] | None = None
    transposed: bool = False
    symbolic: bool = False


class ApproxReport(BaseModel):
    variant: str
    symbolic: bool
    point: list[str] | None = None
    matrix: list[list[str]] | None = None
    forms: list[list[str]] | None = None
    form_coefficients: list[list[list[str]]] | None = None


class ExistsRequest(BaseModel):
    algebra: AlgebraDocument
    target: AlgebraDocument


class ExistenceReportModel(BaseModel):
    verdict: Literal["solution", "no_nonzero_solution", "no_solution"]
    point: list[str] | None = None
    invertible_blocks: list[int]
    coefficient_blocks: list[list[list[str]]]
    targets: list[list[str]]
    invertible_blocks_agree: bool
    singular_blocks_consistent: bool
    stacked_status: Literal["inconsistent", "unique", "affine"]
    conditions_match_verdict: bool


class NilpotentRequest(BaseModel):
    algebra: AlgebraDocument
    symbolic: bool = False
    transposed: bool = False


class NilpotentReport(BaseModel):
    symbolic: bool
    variant: str | None = None
    right_nilpotent: bool
    index: int | None = None
    triangularizable: bool | None = None
    permutation: list[int] | None = None
    cycle: list[int] | None = None


class IsoRequest(BaseModel):
    left: AlgebraDocument
    right: AlgebraDocument
    witness: MatrixDocument | None = None
    monomial: bool = False


class ObstructionModel(BaseModel):
    sigma: list[int]
    kind: str
    description: str
    scale_index: int | None = None
    reference_index: int | None = None
    square_value: str | None = None


class IsoReport(BaseModel):
    mode: Literal["witness", "monomial"]
    verified: bool | None = None
    status: str | None = None
    witness: list[list[str]] | None = None
    sigma: list[int] | None = None
    scales: list[str] | None = None
    obstructions: list[ObstructionModel] = Field(default_factory=list)


class DistanceRequest(BaseModel):
    left: AlgebraDocument
    right: AlgebraDocument


class DistanceReport(BaseModel):
    distance: str


class CatalogEntryRequest(BaseModel):
    name: str
    params: dict[str, str] = Field(default_factory=dict)


class CatalogListReport(BaseModel):
    names: list[str]
    required_params: dict[str, list[str]]


class CatalogEntryReport(BaseModel):
    name: str
    params: dict[str, str]
    source: str
    document: AlgebraDocument


class VerifyRequest(BaseModel):
    suite: Literal["section2", "leibniz", "canonical", "all"] = "all"


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteModel(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckModel]


class VerifyReport(BaseModel):
    suites: list[SuiteModel]
    all_passed: bool
