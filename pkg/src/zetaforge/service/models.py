"""Pydantic request/response models for the HTTP surface."""

from __future__ import annotations

from pydantic import BaseModel, Field


class EvalRequest(BaseModel):
    function: str
    args: list[str] = Field(default_factory=list)
    bits: int = 128
    guard_bits: int = 32


class EvalResponse(BaseModel):
    function: str
    args: list[str]
    value: str
    exact: bool
    bits: int


class VerifyRequest(BaseModel):
    ids: list[str] | None = None
    tags: list[str] | None = None
    bits: int = 128
    guard_bits: int = 32
    tol: str | None = None
    workers: int = 1


class RunInfo(BaseModel):
    precision_bits: int
    guard_bits: int


class ResultRow(BaseModel):
    id: str
    eq: str
    status: str
    residual: str
    seconds: float


class Summary(BaseModel):
    pass_: int = Field(alias="pass")
    fail: int
    advisory: int

    model_config = {"populate_by_name": True}


class ReportModel(BaseModel):
    run: RunInfo
    results: list[ResultRow]
    summary: Summary


class IdentityInfo(BaseModel):
    id: str
    eq: str
    kind: str
    tol_class: str
    tags: list[str]
    description: str


class HealthResponse(BaseModel):
    status: str
    identities: int
    constants: list[str]
