"""Request/response models for the covering-number service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

KindCode = Literal["s", "i", "m", "mstar", "g"]


class DocumentRequest(BaseModel):
    text: str


class CoverRequest(BaseModel):
    text: str
    kind: KindCode = "s"


class OracleRequest(BaseModel):
    text: str
    kind: KindCode = "s"
    cap: int = 16


class GreensSummary(BaseModel):
    j_classes: int
    r_classes: int
    l_classes: int
    j_class_sizes: list[int]
    maximal_j_classes: list[int]


class AnalyzeResponse(BaseModel):
    order: int
    carrier_digest: str
    identity: Optional[int] = None
    is_group: bool
    is_inverse: bool
    is_monogenic: bool
    monogenic_witness: Optional[int] = None
    idempotents: list[int]
    greens: GreensSummary


class CoverResponse(BaseModel):
    """Mirrors the stable certificate JSON schema."""

    value: Union[int, Literal["infinite"]]
    case: str
    parts: Optional[list[list[int]]] = None
    witness: Optional[int] = None
    provenance: str
    carrier_digest: str


class VerifyRequest(BaseModel):
    text: str
    kind: KindCode = "s"
    certificate: CoverResponse


class VerifyResponse(BaseModel):
    ok: bool
    code: Optional[str] = None
    message: Optional[str] = None
    part: Optional[int] = None


class NamedDocument(BaseModel):
    name: str
    text: str


class CensusRequest(BaseModel):
    documents: list[NamedDocument]
    kind: KindCode = "s"


class CensusEntry(BaseModel):
    name: str
    value: Union[int, Literal["infinite"]]
    case: str


class CensusResponse(BaseModel):
    total: int
    histogram: dict[str, int] = Field(default_factory=dict)
    results: list[CensusEntry] = Field(default_factory=list)


class ErrorDetail(BaseModel):
    code: Literal["input_error", "cap_exceeded", "verification_failed"]
    message: str
