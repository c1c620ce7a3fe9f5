"""FastAPI service wrapping the covering-number engines.

The handler functions are plain functions over the pydantic models; the CLI
calls them in-process and remote clients reach them over HTTP.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import formats, greens, oracle
from ..core import FiniteSemigroup, is_monogenic, structure_flags
from ..covers import (
    Kind,
    classify_monoid,
    sigma_g_general,
    sigma_i,
    sigma_s,
    verify_cover,
    witness_generates,
)
from ..errors import InputError, OrderCapExceededError
from .models import (
    AnalyzeResponse,
    CensusEntry,
    CensusRequest,
    CensusResponse,
    CoverRequest,
    CoverResponse,
    DocumentRequest,
    GreensSummary,
    OracleRequest,
    VerifyRequest,
    VerifyResponse,
)


def _load(text: str) -> FiniteSemigroup:
    _, sg = formats.load(text)
    return sg


def analyze_document(request: DocumentRequest) -> AnalyzeResponse:
    sg = _load(request.text)
    flags = structure_flags(sg)
    gd = greens.greens_classes(sg)
    witness = is_monogenic(sg)
    return AnalyzeResponse(
        order=sg.n,
        carrier_digest=formats.carrier_digest(sg),
        identity=flags.identity,
        is_group=flags.is_group,
        is_inverse=flags.is_inverse,
        is_monogenic=witness is not None,
        monogenic_witness=witness,
        idempotents=sorted(flags.idempotents),
        greens=GreensSummary(
            j_classes=len(gd.j_classes),
            r_classes=len(gd.r_classes),
            l_classes=len(gd.l_classes),
            j_class_sizes=[len(c) for c in gd.j_classes],
            maximal_j_classes=greens.maximal_j_classes(sg, gd),
        ),
    )


def _result_response(result, sg: FiniteSemigroup) -> CoverResponse:
    doc = formats.result_to_json(result, formats.carrier_digest(sg))
    return CoverResponse(**doc)


def compute_cover(request: CoverRequest) -> CoverResponse:
    sg = _load(request.text)
    flags = structure_flags(sg)
    if request.kind == "s":
        result = sigma_s(sg, flags)
    elif request.kind == "i":
        result = sigma_i(sg, flags)
    elif request.kind == "m":
        result = classify_monoid(sg, flags).sigma_m
    elif request.kind == "mstar":
        result = classify_monoid(sg, flags).sigma_m_star
    else:
        result = sigma_g_general(sg, flags)
    return _result_response(result, sg)


def compute_oracle(request: OracleRequest) -> CoverResponse:
    sg = _load(request.text)
    flags = structure_flags(sg)
    result = oracle.minimal_cover_exact(
        sg, flags, formats.KIND_CODES[request.kind], cap=request.cap
    )
    return _result_response(result, sg)


def verify_certificate(request: VerifyRequest) -> VerifyResponse:
    sg = _load(request.text)
    flags = structure_flags(sg)
    cert = request.certificate
    digest = formats.carrier_digest(sg)
    if cert.carrier_digest != digest:
        return VerifyResponse(
            ok=False, code="digest_mismatch",
            message=f"certificate is for {cert.carrier_digest}, carrier is {digest}",
        )
    kind = formats.KIND_CODES[request.kind]
    if cert.value == "infinite":
        if cert.witness is None:
            return VerifyResponse(ok=False, code="missing_witness",
                                  message="infinite result carries no witness")
        if not witness_generates(sg, flags, kind, cert.witness):
            return VerifyResponse(ok=False, code="witness_does_not_generate",
                                  message=f"element {cert.witness} does not generate")
        return VerifyResponse(ok=True)
    if cert.parts is None:
        return VerifyResponse(ok=False, code="missing_parts",
                              message="finite result carries no parts")
    if len(cert.parts) != cert.value:
        return VerifyResponse(ok=False, code="part_count_mismatch",
                              message=f"value {cert.value} but {len(cert.parts)} parts")
    cover = formats.cover_from_json({"parts": cert.parts}, kind)
    assert cover is not None
    verdict = verify_cover(sg, flags, cover)
    return VerifyResponse(ok=verdict.ok, code=verdict.code,
                          message=verdict.message, part=verdict.part)


def run_census(request: CensusRequest) -> CensusResponse:
    results = []
    histogram: dict[str, int] = {}
    for doc in sorted(request.documents, key=lambda d: d.name):
        try:
            response = compute_cover(CoverRequest(text=doc.text, kind=request.kind))
        except InputError as exc:
            raise InputError(f"{doc.name}: {exc}") from exc
        key = str(response.value)
        histogram[key] = histogram.get(key, 0) + 1
        results.append(CensusEntry(name=doc.name, value=response.value,
                                   case=response.case))
    ordered = dict(sorted(histogram.items(),
                          key=lambda kv: (kv[0] == "infinite", len(kv[0]), kv[0])))
    return CensusResponse(total=len(results), histogram=ordered, results=results)


def _http(handler, request):
    try:
        return handler(request)
    except OrderCapExceededError as exc:
        raise HTTPException(status_code=400,
                            detail={"code": "cap_exceeded", "message": str(exc)})
    except InputError as exc:
        raise HTTPException(status_code=400,
                            detail={"code": "input_error", "message": str(exc)})


app = FastAPI(title="semicover", description="Covering numbers of finite semigroups")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/analyze", response_model=AnalyzeResponse, response_model_exclude_none=True)
def analyze_route(request: DocumentRequest) -> AnalyzeResponse:
    return _http(analyze_document, request)


@app.post("/cover", response_model=CoverResponse, response_model_exclude_none=True)
def cover_route(request: CoverRequest) -> CoverResponse:
    return _http(compute_cover, request)


@app.post("/oracle", response_model=CoverResponse, response_model_exclude_none=True)
def oracle_route(request: OracleRequest) -> CoverResponse:
    return _http(compute_oracle, request)


@app.post("/verify", response_model=VerifyResponse, response_model_exclude_none=True)
def verify_route(request: VerifyRequest) -> VerifyResponse:
    return _http(verify_certificate, request)


@app.post("/census", response_model=CensusResponse)
def census_route(request: CensusRequest) -> CensusResponse:
    return _http(run_census, request)
