"""FastAPI service wrapping the verification engine.

All endpoints are thin adapters over the core modules: the registry runner,
the character decomposition pipeline, polynomial forms, pencils, and the
exterior-algebra constructions.  Reports are plain JSON objects; the math
lives elsewhere and is exact.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, extalg, pencil, pforms, registry
from .charring import freudenthal_character
from .decomp import decompose_character
from .registry import apply_functor, load_registry, run_case
from .rootdata import build_root_system, weyl_dim

app = FastAPI(title="folcheck", version=__version__)

_REGISTRY = load_registry()


class CaseInfo(BaseModel):
    id: str
    claim: str
    tier: str
    kind: str
    params: dict


class VerifyRequest(BaseModel):
    case_id: str
    params: dict[str, int] = Field(default_factory=dict)
    seed: int = registry.DEFAULT_SEED


class VerifyAllRequest(BaseModel):
    tier: Optional[str] = None
    filter: Optional[str] = None
    seed: int = registry.DEFAULT_SEED
    threads: int = 1
    params: dict[str, int] = Field(default_factory=dict)


class DecomposeRequest(BaseModel):
    rs: str
    weight: list[int]
    pipeline: list[str] = Field(default_factory=list)


class FormPayload(BaseModel):
    n: int
    terms: list[dict]


class PencilRequest(BaseModel):
    partition: list[int]
    values: list[str]


class HwRequest(BaseModel):
    tag: str
    n: Optional[int] = None


class RankRequest(BaseModel):
    n: int
    inner_degree: int
    terms: list[dict]


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/cases")
def cases(filter: Optional[str] = None, tier: Optional[str] = None) -> list[CaseInfo]:
    return [CaseInfo(**c) for c in registry.list_cases(_REGISTRY, filter, tier)]


@app.post("/verify")
def verify(req: VerifyRequest) -> dict:
    try:
        return run_case(_REGISTRY, req.case_id, req.params, seed=req.seed)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc))


@app.post("/verify-all")
def verify_all(req: VerifyAllRequest) -> dict:
    selected = _REGISTRY.select(req.filter, req.tier)
    if req.threads > 1:
        with ThreadPoolExecutor(max_workers=req.threads) as pool:
            futures = {
                c["id"]: pool.submit(run_case, _REGISTRY, c["id"], req.params,
                                     req.seed)
                for c in selected
            }
            reports = [futures[c["id"]].result() for c in selected]
    else:
        reports = [run_case(_REGISTRY, c["id"], req.params, req.seed)
                   for c in selected]
    counts = {"pass": 0, "fail": 0, "error": 0, "mismatch-unasserted": 0}
    for rep in reports:
        counts[rep["status"]] = counts.get(rep["status"], 0) + 1
    return {
        "reports": reports,
        "counts": counts,
        "all_pass": counts["fail"] == 0 and counts["error"] == 0,
    }


@app.post("/decompose")
def decompose(req: DecomposeRequest) -> dict:
    try:
        rs = build_root_system(req.rs)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    if len(req.weight) != rs.rank:
        raise HTTPException(status_code=422,
                            detail=f"weight needs {rs.rank} coordinates")
    try:
        chi = freudenthal_character(rs, tuple(req.weight))
        for functor in req.pipeline:
            chi = apply_functor(chi, functor)
        dec = decompose_character(chi)
    except (ValueError, ArithmeticError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    payload = dec.to_json()
    for term in payload["terms"]:
        term["dim"] = weyl_dim(rs, tuple(term["weight"]))
    payload["total_dim"] = dec.total_dim()
    payload["mass"] = chi.mass()
    return payload


@app.post("/forms/integrable")
def forms_integrable(req: FormPayload) -> dict:
    form = pforms.PolyForm.from_json(req.n, req.terms)
    radial = pforms.contract_radial(form).is_zero()
    return {
        "radial_section": radial,
        "lds": pforms.is_lds(form),
        "integrable": pforms.is_integrable(form) if radial else None,
    }


@app.post("/forms/psi")
def forms_psi(req: FormPayload) -> dict:
    form = pforms.PolyForm.from_json(req.n, req.terms)
    try:
        image = pforms.psi_wedge_d(form)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {"zero": image.is_zero(), "terms": image.to_json()}


@app.post("/pencil/verify")
def pencil_verify(req: PencilRequest) -> dict:
    try:
        return pencil.verify_lemma56(tuple(req.partition),
                                     [Fraction(v) for v in req.values])
    except (ValueError, ArithmeticError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/extalg/hw")
def extalg_hw(req: HwRequest) -> dict:
    try:
        vector = extalg.build_hw_vector(req.tag, req.n)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {
        "tag": req.tag,
        "n": vector.n,
        "terms": vector.to_json(),
        "weight_content": list(extalg.hw_vector_weight(vector)),
    }


@app.post("/extalg/rank")
def extalg_rank(req: RankRequest) -> dict:
    vector = extalg.MultiVector.from_json(req.n, req.inner_degree, req.terms)
    if vector.outer_degree != 2:
        raise HTTPException(status_code=422, detail="rank needs a 2-vector")
    rank = extalg.skew_rank(vector)
    return {"rank": rank, "rank_by_powers": extalg.skew_rank_by_powers(vector)}
