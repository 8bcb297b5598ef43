"""HTTP service over a SessionState, consumed by scripts and the explorer.

All payloads are JSON and carry the session's config hash; mutating calls
must echo the hash they last saw and get 409 when it is stale.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .errors import EmptyDocument, InvalidStem
from .forest import MetricsReport
from .lime import explanation_to_dict
from .session import SessionState


class FeedbackPayload(BaseModel):
    config_hash: str
    add: list[str] = Field(default_factory=list)
    remove: list[str] = Field(default_factory=list)


class RetrainPayload(BaseModel):
    config_hash: str
    seed: int


def _metrics_dict(metrics: MetricsReport | None):
    return metrics.as_dict() if metrics is not None else None


def create_app(session: SessionState, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="reqlens", version="0.1.0")

    def check_hash(supplied: str):
        if supplied != session.snapshot.hash:
            raise HTTPException(
                status_code=409,
                detail={"error": "stale config hash", "config_hash": session.snapshot.hash},
            )

    @app.get("/api/requirements")
    def list_requirements(page: int = Query(1, ge=1), page_size: int = Query(50, ge=1, le=500)):
        snap = session.snapshot
        start = (page - 1) * page_size
        items = session.dataset[start : start + page_size]
        probs = session.predictions(items) if items else []
        return {
            "total": len(session.dataset),
            "page": page,
            "page_size": page_size,
            "config_hash": snap.hash,
            "items": [
                {
                    "id": r.id,
                    "text": r.text,
                    "raw_label": r.raw_label,
                    "binary_label": r.binary_label,
                    "prob_nfr": float(p),
                    "predicted_label": "NFR" if p >= 0.5 else "FR",
                    "in_test": r.id in snap.test_ids,
                }
                for r, p in zip(items, probs)
            ],
        }

    @app.get("/api/requirements/{requirement_id}/explanation")
    def requirement_explanation(
        requirement_id: int,
        samples: int | None = Query(None, ge=10),
        topk: int | None = Query(None, ge=1),
    ):
        if requirement_id not in session.by_id:
            raise HTTPException(status_code=404, detail="unknown requirement id")
        try:
            explanation = session.explanation(requirement_id, samples, topk)
        except EmptyDocument:
            raise HTTPException(
                status_code=422, detail="requirement has no stems under the active profile"
            ) from None
        body = explanation_to_dict(explanation)
        body["config_hash"] = session.snapshot.hash
        body["text"] = session.by_id[requirement_id].text
        return body

    @app.get("/api/metrics")
    def metrics():
        snap = session.snapshot
        return {
            "config_hash": snap.hash,
            "seed": snap.seed,
            "profile": {
                "name": snap.pipeline.pp_config.profile.name,
                "base": session.base_profile,
                "removed_stems": sorted(snap.pipeline.pp_config.profile.removed_stems),
                "custom_stems": sorted(session.custom_stems),
            },
            "current": _metrics_dict(snap.metrics),
            "previous": _metrics_dict(session.previous_metrics),
        }

    @app.get("/api/analysis/word-sets")
    def word_sets():
        body = dict(session.word_analysis())
        body["config_hash"] = session.snapshot.hash
        return body

    @app.get("/api/analysis/ablation")
    def ablation(runs: int = Query(10, ge=2, le=50), alpha: float = Query(0.05, gt=0, lt=1)):
        body = dict(session.ablation(runs=runs, alpha=alpha))
        body["config_hash"] = session.snapshot.hash
        return body

    @app.post("/api/feedback/removed-words")
    def feedback(payload: FeedbackPayload):
        check_hash(payload.config_hash)
        try:
            snap = session.apply_feedback(payload.add, payload.remove)
        except InvalidStem as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        return JSONResponse(
            {
                "config_hash": snap.hash,
                "metrics": _metrics_dict(snap.metrics),
                "previous_metrics": _metrics_dict(session.previous_metrics),
                "custom_stems": sorted(session.custom_stems),
            }
        )

    @app.post("/api/retrain")
    def retrain(payload: RetrainPayload):
        check_hash(payload.config_hash)
        snap = session.retrain(payload.seed)
        return {
            "config_hash": snap.hash,
            "seed": snap.seed,
            "metrics": _metrics_dict(snap.metrics),
            "previous_metrics": _metrics_dict(session.previous_metrics),
        }

    @app.get("/api/model")
    def model_file():
        return JSONResponse(content=json.loads(session.export_model()))

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="explorer")

    return app
