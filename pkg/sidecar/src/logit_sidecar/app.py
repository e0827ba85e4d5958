"""HTTP surface: batch logits endpoint plus health reporting.

The classifier is loaded once at startup from SIDECAR_MODEL_PATH and is
read-only afterwards, so requests may be served concurrently. Raw
(pre-softmax) logits cross the wire; all probability math stays with the
consumer.
"""
from __future__ import annotations

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .config import MAX_BATCH_SIZE, MAX_TEXT_LENGTH, model_path
from .model import LogitModel, ModelError, load_model

logger = logging.getLogger("logit_sidecar")


class LogitsRequest(BaseModel):
    texts: list[str]


class LogitsResponse(BaseModel):
    model_id: str
    n_classes: int
    logits: list[list[float]]


class HealthResponse(BaseModel):
    status: str
    model_id: str
    n_classes: int


def create_app(checkpoint: str | None = None) -> FastAPI:
    """Build the service; `checkpoint` overrides SIDECAR_MODEL_PATH."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        path = checkpoint if checkpoint is not None else model_path()
        if path:
            try:
                app.state.model = load_model(path)
                logger.info(
                    "loaded %s (%d classes)", app.state.model.model_id,
                    app.state.model.n_classes,
                )
            except ModelError:
                logger.exception("checkpoint failed to load; serving 503s")
        yield

    app = FastAPI(title="logit-sidecar", lifespan=lifespan)
    app.state.model = None

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def current_model() -> LogitModel:
        model = app.state.model
        if model is None:
            raise HTTPException(status_code=503, detail="model not loaded")
        return model

    @app.get("/v1/health")
    def health() -> HealthResponse:
        model = current_model()
        return HealthResponse(status="ok", model_id=model.model_id, n_classes=model.n_classes)

    @app.post("/v1/logits")
    def logits(request: LogitsRequest) -> LogitsResponse:
        model = current_model()
        if not request.texts:
            raise HTTPException(status_code=400, detail="empty batch")
        if len(request.texts) > MAX_BATCH_SIZE:
            raise HTTPException(
                status_code=400, detail=f"batch larger than {MAX_BATCH_SIZE} texts"
            )
        for i, text in enumerate(request.texts):
            if len(text) > MAX_TEXT_LENGTH:
                raise HTTPException(
                    status_code=400,
                    detail=f"text {i} longer than {MAX_TEXT_LENGTH} characters",
                )
        try:
            vectors = model.logits(request.texts)
        except Exception as exc:
            logger.exception("inference failed")
            raise HTTPException(status_code=500, detail=f"inference failure: {exc}")
        return LogitsResponse(
            model_id=model.model_id, n_classes=model.n_classes, logits=vectors
        )

    return app
