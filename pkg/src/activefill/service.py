"""HTTP/JSON session API for the browser UI.

Sessions live in memory with TTL eviction. Within a session, answers are
serialized: a concurrent submit gets 409 instead of blocking, and a submit
for anything other than the currently queried input also gets 409.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .dsl import describe, evaluate, program_to_dict
from .engine import (
    ActiveConfig,
    SessionState,
    StaleInputError,
    Status,
    accept,
    input_entropy,
    new_session,
    submit,
)

MAX_INPUTS = 10000
MAX_INPUT_LENGTH = 4096
DEFAULT_TTL_SECONDS = 3600.0


class ConfigOverrides(BaseModel):
    top: Optional[int] = None
    random: Optional[int] = None
    seed: Optional[int] = None
    input_sampling: Optional[str] = None
    candidates: Optional[int] = None
    epsilon: Optional[float] = None
    max_iterations: Optional[int] = None
    top_distinguish: Optional[int] = None
    output_witnesses: Optional[int] = None


class CreateSessionBody(BaseModel):
    inputs: list[str]
    config: ConfigOverrides = Field(default_factory=ConfigOverrides)


class AnswerBody(BaseModel):
    input: str
    output: str


@dataclass
class _SessionRecord:
    state: SessionState
    lock: threading.Lock = field(default_factory=threading.Lock)
    created: float = field(default_factory=time.monotonic)
    last_activity: float = field(default_factory=time.monotonic)


class SessionStore:
    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS):
        self.ttl_seconds = ttl_seconds
        self._records: dict[str, _SessionRecord] = {}
        self._guard = threading.Lock()

    def _purge(self):
        cutoff = time.monotonic() - self.ttl_seconds
        stale = [sid for sid, rec in self._records.items() if rec.last_activity < cutoff]
        for sid in stale:
            del self._records[sid]

    def create(self, state: SessionState) -> str:
        sid = secrets.token_hex(8)
        with self._guard:
            self._purge()
            self._records[sid] = _SessionRecord(state)
        return sid

    def get(self, sid: str) -> Optional[_SessionRecord]:
        with self._guard:
            self._purge()
            record = self._records.get(sid)
            if record is not None:
                record.last_activity = time.monotonic()
            return record


def session_view(sid: str, state: SessionState) -> dict:
    """Everything the UI renders: rows with predictions and entropies, the
    current query, the described program, and the iteration history."""
    answered = {text for text, _ in state.examples}
    rows = []
    for text in state.inputs:
        predicted = None if state.p_best is None else evaluate(state.p_best, text)
        row_entropy = None if state.belief is None else input_entropy(state.belief, text)
        rows.append({
            "input": text,
            "predicted": predicted,
            "entropy": row_entropy,
            "is_example": text in answered,
            "is_queried": text == state.pending,
        })
    return {
        "id": sid,
        "status": state.status.value,
        "iteration": state.iteration,
        "query": state.pending,
        "program": None if state.p_best is None else describe(state.p_best),
        "program_ast": None if state.p_best is None else program_to_dict(state.p_best),
        "failure": state.failure,
        "rows": rows,
        "history": [
            {"iteration": rec["iteration"], "input": rec["input"], "answer": rec["answer"]}
            for rec in state.transcript
        ],
    }


def _error(status_code: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status_code, content={"error": message})


def create_app(config: ActiveConfig = ActiveConfig(),
               ttl_seconds: float = DEFAULT_TTL_SECONDS,
               ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="activefill")
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])
    store = SessionStore(ttl_seconds)
    app.state.store = store
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request body")

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        if not body.inputs:
            return _error(400, "dataset must not be empty")
        if len(body.inputs) > MAX_INPUTS:
            return _error(413, f"dataset larger than {MAX_INPUTS} rows")
        if any(len(s) > MAX_INPUT_LENGTH for s in body.inputs):
            return _error(413, f"input longer than {MAX_INPUT_LENGTH} characters")
        overrides = {k: v for k, v in body.config.model_dump().items() if v is not None}
        try:
            session_config = ActiveConfig(**{**_config_dict(config), **overrides})
        except ValueError as exc:
            return _error(400, str(exc))
        state = new_session(body.inputs, session_config)
        sid = store.create(state)
        return session_view(sid, state)

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        record = store.get(sid)
        if record is None:
            return _error(404, "unknown session")
        return session_view(sid, record.state)

    @app.post("/sessions/{sid}/answer")
    def answer(sid: str, body: AnswerBody):
        record = store.get(sid)
        if record is None:
            return _error(404, "unknown session")
        if not record.lock.acquire(blocking=False):
            return _error(409, "another answer is being processed")
        try:
            state = record.state
            if state.status is not Status.RUNNING or body.input != state.pending:
                return _error(409, "input is not the current query")
            try:
                record.state = submit(state, body.input, body.output)
            except StaleInputError:
                return _error(409, "input is not the current query")
            return session_view(sid, record.state)
        finally:
            record.lock.release()

    @app.post("/sessions/{sid}/accept")
    def accept_session(sid: str):
        record = store.get(sid)
        if record is None:
            return _error(404, "unknown session")
        with record.lock:
            record.state = accept(record.state)
            return session_view(sid, record.state)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _config_dict(config: ActiveConfig) -> dict:
    return {
        "top": config.top,
        "random": config.random,
        "seed": config.seed,
        "input_sampling": config.input_sampling,
        "candidates": config.candidates,
        "epsilon": config.epsilon,
        "max_iterations": config.max_iterations,
        "top_distinguish": config.top_distinguish,
        "output_witnesses": config.output_witnesses,
    }
