"""HTTP game service behind the ``serve`` command.

Sessions live in process memory: each holds one game plus a lock so
concurrent mutations of the same session serialize while distinct
sessions proceed in parallel.  All errors come back as problem-detail
JSON objects with ``code``, ``message`` and, where known, ``field``.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import (
    ColoredGraph,
    GameState,
    Move,
    Variant,
    apply_move,
    bounds,
    contract,
)
from .errors import BudgetExceededError, InputError, VariantViolationError
from .instances import gen_random, parse
from .oracle import SearchBudget, hint, solve_exact_from

_DEFAULT_TIME_LIMIT = 10.0


@dataclass
class SessionRecord:
    """One live game: graph, variant, current state, and bookkeeping."""

    session_id: str
    graph: ColoredGraph
    variant: Variant
    state: GameState
    budget: float
    created: float
    intervals: tuple[tuple[int, int], ...] | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)


def _problem(status: int, code: str, message: str, fld: str | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if fld is not None:
        body["field"] = fld
    return JSONResponse(status_code=status, content=body)


class UnknownSessionError(KeyError):
    pass


def _state_payload(rec: SessionRecord) -> dict:
    """JSON view of the current position, in blob terms.

    Blob ids are positional: the i-th blob in ascending smallest-vertex
    order.  They are recomputed per response, so ids are only stable
    while no move merges blobs.
    """
    state = rec.state
    quotient, vertex_blob = contract(state)
    blobs = [
        {"id": b, "color": quotient.colors[b], "vertices": [], "neighbors": []}
        for b in range(quotient.n)
    ]
    for v, b in enumerate(vertex_blob):
        blobs[b]["vertices"].append(v)
    for u, v in quotient.edges:
        blobs[u]["neighbors"].append(v)
        blobs[v]["neighbors"].append(u)
    lower, _ = bounds(state)
    payload = {
        "n": rec.graph.n,
        "k": rec.graph.k,
        "variant": rec.variant.mode,
        "blobs": blobs,
        "vertex_colors": list(state.colors),
        "move_count": len(state.history),
        "distinct_colors": state.distinct_colors(),
        "lower_bound": lower,
        "won": state.won,
    }
    if rec.variant.pivot is not None:
        payload["pivot"] = rec.variant.pivot
    if rec.intervals is not None:
        payload["intervals"] = [list(iv) for iv in rec.intervals]
    return payload


def _parse_move(body: dict) -> Move:
    if not isinstance(body, dict):
        raise InputError("move body must be a JSON object")
    for key in ("vertex", "color"):
        if key not in body:
            raise InputError(f"move is missing {key!r}", field=key)
        if not isinstance(body[key], int) or isinstance(body[key], bool):
            raise InputError(f"{key} must be an integer", field=key)
    return Move(body["vertex"], body["color"])


def _session_budget(rec: SessionRecord, override: float | None) -> SearchBudget:
    limit = rec.budget if override is None else override
    if limit <= 0:
        raise InputError("budget must be positive", field="budget")
    return SearchBudget(time_limit=limit)


def create_app(frontend_dir: str | Path | None = None) -> FastAPI:
    """Build the service.  frontend_dir, when it exists, is served at /."""
    app = FastAPI(title="floodgraph", docs_url=None, redoc_url=None)
    sessions: dict[str, SessionRecord] = {}
    registry_lock = threading.Lock()

    def lookup(session_id: str) -> SessionRecord:
        with registry_lock:
            rec = sessions.get(session_id)
        if rec is None:
            raise UnknownSessionError(session_id)
        return rec

    @app.exception_handler(InputError)
    def on_input_error(request: Request, exc: InputError):
        return _problem(400, "invalid_input", str(exc), getattr(exc, "field", None))

    @app.exception_handler(VariantViolationError)
    def on_variant_violation(request: Request, exc: VariantViolationError):
        return _problem(409, "variant_violation", str(exc))

    @app.exception_handler(BudgetExceededError)
    def on_budget_exceeded(request: Request, exc: BudgetExceededError):
        return _problem(422, "budget_exceeded", str(exc))

    @app.exception_handler(UnknownSessionError)
    def on_unknown_session(request: Request, exc: UnknownSessionError):
        return _problem(404, "unknown_session", f"no such session: {exc.args[0]}")

    @app.exception_handler(RequestValidationError)
    def on_validation_error(request: Request, exc: RequestValidationError):
        return _problem(400, "invalid_input", str(exc))

    @app.post("/api/game")
    def create_game(body: dict = Body(...)):
        if not isinstance(body, dict):
            raise InputError("request body must be a JSON object")
        known = {"instance", "generator", "variant", "pivot", "budget"}
        for key in body:
            if key not in known:
                raise InputError(f"unknown key {key!r}", field=key)
        has_instance = "instance" in body
        has_generator = "generator" in body
        if has_instance == has_generator:
            raise InputError("provide exactly one of 'instance' or 'generator'")

        if has_instance:
            doc = parse(json.dumps(body["instance"]))
        else:
            gen = body["generator"]
            if not isinstance(gen, dict):
                raise InputError("generator must be a JSON object", field="generator")
            for key in ("kind", "n", "k", "seed"):
                if key not in gen:
                    raise InputError(f"generator is missing {key!r}", field=key)
            extra = set(gen) - {"kind", "n", "k", "seed"}
            if extra:
                raise InputError(f"unknown generator key {sorted(extra)[0]!r}", field=sorted(extra)[0])
            doc = gen_random(gen["kind"], gen["n"], gen["k"], gen["seed"])

        graph, variant = doc.to_game()
        # explicit variant/pivot in the request overrides the document
        if "variant" in body or "pivot" in body:
            mode = body.get("variant", variant.mode)
            if mode not in ("free", "fixed"):
                raise InputError("variant must be 'free' or 'fixed'", field="variant")
            pivot = body.get("pivot", variant.pivot if mode == "fixed" else None)
            if pivot is not None:
                if not isinstance(pivot, int) or isinstance(pivot, bool):
                    raise InputError("pivot must be an integer", field="pivot")
                if not 0 <= pivot < graph.n:
                    raise InputError(
                        f"pivot {pivot} out of range for {graph.n} vertices", field="pivot"
                    )
            variant = Variant(mode, pivot)

        budget = body.get("budget", _DEFAULT_TIME_LIMIT)
        if not isinstance(budget, (int, float)) or isinstance(budget, bool) or budget <= 0:
            raise InputError("budget must be a positive number of seconds", field="budget")

        rec = SessionRecord(
            session_id=uuid.uuid4().hex,
            graph=graph,
            variant=variant,
            state=GameState(graph, variant),
            budget=float(budget),
            created=time.time(),
            intervals=doc.intervals,
        )
        with registry_lock:
            sessions[rec.session_id] = rec
        return {"session_id": rec.session_id, "state": _state_payload(rec)}

    @app.get("/api/game/{session_id}")
    def get_game(session_id: str):
        rec = lookup(session_id)
        with rec.lock:
            return {"session_id": rec.session_id, "state": _state_payload(rec)}

    @app.post("/api/game/{session_id}/move")
    def post_move(session_id: str, body: dict = Body(...)):
        rec = lookup(session_id)
        move = _parse_move(body)
        with rec.lock:
            rec.state = apply_move(rec.state, move)
            return {"session_id": rec.session_id, "state": _state_payload(rec)}

    @app.post("/api/game/{session_id}/undo")
    def post_undo(session_id: str):
        rec = lookup(session_id)
        with rec.lock:
            if not rec.state.history:
                raise InputError("nothing to undo: no moves played")
            replayed = GameState(rec.graph, rec.variant)
            for move in rec.state.history[:-1]:
                replayed = apply_move(replayed, move)
            rec.state = replayed
            return {"session_id": rec.session_id, "state": _state_payload(rec)}

    @app.get("/api/game/{session_id}/hint")
    def get_hint(session_id: str, budget: float | None = None):
        rec = lookup(session_id)
        with rec.lock:
            got = hint(rec.state, _session_budget(rec, budget))
        return {
            "move": {"vertex": got.move.vertex, "color": got.move.color},
            "remaining_opt": got.remaining_opt,
            "optimal": got.optimal,
        }

    @app.get("/api/game/{session_id}/solution")
    def get_solution(session_id: str, budget: float | None = None):
        rec = lookup(session_id)
        with rec.lock:
            sol = solve_exact_from(rec.state, _session_budget(rec, budget))
        return {
            "value": sol.value,
            "optimal": sol.optimal,
            "moves": [{"vertex": m.vertex, "color": m.color} for m in sol.moves],
        }

    if frontend_dir is not None:
        root = Path(frontend_dir)
        if root.is_dir():
            app.mount("/", StaticFiles(directory=root, html=True), name="frontend")

    return app
