"""HTTP facade over the game engine.

Endpoints (all JSON):
  POST /api/games                create a session from a source spec
  GET  /api/games/{id}           full state
  POST /api/games/{id}/moves     apply one move (409 on occupied point)
  POST /api/games/{id}/undo      pop the last move
  GET  /api/games/{id}/hint      next solver move (204 when solved)
  GET  /api/games/{id}/log       session log as JSON lines
  GET  /api/instances/presets    canned certified instances

Coordinates travel as exact numerator/denominator pairs plus float
convenience fields; the rationals are authoritative. Sessions live in an
in-memory registry with idle-TTL eviction (env UNTANGLE_SESSION_TTL).
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from fastapi import FastAPI, Response
from fastapi.responses import JSONResponse, PlainTextResponse

from . import game as game_mod
from .errors import OccupiedPointError, UntangleError, ValidationError
from .game import GameState
from .geometry import Point
from .graph import crossing_report
from .serialize import loaded_from_dict

DEFAULT_TTL = 3600.0

PRESETS = [
    {"name": "appendixA-3", "family": "appendixA", "k": 3, "label": "square 3x3 (n=9)"},
    {"name": "appendixA-4", "family": "appendixA", "k": 4, "label": "square 4x4 (n=16)"},
    {"name": "appendixA-5", "family": "appendixA", "k": 5, "label": "square 5x5 (n=25)"},
    {"name": "theorem1-3-1", "family": "theorem1", "k": 3, "s": 1, "label": "chain k=3 s=1 (n=12)"},
    {"name": "theorem1-3-2", "family": "theorem1", "k": 3, "s": 2, "label": "chain k=3 s=2 (n=15)"},
    {"name": "theorem1-4-2", "family": "theorem1", "k": 4, "s": 2, "label": "chain k=4 s=2 (n=24)"},
]


def rationalize(value) -> Fraction:
    """Exact pairs pass through; decimals get denominator <= 10^6."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValidationError(f"coordinate pair must have 2 entries, got {value!r}")
        num, den = int(value[0]), int(value[1])
        if den == 0:
            raise ValidationError("zero denominator")
        return Fraction(num, den)
    if isinstance(value, bool):
        raise ValidationError("coordinate must be numeric")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value)).limit_denominator(10 ** 6)
    if isinstance(value, str):
        try:
            return Fraction(value).limit_denominator(10 ** 6)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad coordinate {value!r}") from exc
    raise ValidationError(f"bad coordinate {value!r}")


@dataclass
class Session:
    state: GameState
    created: float
    last_active: float
    log: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_move_key: Optional[str] = None


class SessionRegistry:
    """id -> session with idle-TTL eviction; mutations are single-writer."""

    def __init__(self, ttl: float = DEFAULT_TTL, log_dir: Optional[str] = None,
                 clock=time.monotonic):
        self.ttl = ttl
        self.log_dir = Path(log_dir) if log_dir else None
        self._clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        if self.log_dir:
            self.log_dir.mkdir(parents=True, exist_ok=True)

    def sweep(self):
        now = self._clock()
        with self._lock:
            dead = [k for k, s in self._sessions.items() if now - s.last_active > self.ttl]
            for k in dead:
                del self._sessions[k]

    def create(self, state: GameState) -> str:
        self.sweep()
        sid = secrets.token_hex(8)
        now = self._clock()
        with self._lock:
            self._sessions[sid] = Session(state, now, now)
        return sid

    def get(self, sid: str) -> Session:
        self.sweep()
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise KeyError(sid)
        session.last_active = self._clock()
        return session

    def record_move(self, sid: str, session: Session, v: int, p: Point):
        entry = {
            "v": v,
            "x": [p.x.numerator, p.x.denominator],
            "y": [p.y.numerator, p.y.denominator],
            "t": len(session.log),
        }
        session.log.append(entry)
        self._append_disk(sid, entry)

    def record_undo(self, sid: str, session: Session):
        # the in-memory log mirrors the live history; disk keeps an audit line
        if session.log:
            session.log.pop()
        self._append_disk(sid, {"undo": True})

    def _append_disk(self, sid: str, entry: dict):
        if self.log_dir:
            with open(self.log_dir / f"{sid}.jsonl", "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry) + "\n")


def state_payload(sid: str, state: GameState) -> dict[str, Any]:
    pairs, incidences = crossing_report(state.graph, state.current)
    positions = {}
    for v in range(state.current.n):
        p = state.current[v]
        positions[str(v)] = {
            "x": [p.x.numerator, p.x.denominator],
            "y": [p.y.numerator, p.y.denominator],
            "xd": float(p.x),
            "yd": float(p.y),
        }
    bound = None
    if state.bound is not None:
        b = state.bound
        bound = {
            "family": b.family,
            "method": b.method,
            "k": b.k,
            "m": b.m,
            "n": b.n,
            "s": b.s,
            "certified_fixed_upper": b.certified_fixed_upper,
            "certified_moved_lower": b.certified_moved_lower,
        }
    fixed = sum(1 for v in range(state.current.n) if state.current[v] == state.start[v])
    return {
        "id": sid,
        "n": state.graph.vertex_count,
        "edges": [list(e) for e in state.graph.edge_list()],
        "positions": positions,
        "crossings": state.crossings,
        "crossing_edges": [[list(e), list(f)] for e, f in pairs],
        "vertex_on_edge": [[v, list(e)] for v, e in incidences],
        "status": state.status,
        "moves_used": state.moves_used,
        "fixed_count": fixed,
        "history": [
            {"v": v, "x": [p.x.numerator, p.x.denominator],
             "y": [p.y.numerator, p.y.denominator], "t": t}
            for t, (v, p) in enumerate(state.history)
        ],
        "bound": bound,
        "source": state.source,
    }


def build_state(source: dict) -> GameState:
    if not isinstance(source, dict) or "type" not in source:
        raise ValidationError("source spec needs a 'type' field")
    kind = source["type"]
    if kind == "preset":
        name = source.get("name")
        preset = next((p for p in PRESETS if p["name"] == name), None)
        if preset is None:
            raise ValidationError(f"unknown preset {name!r}")
        return game_mod.new_game_generated(
            preset["family"], preset["k"], preset.get("s")
        )
    if kind == "generated":
        if "k" not in source:
            raise ValidationError("generated source needs k")
        return game_mod.new_game_generated(
            str(source.get("family", "appendixA")),
            int(source["k"]),
            int(source["s"]) if source.get("s") is not None else None,
            str(source.get("style", "stacked")),
        )
    if kind == "random":
        if "n" not in source or "seed" not in source:
            raise ValidationError("random source needs n and seed")
        return game_mod.scrambled_random(int(source["n"]), int(source["seed"]))
    if kind == "instance":
        data = source.get("data")
        if not isinstance(data, dict):
            raise ValidationError("instance source needs the interchange data")
        g, drawing, inst = loaded_from_dict(data)
        if inst is not None and inst.bad_drawing is not None:
            return game_mod.new_game_from_instance(inst, source=source)
        if drawing is None:
            raise ValidationError("instance data carries no drawing")
        return game_mod.new_game_from_drawing(g, drawing, source=source)
    raise ValidationError(f"unknown source type {kind!r}")


def create_app(static_dir: Optional[str] = None, log_dir: Optional[str] = None,
               ttl: Optional[float] = None,
               registry: Optional[SessionRegistry] = None) -> FastAPI:
    if ttl is None:
        ttl = float(os.environ.get("UNTANGLE_SESSION_TTL", DEFAULT_TTL))
    reg = registry if registry is not None else SessionRegistry(ttl=ttl, log_dir=log_dir)
    app = FastAPI(title="planar-untangle", version="0.1.0")
    app.state.registry = reg

    @app.exception_handler(UntangleError)
    async def _untangle_error(request, exc: UntangleError):
        status = 409 if isinstance(exc, OccupiedPointError) else 400
        return JSONResponse({"error": str(exc)}, status_code=status)

    @app.exception_handler(KeyError)
    async def _not_found(request, exc: KeyError):
        return JSONResponse({"error": "unknown session"}, status_code=404)

    @app.get("/api/instances/presets")
    def presets():
        return {"presets": PRESETS}

    @app.post("/api/games", status_code=201)
    def create_game(body: dict):
        source = body.get("source", body)
        state = build_state(source)
        sid = reg.create(state)
        return {"id": sid, "state": state_payload(sid, state)}

    @app.get("/api/games/{sid}")
    def get_game(sid: str):
        session = reg.get(sid)
        return state_payload(sid, session.state)

    @app.post("/api/games/{sid}/moves")
    def post_move(sid: str, body: dict):
        session = reg.get(sid)
        for key in ("v", "x", "y"):
            if key not in body:
                raise ValidationError(f"move body needs {key!r}")
        v = int(body["v"])
        p = Point(rationalize(body["x"]), rationalize(body["y"]))
        idem = body.get("key")
        with session.lock:
            if idem is not None and idem == session.last_move_key:
                # retransmission of an acknowledged move: do not reapply
                return state_payload(sid, session.state)
            session.state = game_mod.apply_move(session.state, v, p)
            session.last_move_key = idem
            reg.record_move(sid, session, v, p)
            return state_payload(sid, session.state)

    @app.post("/api/games/{sid}/undo")
    def post_undo(sid: str):
        session = reg.get(sid)
        with session.lock:
            session.state = game_mod.undo_move(session.state)
            session.last_move_key = None
            reg.record_undo(sid, session)
            return state_payload(sid, session.state)

    @app.get("/api/games/{sid}/hint")
    def get_hint(sid: str):
        session = reg.get(sid)
        h = game_mod.hint(session.state)
        if h is None:
            return Response(status_code=204)
        return {
            "v": h.vertex,
            "x": [h.point.x.numerator, h.point.x.denominator],
            "y": [h.point.y.numerator, h.point.y.denominator],
            "xd": float(h.point.x),
            "yd": float(h.point.y),
            "remaining": h.remaining,
        }

    @app.get("/api/games/{sid}/log")
    def get_log(sid: str):
        session = reg.get(sid)
        lines = "".join(json.dumps(entry) + "\n" for entry in session.log)
        return PlainTextResponse(lines, media_type="application/jsonl")

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
