"""Stateful HTTP session service: a remote client plays the robber against
the two-cop strategy. Cop replies are computed eagerly after every robber
action, so clients only ever act on robber turns."""
from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import (
    GameConfig,
    GameState,
    Phase,
    apply_cop_move,
    apply_robber_move,
    legal_robber_moves,
    new_game,
    place_free_cops,
    place_robber,
)
from .graph import Graph, is_connected
from .io import GraphFileError, graph_from_obj, graph_to_obj
from .strategy import StrategyMemory
from .structure import block_cut_tree, is_series_parallel


class CreateGame(BaseModel):
    graph: dict
    exit: int


class Placement(BaseModel):
    free_cop: int
    robber: int


class RobberMove(BaseModel):
    to: int


@dataclass
class Session:
    id: str
    config: GameConfig
    state: GameState
    memory: StrategyMemory
    transcript: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def exit_vertex(self) -> int:
        return next(iter(self.config.exits))


def _error(status: int, code: str, message: str, legal_moves: Optional[list[int]] = None):
    body = {"code": code, "message": message}
    if legal_moves is not None:
        body["legal_moves"] = legal_moves
    return JSONResponse(status_code=status, content=body)


def _view(session: Session) -> dict:
    s = session.state
    g = session.config.graph
    view = {
        "id": session.id,
        "phase": s.phase.value,
        "cops": list(s.cops),
        "robber": s.robber,
        "exit": session.exit_vertex,
        "round": s.round,
        "graph": graph_to_obj(g),
        "cut_vertices": sorted(block_cut_tree(g).cut_vertices) if g.n >= 2 else [],
        "legal_robber_moves": (
            list(legal_robber_moves(s)) if s.phase is Phase.ROBBER_TURN else []
        ),
        "annotations": session.transcript[-1].get("annotations")
        if session.transcript and session.transcript[-1]["actor"] == "cops"
        else None,
        "transcript": session.transcript,
    }
    return view


def _cop_reply(session: Session) -> None:
    """Compute and apply the strategy's joint move if the game continues."""
    if session.state.phase is not Phase.COPS_TURN:
        return
    move = session.memory.move(session.state)
    session.state = apply_cop_move(session.state, move)
    session.transcript.append(
        {
            "actor": "cops",
            "action": {"type": "move", "to": list(move)},
            "resulting_phase": session.state.phase.value,
            "annotations": session.memory.annotations(),
        }
    )


def _replay_consistent(session: Session) -> bool:
    s = new_game(session.config)
    for rec in session.transcript:
        action = rec["action"]
        if action["type"] == "place":
            s = place_free_cops(s, action["free_cops"])
            s = place_robber(s, action["robber"])
        elif rec["actor"] == "cops":
            s = apply_cop_move(s, tuple(action["to"]))
        else:
            s = apply_robber_move(s, action["to"])
    return s == session.state


def create_app(snapshot_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="spcops session API")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    snap = Path(snapshot_dir) if snapshot_dir else None
    if snap:
        snap.mkdir(parents=True, exist_ok=True)

    def _snapshot(session: Session) -> None:
        if snap is None:
            return
        (snap / f"{session.id}.json").write_text(json.dumps(_view(session), indent=2))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/games", status_code=201)
    def create_game(body: CreateGame):
        try:
            g = graph_from_obj(body.graph)
        except GraphFileError as exc:
            return _error(400, "invalid-graph", str(exc))
        if g.n < 1 or not is_connected(g):
            return _error(400, "invalid-graph", "graph must be connected")
        if not (0 <= body.exit < g.n):
            return _error(400, "invalid-exit", f"exit {body.exit} out of range")
        if not is_series_parallel(g):
            return _error(400, "not-series-parallel", "graph has a K4 minor")
        cfg = GameConfig(g, frozenset((body.exit,)), 2)
        session = Session(
            id=uuid.uuid4().hex,
            config=cfg,
            state=new_game(cfg),
            memory=StrategyMemory(g, body.exit, sentry=0, patrol=1),
        )
        with registry_lock:
            sessions[session.id] = session
        _snapshot(session)
        return _view(session)

    def _get(session_id: str) -> Optional[Session]:
        with registry_lock:
            return sessions.get(session_id)

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        session = _get(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            return _view(session)

    @app.post("/games/{session_id}/placement")
    def post_placement(session_id: str, body: Placement):
        session = _get(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            if session.state.phase is not Phase.PLACING_FREE_COPS:
                return _error(409, "wrong-phase", f"phase is {session.state.phase.value}")
            g = session.config.graph
            if not (0 <= body.free_cop < g.n) or not (0 <= body.robber < g.n):
                return _error(400, "invalid-vertex", "placement out of range")
            session.state = place_free_cops(session.state, [body.free_cop])
            session.state = place_robber(session.state, body.robber)
            session.transcript.append(
                {
                    "actor": "robber",
                    "action": {
                        "type": "place",
                        "free_cops": [body.free_cop],
                        "robber": body.robber,
                    },
                    "resulting_phase": session.state.phase.value,
                }
            )
            _cop_reply(session)
            _snapshot(session)
            return _view(session)

    @app.post("/games/{session_id}/robber-move")
    def post_robber_move(session_id: str, body: RobberMove):
        session = _get(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            if session.state.phase is not Phase.ROBBER_TURN:
                return _error(409, "wrong-phase", f"phase is {session.state.phase.value}")
            legal = list(legal_robber_moves(session.state))
            if body.to not in legal:
                return _error(400, "illegal-move", f"cannot move to {body.to}", legal)
            session.state = apply_robber_move(session.state, body.to)
            session.transcript.append(
                {
                    "actor": "robber",
                    "action": {"type": "move", "to": body.to},
                    "resulting_phase": session.state.phase.value,
                }
            )
            _cop_reply(session)
            _snapshot(session)
            return _view(session)

    @app.get("/games/{session_id}/audit")
    def audit(session_id: str):
        session = _get(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            return {"consistent": _replay_consistent(session)}

    @app.delete("/games/{session_id}")
    def delete_game(session_id: str):
        with registry_lock:
            session = sessions.pop(session_id, None)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        return {"deleted": session_id}

    return app
