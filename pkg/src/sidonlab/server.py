"""HTTP session service for the game engine.

In-memory sessions addressed by opaque tokens, an optional append-only
JSON-lines journal, and a replay routine that re-executes a journal and
demands byte-identical responses. Mutating requests carry a round_index turn
token: it must equal the number of completed rounds, so of two concurrent
submissions for the same turn exactly one wins and the other gets 409.

Numeric wire policy: counts, thresholds, and certificate numbers travel as
decimal strings (they grow without bound); positions and horizons are plain
JSON integers.
"""

from __future__ import annotations

import json
import os
import random
import secrets
import threading
from typing import Optional

from fastapi import Body, FastAPI, HTTPException, Query

from .core import (
    DEFAULT_BUDGET,
    Budget,
    HorizonRegressionError,
    InvalidCylinderError,
    MoveError,
    Params,
    RefinementViolationError,
    ResourceBudgetError,
    canonical_json,
)
from .game import Cylinder, GameSession, GrowthFunction, audit_transcript, open_session
from .repcount import rep_table


class SessionStore:
    """Sessions plus their locks; optionally journals every mutation."""

    def __init__(
        self,
        journal_path: Optional[str] = None,
        seed: Optional[int] = None,
        budget: Budget = DEFAULT_BUDGET,
    ):
        self.budget = budget
        self._sessions: dict[str, GameSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._journal_lock = threading.Lock()
        self._journal_path = journal_path
        self._id_rng = random.Random(seed) if seed is not None else None

    def _new_id(self) -> str:
        if self._id_rng is not None:
            return f"s{self._id_rng.getrandbits(48):012x}"
        return f"s{secrets.token_hex(6)}"

    def _journal(self, record: dict):
        if self._journal_path is None:
            return
        line = canonical_json(record)
        with self._journal_lock:
            with open(self._journal_path, "a", encoding="ascii") as fh:
                fh.write(line + "\n")

    def _get(self, session_id: str) -> tuple[GameSession, threading.Lock]:
        with self._registry_lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise KeyError(session_id)
            return session, self._locks[session_id]

    def create(self, request: dict, session_id: Optional[str] = None) -> dict:
        params = Params.from_json(request["params"])
        strategy = request["strategy"]
        f_obj = request.get("f")
        f = None if f_obj is None else GrowthFunction.from_json(f_obj)
        opening = Cylinder.from_json(request["opening"])
        session = open_session(params, strategy, f=f, opening=opening, budget=self.budget)
        response_cylinder = session.respond()
        with self._registry_lock:
            if session_id is None:
                session_id = self._new_id()
                while session_id in self._sessions:
                    session_id = self._new_id()
            elif session_id in self._sessions:
                raise ValueError(f"session id {session_id} already exists")
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        response = {
            "session_id": session_id,
            "awaiting": session.awaiting,
            "round_index": len(session.rounds),
            "response": response_cylinder.to_json(),
            "round_data": dict(session.rounds[-1].data),
            "audit": audit_transcript(session).to_json(),
        }
        self._journal({"type": "create", "session_id": session_id, "request": request, "response": response})
        return response

    def move(self, session_id: str, request: dict) -> dict:
        session, lock = self._get(session_id)
        with lock:
            round_index = request["round_index"]
            if round_index != len(session.rounds) or session.awaiting != "player1":
                raise TurnConflict(expected=len(session.rounds), got=round_index)
            move = Cylinder.from_json(request["move"])
            session.player1_move(move)
            response_cylinder = session.respond()
            response = {
                "session_id": session_id,
                "accepted": True,
                "awaiting": session.awaiting,
                "round_index": len(session.rounds),
                "response": response_cylinder.to_json(),
                "round_data": dict(session.rounds[-1].data),
                "audit": audit_transcript(session).to_json(),
            }
            self._journal(
                {"type": "move", "session_id": session_id, "request": request, "response": response}
            )
            return response

    def session_view(self, session_id: str) -> dict:
        session, lock = self._get(session_id)
        with lock:
            view = session.to_json()
            view["session_id"] = session_id
            view["round_index"] = len(session.rounds)
            return view

    def audit_view(self, session_id: str) -> dict:
        session, lock = self._get(session_id)
        with lock:
            return audit_transcript(session).to_json()

    def prefix_view(self, session_id: str, x_max: Optional[int] = None) -> dict:
        session, lock = self._get(session_id)
        with lock:
            A, valid_up_to = session.limit_prefix()
            top = valid_up_to if x_max is None else min(x_max, valid_up_to)
            table = rep_table(A, session.params.h, top, budget=self.budget)
            return {
                "elements": list(A),
                "valid_up_to": valid_up_to,
                "rep_table": table.to_json(),
            }


class TurnConflict(Exception):
    def __init__(self, expected: int, got):
        super().__init__(f"round_index {got} does not match current round {expected}")
        self.expected = expected
        self.got = got


def replay_journal(
    path: str, budget: Budget = DEFAULT_BUDGET
) -> tuple[SessionStore, list[dict]]:
    """Re-execute a journal into a fresh store; report any byte mismatches.

    Each replayed response is rendered with the same canonical JSON as the
    original run; a faithful engine reproduces every line exactly.
    """
    store = SessionStore(journal_path=None, budget=budget)
    mismatches = []
    with open(path, encoding="ascii") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            if record["type"] == "create":
                got = store.create(record["request"], session_id=record["session_id"])
            elif record["type"] == "move":
                got = store.move(record["session_id"], record["request"])
            else:
                raise ValueError(f"unknown journal record type {record['type']!r}")
            want_bytes = canonical_json(record["response"])
            got_bytes = canonical_json(got)
            if got_bytes != want_bytes:
                mismatches.append(
                    {"line": line_no, "recorded": want_bytes, "replayed": got_bytes}
                )
    return store, mismatches


def _error(status: int, kind: str, message: str, **extra):
    raise HTTPException(status_code=status, detail={"error": kind, "message": message, **extra})


def create_app(store: Optional[SessionStore] = None) -> FastAPI:
    if store is None:
        seed_env = os.environ.get("SIDONLAB_SEED")
        store = SessionStore(
            journal_path=os.environ.get("SIDONLAB_JOURNAL"),
            seed=None if seed_env is None else int(seed_env),
        )
    app = FastAPI(title="sidonlab session service")
    app.state.store = store

    @app.post("/sessions")
    def create_session(body: dict = Body(...)):
        try:
            return store.create(body)
        except (KeyError, TypeError) as exc:
            _error(400, "bad_request", f"malformed request: {exc!r}")
        except InvalidCylinderError as exc:
            _error(400, "invalid_cylinder", str(exc))
        except ResourceBudgetError as exc:
            _error(400, "budget", str(exc))
        except ValueError as exc:
            _error(400, "bad_request", str(exc))

    @app.post("/sessions/{session_id}/moves")
    def submit_move(session_id: str, body: dict = Body(...)):
        try:
            return store.move(session_id, body)
        except KeyError as exc:
            if exc.args and exc.args[0] == session_id:
                _error(404, "unknown_session", f"no session {session_id}")
            _error(400, "bad_request", f"malformed request: {exc!r}")
        except TurnConflict as exc:
            _error(409, "out_of_turn", str(exc), expected=exc.expected, got=exc.got)
        except RefinementViolationError as exc:
            _error(400, "refinement_violation", str(exc), position=exc.position)
        except HorizonRegressionError as exc:
            _error(
                400,
                "horizon_regression",
                str(exc),
                horizon=exc.horizon,
                previous=exc.previous,
            )
        except (InvalidCylinderError, MoveError) as exc:
            _error(400, "invalid_move", str(exc))
        except ResourceBudgetError as exc:
            _error(400, "budget", str(exc))
        except (TypeError, ValueError) as exc:
            _error(400, "bad_request", str(exc))

    @app.get("/sessions/{session_id}")
    def fetch_session(session_id: str):
        try:
            return store.session_view(session_id)
        except KeyError:
            _error(404, "unknown_session", f"no session {session_id}")

    @app.get("/sessions/{session_id}/audit")
    def fetch_audit(session_id: str):
        try:
            return store.audit_view(session_id)
        except KeyError:
            _error(404, "unknown_session", f"no session {session_id}")

    @app.get("/sessions/{session_id}/prefix")
    def fetch_prefix(session_id: str, x_max: Optional[int] = Query(default=None, ge=0)):
        try:
            return store.prefix_view(session_id, x_max)
        except KeyError:
            _error(404, "unknown_session", f"no session {session_id}")
        except ResourceBudgetError as exc:
            _error(400, "budget", str(exc))

    return app


app = create_app()
