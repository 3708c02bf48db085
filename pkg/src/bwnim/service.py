"""HTTP play and analysis service on the standard-library HTTP server.

JSON API:
  POST /games                {spec, k, start, mode}        -> 201 session state
  GET  /games/{id}                                         -> session state
  GET  /games/{id}/legal-moves                             -> {moves: [...]}
  POST /games/{id}/moves     {heap_size_from, to[, index]} -> state (+ engine reply)
  GET  /analysis?spec=&pos=[&max=]                         -> {outcome, grundy, winning_targets}

Sessions live in memory; an optional append-only JSON-lines snapshot replays
them on restart.  Every rejection carries a machine-readable {"reason": ...}.
In human-vs-engine mode the engine reply lands atomically in the same
response as the human move.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .engine import engine_move
from .gamecore import (
    GameSpec,
    Position,
    canonical,
    is_legal,
    legal_moves,
    parse_game_spec,
)
from .solver import (
    OUTCOME_ILLEGAL,
    OUTCOME_P,
    cached_outcome_table,
    grundy_table,
)

MODE_HUMAN_VS_ENGINE = "HumanVsEngine"
MODE_HUMAN_VS_HUMAN = "HumanVsHuman"

STATUS_IN_PROGRESS = "InProgress"
STATUS_FINISHED = "Finished"


class ServiceError(Exception):
    def __init__(self, status: int, reason: str):
        super().__init__(reason)
        self.status = status
        self.reason = reason


@dataclass
class Session:
    id: str
    spec_text: str
    spec: GameSpec
    position: Position
    mode: str
    start: Position = ()
    history: list[dict] = field(default_factory=list)
    status: str = STATUS_IN_PROGRESS
    winner: str | None = None
    to_move: str | None = None

    def state(self) -> dict:
        return {
            "id": self.id,
            "spec": self.spec_text,
            "k": self.spec.k,
            "start": list(self.start),
            "position": list(self.position),
            "mode": self.mode,
            "status": self.status,
            "winner": self.winner,
            "to_move": self.to_move,
            "history": list(self.history),
        }


def _grundy_cache_key(spec: GameSpec, bound: int):
    return (spec, bound)


class GameService:
    """All game state plus the solver-table caches, behind one lock."""

    def __init__(self, analysis_cap: int = 128, snapshot_path: str | None = None):
        self.analysis_cap = analysis_cap
        self.snapshot_path = snapshot_path
        self.sessions: dict[str, Session] = {}
        self.lock = threading.RLock()
        self._grundy_cache: dict = {}
        if snapshot_path:
            self._replay_snapshot(snapshot_path)

    # -- snapshot ---------------------------------------------------------

    def _replay_snapshot(self, path: str) -> None:
        try:
            fh = open(path, "r", encoding="utf-8")
        except FileNotFoundError:
            return
        with fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                state = json.loads(line)["session"]
                spec = parse_game_spec(state["spec"], state["k"])
                self.sessions[state["id"]] = Session(
                    id=state["id"],
                    spec_text=state["spec"],
                    spec=spec,
                    position=tuple(state["position"]),
                    mode=state["mode"],
                    start=tuple(state.get("start", state["position"])),
                    history=state["history"],
                    status=state["status"],
                    winner=state["winner"],
                    to_move=state["to_move"],
                )

    def _snapshot(self, event: str, session: Session) -> None:
        if not self.snapshot_path:
            return
        record = {"event": event, "session": session.state()}
        with open(self.snapshot_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    # -- sessions ---------------------------------------------------------

    def create_game(self, payload: dict) -> dict:
        spec_text = payload.get("spec")
        k = payload.get("k")
        start = payload.get("start")
        mode = payload.get("mode", MODE_HUMAN_VS_ENGINE)
        if not isinstance(spec_text, str) or start is None:
            raise ServiceError(422, "spec and start are required")
        if mode not in (MODE_HUMAN_VS_ENGINE, MODE_HUMAN_VS_HUMAN):
            raise ServiceError(422, f"unknown mode {mode!r}")
        if isinstance(start, str):
            sizes = [int(v) for v in start.split(",") if v.strip() != ""]
        elif isinstance(start, list):
            sizes = [int(v) for v in start]
        else:
            raise ServiceError(422, "start must be a comma list or an array")
        if k is None:
            k = len(sizes)
        try:
            spec = parse_game_spec(spec_text, int(k))
            position = canonical(sizes)
            if len(position) != spec.k:
                raise ValueError(f"expected {spec.k} heap sizes, got {len(position)}")
            if not is_legal(spec, position):
                raise ValueError("start position violates color rule")
        except ValueError as exc:
            raise ServiceError(422, str(exc))
        session = Session(
            id=uuid.uuid4().hex[:12],
            spec_text=spec_text,
            spec=spec,
            position=position,
            mode=mode,
            start=position,
            to_move="human" if mode == MODE_HUMAN_VS_ENGINE else "player1",
        )
        if not legal_moves(spec, position):
            # degenerate start: the mover to come has already lost
            session.status = STATUS_FINISHED
            session.winner = self._other(session, session.to_move)
            session.to_move = None
        with self.lock:
            self.sessions[session.id] = session
            self._snapshot("create", session)
        return session.state()

    @staticmethod
    def _other(session: Session, player: str) -> str:
        if session.mode == MODE_HUMAN_VS_ENGINE:
            return "engine" if player == "human" else "human"
        return "player2" if player == "player1" else "player1"

    def _session(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise ServiceError(404, "unknown session")
        return session

    def get_game(self, session_id: str) -> dict:
        with self.lock:
            return self._session(session_id).state()

    def list_legal_moves(self, session_id: str) -> dict:
        with self.lock:
            session = self._session(session_id)
            moves = legal_moves(session.spec, session.position)
            return {
                "position": list(session.position),
                "moves": [
                    {"heap_size_from": m.heap_from, "to": m.heap_to,
                     "target": list(m.target)}
                    for m in moves
                ],
            }

    def _apply(self, session: Session, player: str, heap_from: int, heap_to: int) -> None:
        pos = list(session.position)
        pos.remove(heap_from)
        pos.append(heap_to)
        session.position = canonical(pos)
        session.history.append({
            "player": player,
            "heap_size_from": heap_from,
            "to": heap_to,
            "position": list(session.position),
        })
        if legal_moves(session.spec, session.position):
            session.to_move = self._other(session, player)
        else:
            session.status = STATUS_FINISHED
            session.winner = player
            session.to_move = None

    def apply_move(self, session_id: str, payload: dict) -> dict:
        with self.lock:
            session = self._session(session_id)
            if session.status != STATUS_IN_PROGRESS:
                raise ServiceError(422, "game is finished")
            mover = session.to_move
            if session.mode == MODE_HUMAN_VS_ENGINE and mover != "human":
                raise ServiceError(422, "not the human's turn")
            try:
                heap_from = int(payload["heap_size_from"])
                heap_to = int(payload["to"])
            except (KeyError, TypeError, ValueError):
                raise ServiceError(422, "heap_size_from and to must be integers")
            if heap_from not in session.position:
                raise ServiceError(422, f"no heap of size {heap_from}")
            index = payload.get("index")
            if index is not None:
                same = session.position.count(heap_from)
                if not (isinstance(index, int) and 0 <= index < same):
                    raise ServiceError(422, f"bad index {index!r} for size {heap_from}")
            if not (0 <= heap_to < heap_from):
                raise ServiceError(422, "move must lower the heap")
            target = list(session.position)
            target.remove(heap_from)
            target.append(heap_to)
            if not is_legal(session.spec, canonical(target)):
                raise ServiceError(422, "target position has no black heap")
            self._apply(session, mover, heap_from, heap_to)
            engine_reply = None
            if (session.mode == MODE_HUMAN_VS_ENGINE
                    and session.status == STATUS_IN_PROGRESS
                    and session.to_move == "engine"):
                move = engine_move(session.spec, session.position)
                self._apply(session, "engine", move.heap_from, move.heap_to)
                engine_reply = {"heap_size_from": move.heap_from,
                                "to": move.heap_to,
                                "position": list(move.target)}
            self._snapshot("move", session)
            state = session.state()
            state["engine_move"] = engine_reply
            return state

    # -- analysis ----------------------------------------------------------

    def analysis(self, params: dict) -> dict:
        spec_text = params.get("spec")
        pos_text = params.get("pos")
        if not spec_text or not pos_text:
            raise ServiceError(422, "spec and pos query parameters are required")
        try:
            sizes = canonical(int(v) for v in pos_text.split(","))
            spec = parse_game_spec(spec_text, len(sizes))
        except ValueError as exc:
            raise ServiceError(422, str(exc))
        bound = int(params.get("max", max(sizes) if sizes else 0))
        bound = max(bound, max(sizes, default=0))
        if bound > self.analysis_cap:
            raise ServiceError(422, f"analysis bound {bound} over cap {self.analysis_cap}")
        table = cached_outcome_table(spec, bound)
        verdict = table.entries[sizes]
        if verdict == OUTCOME_ILLEGAL:
            return {"spec": spec_text, "position": list(sizes),
                    "outcome": OUTCOME_ILLEGAL, "grundy": None,
                    "winning_targets": []}
        with self.lock:
            key = _grundy_cache_key(spec, bound)
            gt = self._grundy_cache.get(key)
            if gt is None:
                gt = grundy_table(spec, bound)
                self._grundy_cache[key] = gt
        winning = [list(m.target) for m in legal_moves(spec, sizes)
                   if table.entries[m.target] == OUTCOME_P]
        return {
            "spec": spec_text,
            "position": list(sizes),
            "outcome": verdict,
            "grundy": gt.entries[sizes],
            "winning_targets": winning,
        }


_GAME_RE = re.compile(r"^/games/([^/]+)$")
_MOVES_RE = re.compile(r"^/games/([^/]+)/moves$")
_LEGAL_RE = re.compile(r"^/games/([^/]+)/legal-moves$")


class _Handler(BaseHTTPRequestHandler):
    service: GameService  # injected by make_server

    def log_message(self, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError:
            raise ServiceError(400, "body must be JSON")
        if not isinstance(payload, dict):
            raise ServiceError(400, "body must be a JSON object")
        return payload

    def _dispatch(self, method: str) -> None:
        url = urlparse(self.path)
        try:
            if method == "POST" and url.path == "/games":
                self._send(201, self.service.create_game(self._body()))
                return
            m = _MOVES_RE.match(url.path)
            if method == "POST" and m:
                self._send(200, self.service.apply_move(m.group(1), self._body()))
                return
            m = _LEGAL_RE.match(url.path)
            if method == "GET" and m:
                self._send(200, self.service.list_legal_moves(m.group(1)))
                return
            m = _GAME_RE.match(url.path)
            if method == "GET" and m:
                self._send(200, self.service.get_game(m.group(1)))
                return
            if method == "GET" and url.path == "/analysis":
                params = {k: v[0] for k, v in parse_qs(url.query).items()}
                self._send(200, self.service.analysis(params))
                return
            self._send(404, {"reason": "no such endpoint"})
        except ServiceError as exc:
            self._send(exc.status, {"reason": exc.reason})
        except Exception as exc:  # defensive: never drop the connection silently
            self._send(500, {"reason": f"internal error: {exc}"})

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")


def make_server(host: str = "127.0.0.1", port: int = 0,
                analysis_cap: int = 128,
                snapshot_path: str | None = None) -> ThreadingHTTPServer:
    service = GameService(analysis_cap=analysis_cap, snapshot_path=snapshot_path)
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str = "127.0.0.1", port: int = 8046,
          analysis_cap: int = 128, snapshot_path: str | None = None) -> None:
    server = make_server(host, port, analysis_cap, snapshot_path)
    host_shown, port_shown = server.server_address[:2]
    print(f"bwnim service on http://{host_shown}:{port_shown}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
