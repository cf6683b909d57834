"""Multi-round authentication service: registration, sessions, persistence
and the HTTP wire protocol.

Locks are stored server-side as graph matrices; the submitted key is the
secret.  Responses never carry stored lock labels: challenges expose only
the unlabelled topology of the current round's lock plus a rotation
counter for the client-side template carousel.
"""

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import (
    ConflictError,
    NotFoundError,
    PreconditionError,
    RuleError,
    SessionError,
    StoreError,
    TopsnutError,
    UndefinedLabelError,
    ValidationError,
)
from .graphs import GraphMatrix, gpw_from_matrix, graph_matrix, parse_graph_text
from .keylock import AuthRule, KeyLockPair, authenticate


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    rounds: tuple  # of (GraphMatrix, AuthRule)
    created_at: float


@dataclass
class Session:
    session_id: str
    user_id: str
    current_round: int = 1
    state: str = "active"
    attempts: int = 0


@dataclass(frozen=True)
class Challenge:
    round_index: int
    template_p: int
    template_edges: tuple
    rotation_position: int

    def to_json(self):
        return {
            "round": self.round_index,
            "template": {"p": self.template_p, "edges": [list(e) for e in self.template_edges]},
            "rotation_position": self.rotation_position,
        }


@dataclass(frozen=True)
class RoundOutcome:
    status: str  # continue | accepted | rejected
    challenge: Challenge = None


def _validate_lock(lock, rule):
    if rule.tag == "twin-odd-graceful":
        from .keylock import _twin_half_ok

        if lock.graph.q < 1 or not _twin_half_ok(lock, lock.graph.q):
            raise ValidationError("lock does not satisfy the twin conditions")
    elif rule.tag == "dual-pair":
        if not lock.labelling.is_total_on(lock.graph):
            raise ValidationError("dual-pair locks need a total vertex labelling")
    # every stored lock must survive the matrix round trip exactly
    rebuilt = gpw_from_matrix(graph_matrix(lock))
    if rebuilt.graph != lock.graph or rebuilt.labelling.vertex_labels != lock.labelling.vertex_labels:
        raise ValidationError("lock does not survive matrix serialization")


class AuthdService:
    """In-process service; see :func:`make_server` for the HTTP front."""

    def __init__(self, store_path=None):
        self.users = {}
        self.sessions = {}
        self._records = []
        self._rotation = 0
        self._lock = threading.RLock()
        self.store_path = store_path
        if store_path:
            try:
                with open(store_path, "r", encoding="utf-8") as fh:
                    self._replay(fh.read())
            except FileNotFoundError:
                pass

    # --- registration and persistence ---------------------------------

    def register(self, user_id, rounds, created_at=None, _persist=True):
        """Store a user's ordered lock rounds; duplicate ids conflict."""
        if not rounds:
            raise ValidationError("need at least one round")
        with self._lock:
            if user_id in self.users:
                raise ConflictError("user %r already registered" % user_id)
            fixed = []
            for lock, rule in rounds:
                if isinstance(rule, str):
                    rule = AuthRule(rule)
                _validate_lock(lock, rule)
                fixed.append((graph_matrix(lock), rule))
            record = UserRecord(user_id, tuple(fixed), created_at if created_at is not None else time.time())
            self.users[user_id] = record
            raw = {
                "op": "register",
                "user_id": user_id,
                "created_at": record.created_at,
                "rounds": [
                    {"matrix": m.to_text(), "rule": r.tag} for m, r in record.rounds
                ],
            }
            self._records.append(raw)
            if _persist and self.store_path:
                with open(self.store_path, "a", encoding="utf-8") as fh:
                    fh.write(_encode_record(raw) + "\n")
            return record

    def _replay(self, text):
        for n, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
                rounds = [
                    (gpw_from_matrix(GraphMatrix.from_text(r["matrix"])), AuthRule(r["rule"]))
                    for r in raw["rounds"]
                ]
                self.register(raw["user_id"], rounds, created_at=raw["created_at"], _persist=False)
            except (ValueError, KeyError, TypeError, TopsnutError) as exc:
                raise StoreError("corrupt store record at line %d: %s" % (n, exc), line=n) from exc

    def store_save(self, path=None):
        """Rewrite the full record log, byte-stable."""
        path = path or self.store_path
        if path is None:
            raise StoreError("no store path configured")
        with self._lock:
            with open(path, "w", encoding="utf-8") as fh:
                for raw in self._records:
                    fh.write(_encode_record(raw) + "\n")

    def store_load(self, path):
        """Replay a record log into a fresh state."""
        with self._lock:
            self.users = {}
            self.sessions = {}
            self._records = []
            with open(path, "r", encoding="utf-8") as fh:
                self._replay(fh.read())

    # --- sessions -------------------------------------------------------

    def _challenge(self, record, round_index):
        matrix, _rule = record.rounds[round_index - 1]
        lock = gpw_from_matrix(matrix)
        with self._lock:
            self._rotation += 1
            position = self._rotation
        return Challenge(round_index, lock.graph.p, tuple(lock.graph.edges), position)

    def start_session(self, user_id):
        with self._lock:
            record = self.users.get(user_id)
            if record is None:
                raise NotFoundError("unknown user %r" % user_id)
            session = Session(secrets.token_hex(16), user_id)
            self.sessions[session.session_id] = session
        return session, self._challenge(record, 1)

    def submit_round(self, session_id, key):
        """Authenticate one round; wrong keys terminate the session."""
        with self._lock:
            session = self.sessions.get(session_id)
            if session is None:
                raise SessionError("unknown session %r" % session_id)
            if session.state != "active":
                raise SessionError("session already %s" % session.state)
            record = self.users[session.user_id]
            matrix, rule = record.rounds[session.current_round - 1]
            lock = gpw_from_matrix(matrix)
            try:
                ok = authenticate(KeyLockPair(key, lock, rule))
            except (PreconditionError, UndefinedLabelError, RuleError) as exc:
                raise ValidationError("malformed key: %s" % exc) from exc
            session.attempts += 1
            if not ok:
                session.state = "rejected"
                return RoundOutcome("rejected")
            if session.current_round == len(record.rounds):
                session.state = "accepted"
                return RoundOutcome("accepted")
            session.current_round += 1
            next_round = session.current_round
        return RoundOutcome("continue", self._challenge(record, next_round))


def _encode_record(raw):
    return json.dumps(raw, sort_keys=True, separators=(",", ":"))


# --- HTTP layer ---------------------------------------------------------


def _error_status(exc):
    if isinstance(exc, ConflictError):
        return 409
    if isinstance(exc, (NotFoundError, SessionError)):
        return 404
    return 400


def make_server(service, host="127.0.0.1", port=0):
    """ThreadingHTTPServer speaking the JSON wire protocol."""

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):
            pass

        def _reply(self, status, payload):
            body = json.dumps(payload).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _body(self):
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length) if length else b"{}"
            try:
                return json.loads(raw.decode("utf-8"))
            except ValueError as exc:
                raise ValidationError("bad JSON body: %s" % exc) from exc

        def do_GET(self):
            if self.path == "/health":
                self._reply(200, {"status": "ok", "users": len(service.users)})
            else:
                self._reply(404, {"error": "no such endpoint"})

        def do_POST(self):
            try:
                if self.path == "/users":
                    data = self._body()
                    rounds = []
                    for r in data.get("rounds", []):
                        lock = parse_graph_text(r["graph"])
                        rounds.append((lock, AuthRule(r.get("rule", "twin-odd-graceful"))))
                    record = service.register(data["user_id"], rounds)
                    self._reply(201, {"user_id": record.user_id, "rounds": len(record.rounds)})
                elif self.path == "/sessions":
                    data = self._body()
                    session, challenge = service.start_session(data["user_id"])
                    self._reply(201, {
                        "session_id": session.session_id,
                        "round": session.current_round,
                        "challenge": challenge.to_json(),
                    })
                elif self.path.startswith("/sessions/") and self.path.endswith("/rounds"):
                    session_id = self.path[len("/sessions/"):-len("/rounds")]
                    data = self._body()
                    key = parse_graph_text(data["graph"])
                    outcome = service.submit_round(session_id, key)
                    payload = {"result": outcome.status}
                    if outcome.challenge is not None:
                        payload["challenge"] = outcome.challenge.to_json()
                    self._reply(200, payload)
                else:
                    self._reply(404, {"error": "no such endpoint"})
            except (KeyError, TypeError) as exc:
                self._reply(400, {"error": "bad request: %s" % exc})
            except TopsnutError as exc:
                self._reply(_error_status(exc), {"error": str(exc)})

    return ThreadingHTTPServer((host, port), Handler)


def serve(host, port, store_path):
    service = AuthdService(store_path)
    server = make_server(service, host, port)
    return server
