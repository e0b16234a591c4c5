"""Record a scripted strategy-A session against the real engine.

The browser tests replay these fixtures through a mock transport, so
every byte the UI sees here was produced by the actual service: the
three round responses, the audit reports, the prefix tables, one stale
move rejected with 409, and one refinement violation rejected with 400.

Regenerate with:  python3 scripts/make_fixtures.py   (from frontend/)
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from sidonlab.server import SessionStore, create_app

OUT = Path(__file__).resolve().parent.parent / "test" / "fixtures" / "session_a.json"

client = TestClient(create_app(SessionStore(seed=424242)))

create_request = {
    "params": {"h": 2, "g": 1},
    "strategy": "A",
    "f": {"kind": "sqrt"},
    "opening": {"k": 1, "members": [0]},
}
r = client.post("/sessions", json=create_request)
assert r.status_code == 200, r.text
create_response = r.json()
sid = create_response["session_id"]

prefixes = [client.get(f"/sessions/{sid}/prefix").json()]

# Three moves: plain extension, extension with one toggled position above
# the locked horizon, plain extension again.
moves = []


def play(k, extra=()):
    locked = (moves[-1]["response"] if moves else create_response)["response"]
    members = sorted(set(locked["members"]) | set(extra))
    request = {
        "round_index": len(moves) + 1,
        "move": {"k": k, "members": members},
    }
    r = client.post(f"/sessions/{sid}/moves", json=request)
    assert r.status_code == 200, r.text
    moves.append({"request": request, "response": r.json()})
    prefixes.append(client.get(f"/sessions/{sid}/prefix").json())


play(20)
k1 = moves[0]["response"]["response"]["k"]
play(k1 + 10, extra=(k1 + 8,))
k2 = moves[1]["response"]["response"]["k"]
play(k2 + 8)

# Stale token: resubmitting the last move must bounce with 409.
r = client.post(f"/sessions/{sid}/moves", json=moves[-1]["request"])
assert r.status_code == 409, r.text
stale_move = {
    "request": moves[-1]["request"],
    "status": 409,
    "detail": r.json()["detail"],
}

# A move that drops a locked member: server rejects with the position.
final = moves[-1]["response"]["response"]
bad_request = {
    "round_index": len(moves) + 1,
    "move": {"k": final["k"] + 5, "members": [m for m in final["members"] if m != 7]},
}
r = client.post(f"/sessions/{sid}/moves", json=bad_request)
assert r.status_code == 400, r.text
violating_move = {
    "request": bad_request,
    "status": 400,
    "detail": r.json()["detail"],
}

fixtures = {
    "create_request": create_request,
    "create_response": create_response,
    "moves": moves,
    "prefixes": prefixes,
    "audit_final": client.get(f"/sessions/{sid}/audit").json(),
    "session_view_final": client.get(f"/sessions/{sid}").json(),
    "stale_move": stale_move,
    "violating_move": violating_move,
}

OUT.parent.mkdir(parents=True, exist_ok=True)
OUT.write_text(json.dumps(fixtures, indent=1, sort_keys=True) + "\n", encoding="ascii")
print(f"wrote {OUT} ({OUT.stat().st_size} bytes)")
for mv in moves:
    print(" round", mv["response"]["round_index"] - 1, "->", mv["response"]["round_data"])
