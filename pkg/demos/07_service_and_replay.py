"""The HTTP service, driven in-process, plus journal replay.

Every state change the service performs is appended to a journal as one
canonical JSON line.  Replaying the journal against a fresh store must
reproduce each recorded response byte for byte, and the rebuilt store
must serve identical session views and audits.  A single flipped digit
anywhere in the file is caught.
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from sidonlab.server import SessionStore, create_app, replay_journal

journal = Path(tempfile.mkdtemp()) / "journal.jsonl"
store = SessionStore(journal_path=str(journal), seed=12345)
client = TestClient(create_app(store))

r = client.post(
    "/sessions",
    json={
        "params": {"h": 2, "g": 1},
        "strategy": "A",
        "f": {"kind": "sqrt"},
        "opening": {"k": 1, "members": [0]},
    },
)
created = r.json()
sid = created["session_id"]
print(f"created session {sid}, response horizon k={created['response']['k']}")

move = {"round_index": 1, "move": {"k": 25, "members": created["response"]["members"]}}
r = client.post(f"/sessions/{sid}/moves", json=move)
print(f"move accepted, round_data = {r.json()['round_data']}")

# A stale round index is rejected with 409 instead of corrupting state.
stale = client.post(f"/sessions/{sid}/moves", json=move)
print(f"replayed move: {stale.status_code} {stale.json()['detail']['error']}")

audit = client.get(f"/sessions/{sid}/audit").json()
print(f"audit: strategy {audit['strategy']}, all_pass={audit['all_pass']}")

replayed, mismatches = replay_journal(str(journal))
print(f"journal: {len(journal.read_text().splitlines())} lines, {len(mismatches)} mismatches")
assert replayed.audit_view(sid) == store.audit_view(sid)

# Tamper with one recorded response and replay again.
lines = journal.read_text().splitlines()
record = json.loads(lines[1])
record["response"]["round_data"]["t"] += 1
tampered = journal.with_name("tampered.jsonl")
tampered.write_text("\n".join([lines[0], json.dumps(record)]) + "\n")
_, mismatches = replay_journal(str(tampered))
print(f"tampered journal: {len(mismatches)} mismatch detected at line {mismatches[0]['line']}")
