"""A full Banach-Mazur session under strategy A.

Player I narrows the future by fixing ever longer prefixes; Player II
answers each move by appending one interval.  Strategy A drives the
representation function above any prescribed growth target f while
also pinning a fresh zero each round, so the limit set is very far
from B_h[g] in a quantitative sense.

The audit replays the transcript against the committed prefix and
re-checks both guarantees for every round from the raw counts.
"""

from sidonlab import (
    Cylinder,
    GrowthFunction,
    NaturalSet,
    Params,
    audit_transcript,
    open_session,
    rep_count,
)

session = open_session(
    Params(h=2, g=1),
    "A",
    f=GrowthFunction(kind="sqrt"),
    opening=Cylinder(k=1, members=NaturalSet([0])),
)
session.respond()

# Player I plays three more rounds, each time extending the horizon and
# sprinkling in a few extra members above the locked region.
for extension, extras in ((4, ()), (9, (1,)), (2, ())):
    members, k = session.limit_prefix()
    new_k = k + extension
    move = Cylinder(k=new_k, members=members.union(NaturalSet([k + e for e in extras])))
    session.player1_move(move)
    session.respond()

for m, rnd in enumerate(session.rounds):
    x, t = rnd.data["x"], rnd.data["t"]
    print(f"round {m}: I fixed k={rnd.player1.k}, II answered with [{x}, {t}], horizon {t}")

A, horizon = session.limit_prefix()
print(f"limit prefix: {len(A)} members committed up to {horizon}")

report = audit_transcript(session)
for chk in report.checks:
    print(
        f"  m={chk.m}: r(A,2,{chk.zero_target}) = {chk.zero_count},  "
        f"r(A,2,{chk.t_m}) = {chk.count_at_t} >= {chk.threshold} = (m+1)*f(t_m)"
    )
print("audit all_pass:", report.all_pass)

# The zeros survive because each interval starts past h*(1+k_m): no two
# committed members can reach the pinned target any more.
m0 = session.rounds[0]
assert rep_count(A, 2, 2 * (1 + m0.player1.k)) == 0
