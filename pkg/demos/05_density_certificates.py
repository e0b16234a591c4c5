"""Strategy B: density forcing and counting-bound certificates.

Strategy B ignores representation counts entirely.  Player II floods
each window (k_m, y_m] completely, pushing the lower density of the
limit set to 1.  A pigeonhole certificate then shows the result cannot
be B_h[g]: once a window holds s members with C(s, h) > h*g*y, some
value must collect more than g representations.
"""

from fractions import Fraction

from sidonlab import (
    Cylinder,
    NaturalSet,
    Params,
    audit_transcript,
    counting_bound_certificate,
    is_bhg,
    open_session,
    prefix_density,
)

p = Params(h=2, g=1)
session = open_session(p, "B", opening=Cylinder(k=1, members=NaturalSet([0])))
session.respond()

for extension in (3, 10, 25, 60):
    members, k = session.limit_prefix()
    session.player1_move(Cylinder(k=k + extension, members=members))
    session.respond()

A, horizon = session.limit_prefix()
for m, rnd in enumerate(session.rounds):
    k_m, y_m = rnd.player1.k, rnd.data["y"]
    ratio = Fraction(A.count_in(k_m + 1, y_m), y_m)
    print(f"round {m}: window ({k_m}, {y_m}] filled, ratio {ratio} >= {Fraction(m, m + 1)}")

report = prefix_density(A, horizon, tail_start=max(1, horizon // 2))
print(f"prefix density: min ratio over [{report.tail_start}, {horizon}] is {report.min_tail}")

# The audit attaches a certificate to every round where the pigeonhole
# threshold is crossed.
audit = audit_transcript(session)
certs = audit.certificates()
cert = certs[0]
print(
    f"first certificate: window ({cert.k}, {cert.y}] holds s={cert.s} members, "
    f"C(s,2) = {cert.subsets} > {cert.cap} = h*g*y"
)
assert cert == counting_bound_certificate(A, cert.k, cert.y, p)

# Certificates are sound: the certified window really does violate the
# bound, and the verifier can exhibit the collision explicitly.
verdict = is_bhg(A.restrict(0, cert.y), p)
w = verdict.witness
print(f"verified: x={w.x} has representations {' '.join(map(str, w.representations))}")
