"""Deciding the B_h[g] property, and forcing its failure.

A set is B_h[g] when no value has more than g representations as a sum
of h members.  The verifier scans the decision range and reports the
smallest violation with an explicit list of multisets.  The gadget goes
the other way: given any finite F0 it appends one interval so that the
result provably violates the bound, whatever F0 looked like.
"""

from sidonlab import NaturalSet, Params, gadget_target, is_bhg, violation_gadget

p = Params(h=2, g=1)

good = NaturalSet([0, 1, 3, 7])
verdict = is_bhg(good, p)
print(f"{sorted(good)} is B_2[1]: {verdict.is_bhg}")

bad = NaturalSet([0, 1, 2, 4])
verdict = is_bhg(bad, p)
w = verdict.witness
print(f"{sorted(bad)} is B_2[1]: {verdict.is_bhg}")
print(f"  smallest violation at x={w.x}: {' '.join(map(str, w.representations))}")

# The gadget: F0 union [x_0, h(x_0+g)] with x_0 = 1 + max F0.  The right
# endpoint then has at least g+1 representations, all inside the interval.
for h, g, f0 in ((2, 1, [0]), (3, 2, [2, 5]), (2, 3, [0])):
    params = Params(h, g)
    F0 = NaturalSet(f0)
    A = violation_gadget(F0, params)
    target = gadget_target(F0, params)
    verdict = is_bhg(A, params)
    assert not verdict.is_bhg
    print(
        f"gadget h={h} g={g} F0={f0}: A has {len(A)} members, "
        f"target x={target}, witness at x={verdict.witness.x}"
    )
