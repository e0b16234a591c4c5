"""Greedy B_h[g] sequences.

Extending a seed by the smallest admissible candidate at each step gives
the classical greedy sequences.  Seed {1} with h=2, g=1 reproduces
Mian-Chowla; other parameter choices give denser relatives.
"""

from sidonlab import NaturalSet, Params, greedy_bhg

mian_chowla = greedy_bhg(NaturalSet([1]), Params(2, 1), count=15, bound=1000)
print("Mian-Chowla:", sorted(mian_chowla))

# Raising g thickens the sequence; raising h thins it.
for h, g, count in ((2, 2, 12), (2, 3, 12), (3, 1, 10), (4, 1, 7)):
    seq = greedy_bhg(NaturalSet([0]), Params(h, g), count=count, bound=100_000)
    print(f"h={h} g={g}:", sorted(seq))

# Greedy growth versus the counting lower bound: a B_2[1] subset of
# [0, n] has at most about sqrt(2n) members, so the n-th greedy term
# must grow at least quadratically.
terms = sorted(greedy_bhg(NaturalSet([0]), Params(2, 1), count=20, bound=10**6))
print("growth check (term / index^2):")
for i in (5, 10, 15, 19):
    print(f"  a_{i} = {terms[i]:>4}   ratio {terms[i] / (i * i):.2f}")
