"""Tour of the representation-counting engines.

r_{A,h}(x) counts the multisets of size h drawn from A that sum to x.
Three engines compute the same table: a brute-force oracle, a dynamic
program, and a convolution scheme built on the cycle index of S_h.
All three work in exact integer arithmetic and must agree bit for bit.
"""

from sidonlab import (
    NaturalSet,
    partitions_at_most,
    rep_count,
    rep_table,
    rep_table_convolution,
    rep_table_dp,
    rep_table_oracle,
)

A = NaturalSet([0, 1, 3, 7, 12, 20])
print(f"A = {sorted(A)}")

# Single point: how many ways does 15 arise as a sum of three members?
for x in (8, 15, 24):
    print(f"  r(A, 3, {x}) = {rep_count(A, 3, x)}")

# Full tables from each engine over the whole decision range.
x_max = 3 * A.max
t_oracle = rep_table_oracle(A, 3, x_max)
t_dp = rep_table_dp(A, 3, x_max)
t_conv = rep_table_convolution(A, 3, x_max)
assert t_oracle.counts == t_dp.counts == t_conv.counts
print(f"engines agree on all {x_max + 1} entries (h=3)")

# The auto dispatcher picks convolution for h <= 4, the DP otherwise.
for h in (2, 4, 5):
    table = rep_table(A, h, h * A.max)
    nonzero = sum(1 for c in table.counts if c)
    print(f"  h={h}: engine={table.engine!r}, {nonzero} sums are representable")

# Intervals are the canonical dense example: counts at the right edge of
# {x, ..., t} are partition numbers, r = p_{<=h}(t - h*x).
x, t, h = 5, 26, 3
interval = NaturalSet(range(x, t + 1))
lhs = rep_count(interval, h, t)
rhs = partitions_at_most(t - h * x, h)
print(f"interval identity: r({{{x}..{t}}}, {h}, {t}) = {lhs} = p_<= {h}({t - h * x}) = {rhs}")
assert lhs == rhs

# Partition counts grow polynomially, degree h-1.
print("p_<=3(n) for n = 0..12:", [partitions_at_most(n, 3) for n in range(13)])
