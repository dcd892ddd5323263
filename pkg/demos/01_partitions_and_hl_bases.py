"""Partitions, deformed bases, and structure constants.

Everything below is exact: coefficients are Fractions, and identities
either hold on the nose or fail loudly.
"""

from fractions import Fraction as F

from hlharmonic import (
    HLContext,
    Partition,
    covers_box,
    covers_two,
    enumerate_partitions,
    hl_P,
    hl_Q,
    n_stat,
    pieri_weight,
    structconst_f,
)

t = F(1, 3)

print("Partitions of 5, reverse-lex:", enumerate_partitions(5))
lam = Partition([3, 2, 2])
print(f"lam = {lam}: size {lam.size()}, conjugate {lam.conjugate()}, n-statistic {n_stat(lam)}")

print("\nOne-box covers of [2,1] (with the column of the new box):")
for m, j in covers_box(Partition([2, 1])):
    print(f"  [2,1] -> {m}  (column {j})")

print("\nTwo-box covers of [2,1] (one column or two consecutive columns):")
print(" ", covers_two(Partition([2, 1])))

# The orthogonal basis P at parameter t, expanded in power sums.
ctx = HLContext(t, 8)
for shape in ([1], [1, 1], [2], [2, 1]):
    print(f"\nP{Partition(shape)} =", hl_P(shape, ctx))
print(f"Q[2] = b * P[2] =", hl_Q([2], ctx))

# Multiplying two basis elements and re-expanding gives the structure
# constants; the single-box case has a closed form.
print("\nP[1] * P[1] expands with coefficients:", structconst_f([1], [1], ctx))
print("closed form for [1] -> [1,1]:", pieri_weight([1], [1, 1], t))
print("closed form for [1] -> [2]:  ", pieri_weight([1], [2], t))

# All product coefficients stay nonnegative for t in (0,1).
worst = min(
    (v for m in enumerate_partitions(3) for n in enumerate_partitions(3)
     for v in structconst_f(m, n, ctx).values()),
)
print("\nsmallest coefficient among degree-3 x degree-3 products:", worst)
