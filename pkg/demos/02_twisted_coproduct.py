"""The doubled action, its adjoint coproduct, and the sign obstruction.

The map pi doubles every power-sum index; acting by pi(a) * b on the
modified basis at parameter -t has nonnegative structure constants.
Dualizing the action gives a twisted coproduct whose left leg pairs at
t^2 and right leg at -t.  The ordinary coproduct, by contrast, produces
signs in the modified basis, which is why the twisted one matters.
"""

from fractions import Fraction as F

from hlharmonic import (
    HLContext,
    Partition,
    find_negative_fbar,
    mackey_check,
    p,
    plethysm_pi,
    structconst_fbar,
    structconst_ftilde,
    twisted_coproduct,
    xi,
)

t = F(1, 3)

print("pi doubles indices:  pi(p[2,1]) =", plethysm_pi(p([2, 1])))
print("xi doubles values:   xi(p[2,1]) =", xi(p([2, 1])))

print("\nTwisted coproduct on small power sums:")
for mu in ([1], [2], [3], [2, 2]):
    print(f"  p{Partition(mu)} ->", twisted_coproduct(p(mu), t))

# Structure constants of the doubled action in the modified basis.
ctx_a = HLContext(t * t, 4)
ctx_b = HLContext(-t, 9)
print("\npi(P[1]; t^2) * Ptilde[] expands with coefficients:",
      structconst_ftilde([1], [], ctx_a, ctx_b))
print("pi(P[1]; t^2) * Ptilde[2,1]:",
      structconst_ftilde([1], [2, 1], ctx_a, ctx_b))

# The compatibility identity between the two coproducts, checked exactly.
ok, _ = mackey_check(p([2, 1]), p([4, 1]), t)
print("\ncompatibility identity on a = p[2,1], b = p[4,1]:", "holds" if ok else "FAILS")

# The ordinary coproduct is NOT positivity-friendly in the modified basis:
print("\nsign-twisted constants for mu = nu = [1]:", structconst_fbar([1], [1], ctx_b))
print("first negative witness at cap 4:", find_negative_fbar(t, 4))
