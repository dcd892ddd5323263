"""Harmonic positive functionals: construction, embeddings, and mixing.

A functional is a value table on power sums.  The interesting cones are
cut out by two conditions: invariance under appending a part (1 or 2),
and nonnegativity on the (modified) orthogonal basis.
"""

from fractions import Fraction as F

from hlharmonic import (
    Partition,
    check_HL_positive,
    check_p1_harmonic,
    check_p2_harmonic,
    dilate_A,
    convolve_std,
    embed_even,
    embed_odd,
    extreme_phi,
    mix_twisted,
    phi_col,
    phi_row,
    plancherel,
)

t = F(1, 3)
t2 = t * t

# The classical two-sequence family of extreme points.
phi = extreme_phi((F(1, 2), F(1, 4)), (F(1, 8),), t, 8)
print("extreme functional values:",
      {str(Partition(k)): str(phi.value(k)) for k in [(), (1,), (2,), (2, 1)]})
print("p1-harmonic:", check_p1_harmonic(phi, 7)[0],
      "| positive:", check_HL_positive(phi, t, 8)[0])

# Mixing two functionals through the coproduct keeps both properties.
mixed = convolve_std(dilate_A(phi_row(t, 8), F(2, 3)), dilate_A(phi_col(t, 8), F(1, 3)))
print("\nstandard mixing of row and column functionals:")
print("  p1-harmonic:", check_p1_harmonic(mixed, 7)[0],
      "| positive:", check_HL_positive(mixed, t, 8)[0])

# Embeddings into the even/odd worlds at parameter -t.
psi_even = embed_even(phi_row(t2, 5))
psi_odd = embed_odd(phi_row(t2, 5))
print("\neven image: psi(1) =", psi_even.value(()), "| psi(p[2]) =", psi_even.value((2,)),
      "| psi(p[1,1]) =", psi_even.value((1, 1)))
print("odd image:  psi(p[1]) =", psi_odd.value((1,)), "| psi(p[2,1]) =", psi_odd.value((2, 1)))
print("even image p2-harmonic:", check_p2_harmonic(psi_even, 8)[0],
      "| modified-positive:", check_HL_positive(psi_even, t, 10, modified=True)[0])

# Twisted mixing: weights (r, s) with 2r + s = 1, s fed as u = sqrt(s).
tw = mix_twisted(phi_row(t2, 5), plancherel("even", 12), t, r=F(3, 8), u=F(1, 2))
print("\ntwisted mixing with (r, s) = (3/8, 1/4):")
print("  normalized:", tw.value(()) == 1,
      "| p2-harmonic:", check_p2_harmonic(tw, 8)[0],
      "| modified-positive:", check_HL_positive(tw, t, 10, modified=True)[0])

# The pure-power functional maps onto the even/odd indicator functionals.
pa = plancherel("A", 5)
print("\npure-power functional maps to the even indicator:",
      embed_even(pa).equal_upto(plancherel("even", 10), 10))
print("and to the odd indicator:",
      embed_odd(pa).equal_upto(plancherel("odd", 10), 10))
