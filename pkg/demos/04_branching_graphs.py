"""Branching graphs and coherent sequences.

The standard graph adds one box per level with the deformed single-box
weights; the even and odd graphs add two boxes (one column or two
consecutive columns) with weights read off from the p_2 action in the
modified basis.  Normalized harmonic functionals correspond exactly to
sequences of probability vectors compatible under the level projections.
"""

from fractions import Fraction as F

from hlharmonic import (
    GraphKind,
    build_levels,
    coherence_check,
    embed_even,
    functional_to_coherent,
    phi_row,
    plancherel,
    simplex_project,
)

t = F(1, 3)

g = GraphKind("standard", t)
levels = build_levels(g, 4)
print("standard graph, level 3 dimensions:")
for v, d in levels[3].dims.items():
    print(f"  d({v}) = {d}")
print("stochasticity check:", coherence_check(g, 4, levels))

ge = GraphKind("even", t)
lv = build_levels(ge, 3)
print("\neven graph, level 1 edges from the root:")
for src, dst, w in lv[1].edges:
    print(f"  {src} => {dst}   weight {w}")

go = GraphKind("odd", t)
print("odd graph root:", go.root(), "| level sizes:", [go.level_size(n) for n in range(4)])

# A normalized harmonic functional yields one probability vector per level.
print("\ncoherent sequence of the even indicator functional:")
xs = functional_to_coherent(ge, plancherel("even", 8), 3)
for n, xn in enumerate(xs):
    print(f"  level {n}: {{{', '.join(f'{v}: {c}' for v, c in xn.items())}}}")
    assert sum(xn.values()) == 1

# Projections are compatible: pushing level n down reproduces level n-1.
print("\nprojection consistency:",
      all(simplex_project(ge, xs[n]) == xs[n - 1] for n in (1, 2, 3)))

# Works equally for images of the embedding.
psi = embed_even(phi_row(t * t, 4))
xs2 = functional_to_coherent(ge, psi, 3)
print("row-functional image is coherent too:",
      all(sum(x.values()) == 1 for x in xs2))
