"""Branching graphs on partitions with deformed edge weights.

Three graphs are supported at a user parameter t:

  standard  vertices at level n are partitions of n, edges add one box,
            weights are the closed-form single-box coefficients at t,
            t in (-1, 1);
  even      vertices at level n are partitions of 2n, root empty;
  odd       vertices at level n are partitions of 2n+1, root (1).

Even/odd edges join nu to the lam obtained by adding two boxes in one
column or two consecutive columns; the weight is the coefficient of
Ptilde_lam in p_2 * Ptilde_nu at parameter -t, computed by expansion
(t in (0, 1)).

The dimension function d satisfies d(root) = 1 and
d(v') = sum over incoming edges of d(v) * w(v, v'), which makes the
per-vertex stochasticity identity sum d(v) w(v, v') / d(v') = 1 exact;
coherence_check verifies it from the stored level data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hlbasis import HLContext, expand_in_P_tilde, hl_P, hl_P_tilde
from .partitions import EMPTY, Partition, covers_box, enumerate_partitions
from .symring import _as_scalar, p
from .hlbasis import pieri_weight
from .functionals import Functional

KINDS = ("standard", "even", "odd")


@dataclass(frozen=True)
class GraphKind:
    """Which branching graph, together with the user-facing parameter t."""

    kind: str
    t: Fraction

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        object.__setattr__(self, "t", _as_scalar(self.t))
        if self.kind == "standard":
            if not -1 < self.t < 1:
                raise ValueError("standard graph needs t in (-1, 1)")
        elif not 0 < self.t < 1:
            raise ValueError(f"{self.kind} graph needs t in (0, 1)")

    def root(self) -> Partition:
        return Partition([1]) if self.kind == "odd" else EMPTY

    def level_size(self, n: int) -> int:
        """Partition size at level n."""
        if self.kind == "standard":
            return n
        return 2 * n if self.kind == "even" else 2 * n + 1

    def level_vertices(self, n: int) -> list:
        if n == 0:
            return [self.root()]
        return enumerate_partitions(self.level_size(n))


@dataclass
class LevelData:
    """One graph level: its vertices, incoming edges, and dimensions."""

    level: int
    vertices: list
    edges: list = field(default_factory=list)  # (source, target, weight)
    dims: dict = field(default_factory=dict)


def _basis_context(g: GraphKind, up_to: int, ctx: HLContext | None) -> HLContext | None:
    if g.kind == "standard":
        return None
    param = -g.t
    cap = g.level_size(up_to)
    if ctx is None:
        return HLContext(param, cap)
    if ctx.t != param:
        raise ValueError(f"context parameter {ctx.t} does not match -t = {param}")
    if ctx.degree_cap < cap:
        raise ValueError("context degree cap too small for requested levels")
    return ctx


def build_levels(g: GraphKind, up_to: int, ctx: HLContext | None = None) -> list:
    """Levels 0..up_to with edges stored on the target level.

    Every edge weight must come out strictly positive; a nonpositive
    weight raises, since the structure would not be a branching graph.
    """
    ctx = _basis_context(g, up_to, ctx)
    root = g.root()
    levels = [LevelData(0, [root], [], {root: Fraction(1)})]
    p2 = p([2])
    for n in range(1, up_to + 1):
        verts = g.level_vertices(n)
        edges = []
        for nu in levels[n - 1].vertices:
            if g.kind == "standard":
                targets = [(lam, pieri_weight(nu, lam, g.t)) for lam, _ in covers_box(nu)]
            else:
                expansion = expand_in_P_tilde(p2 * hl_P_tilde(nu, ctx), ctx)
                targets = sorted(expansion.items(), reverse=True)
            for lam, w in targets:
                if w <= 0:
                    raise ValueError(f"nonpositive edge weight {w} on {nu!r} -> {lam!r}")
                edges.append((nu, lam, w))
        dims = {}
        prev = levels[n - 1].dims
        for src, dst, w in edges:
            dims[dst] = dims.get(dst, Fraction(0)) + prev[src] * w
        missing = [v for v in verts if v not in dims]
        if missing:
            raise ValueError(f"vertices without incoming edges at level {n}: {missing}")
        levels.append(LevelData(n, verts, edges, dims))
    return levels


def coherence_check(g: GraphKind, up_to: int, levels: list | None = None,
                    ctx: HLContext | None = None):
    """Verify sum_{v -> v'} d(v) w(v, v') == d(v') on levels 1..up_to.

    Operates on the stored level data (so corrupted data fails); returns
    (ok, (level, vertex) witness or None).
    """
    if levels is None:
        levels = build_levels(g, up_to, ctx)
    for n in range(1, up_to + 1):
        lv = levels[n]
        prev = levels[n - 1].dims
        acc = {v: Fraction(0) for v in lv.vertices}
        for src, dst, w in lv.edges:
            acc[dst] += prev[src] * w
        for v in lv.vertices:
            if acc[v] != lv.dims.get(v):
                return False, (n, v)
    return True, None


def simplex_project(g: GraphKind, x: dict, levels: list | None = None,
                    ctx: HLContext | None = None) -> dict:
    """Push a probability vector on level n down to level n-1 along the
    stochastic kernel d(v) w(v, v') / d(v')."""
    x = {Partition(v): _as_scalar(c) for v, c in x.items()}
    if not x:
        raise ValueError("empty input vector")
    sizes = {sum(v) for v in x}
    if len(sizes) > 1:
        raise ValueError("input mixes levels")
    size = sizes.pop()
    base = g.level_size(0)
    step = 1 if g.kind == "standard" else 2
    n, rem = divmod(size - base, step)
    if rem or n < 1:
        raise ValueError(f"size {size} is not a level >= 1 of the {g.kind} graph")
    if any(c < 0 for c in x.values()) or sum(x.values()) != 1:
        raise ValueError("input is not in the simplex")
    if levels is None:
        levels = build_levels(g, n, ctx)
    out = {v: Fraction(0) for v in levels[n - 1].vertices}
    dims = levels[n].dims
    prev = levels[n - 1].dims
    for src, dst, w in levels[n].edges:
        c = x.get(dst)
        if c:
            out[src] += c * prev[src] * w / dims[dst]
    return {v: c for v, c in out.items() if c}


def functional_to_coherent(g: GraphKind, psi: Functional, up_to: int,
                           ctx: HLContext | None = None) -> list:
    """The per-level probability vectors x_n(v) = d(v) psi(v) of a
    normalized harmonic functional, where psi(v) is the value on the
    basis element of v (plain P for standard, modified Ptilde otherwise).

    Raises with a witness if a vertex value is negative or a level does
    not sum to 1.
    """
    if g.kind == "standard":
        bctx = ctx if ctx is not None else HLContext(g.t, g.level_size(up_to))
        if bctx.t != g.t:
            raise ValueError("context parameter does not match graph")
        basis = hl_P
    else:
        bctx = _basis_context(g, up_to, ctx)
        basis = hl_P_tilde
    levels = build_levels(g, up_to, bctx)
    root_value = psi.evaluate(basis(g.root(), bctx))
    if root_value != 1:
        raise ValueError(f"functional is not normalized at the root: {root_value}")
    out = []
    for n in range(up_to + 1):
        lv = levels[n]
        xn = {}
        total = Fraction(0)
        for v in lv.vertices:
            val = psi.evaluate(basis(v, bctx))
            if val < 0:
                raise ValueError(f"negative vertex value at {v!r}: {val}")
            c = lv.dims[v] * val
            total += c
            if c:
                xn[v] = c
        if total != 1:
            raise ValueError(f"level {n} mass is {total}, not 1")
        out.append(xn)
    return out
