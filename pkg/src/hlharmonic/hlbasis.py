"""Hall-Littlewood bases at a fixed rational parameter.

The orthogonal basis P_lambda is built degree by degree by Gram-Schmidt
over the monomial basis, processed in reverse-lex order (which refines
dominance), against the deformed power-sum inner product.  The dual
basis is Q_lambda = b_factor(lambda, t) * P_lambda.

The sign-corrected ("modified") variants live at a negative parameter:
for a context holding parameter -t with t in (0,1),

    Ptilde_lambda = (-1)^n_stat(lambda) * P_lambda,
    Qtilde_lambda = b_factor(lambda, -t) * Ptilde_lambda,

and <Ptilde_lambda, Qtilde_mu> = delta_{lambda mu}, so expansions in the
modified basis come from pairing against Qtilde.

Monomial-to-power-sum conversion is parameter independent and cached at
module level; everything parameter dependent is cached per HLContext.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .partitions import (
    EMPTY,
    Partition,
    b_factor,
    enumerate_partitions,
    n_stat,
)
from .symring import SymElement, _as_scalar, inner_product, one, p, plethysm_pi

# ---------------------------------------------------------------------------
# power sums <-> monomials (parameter free)

_P_IN_M: dict = {EMPTY: {EMPTY: 1}}
_M_IN_P: dict = {EMPTY: one()}
_M_DEGREE_BUILT = 0


def p_in_monomials(mu: Partition) -> dict:
    """Expansion of p_mu in the monomial basis, as a map lam -> int count.

    Built by repeatedly multiplying by single power sums: the coefficient
    transfer for m_lam * p_k sends each distinct part value v of lam
    (including v = 0, a new part) to lam with one v replaced by v + k,
    weighted by the multiplicity of v + k in the result.
    """
    mu = Partition(mu)
    cached = _P_IN_M.get(mu)
    if cached is not None:
        return cached
    base = p_in_monomials(Partition(mu[1:]))
    k = mu[0]
    out: dict = {}
    for lam, c in base.items():
        for v in set(lam) | {0}:
            w = v + k
            parts = list(lam)
            if v:
                parts.remove(v)
            parts.append(w)
            res = Partition(sorted(parts, reverse=True))
            out[res] = out.get(res, 0) + c * res.count(w)
    _P_IN_M[mu] = out
    return out


def monomial_in_p(lam: Partition) -> SymElement:
    """Power-sum expansion of the monomial symmetric function m_lam.

    Obtained by inverting the triangular p-to-m transition within each
    degree, processing partitions from dominance-largest down.
    """
    global _M_DEGREE_BUILT
    lam = Partition(lam)
    cached = _M_IN_P.get(lam)
    if cached is not None:
        return cached
    for n in range(_M_DEGREE_BUILT + 1, sum(lam) + 1):
        for mu in enumerate_partitions(n):
            row = p_in_monomials(mu)
            elem = p(mu)
            for nu, c in row.items():
                if nu != mu:
                    elem = elem - _M_IN_P[nu].scale(c)
            _M_IN_P[mu] = elem.scale(Fraction(1, row[mu]))
        _M_DEGREE_BUILT = n
    return _M_IN_P[lam]


# ---------------------------------------------------------------------------
# contexts

class DegreeCapError(ValueError):
    pass


class HLContext:
    """Per-parameter cache of Hall-Littlewood data.

    t is the parameter actually used in the basis (it may be negative or
    a square, depending on the caller's convention) and must satisfy
    |t| < 1 so the inner product is positive definite.  Construction of
    a degree is guarded by a lock, so a context may be shared between
    threads; values returned are never mutated.
    """

    def __init__(self, t, degree_cap: int):
        t = _as_scalar(t)
        if not abs(t) < 1:
            raise ValueError(f"need |t| < 1, got {t}")
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        self.t = t
        self.degree_cap = int(degree_cap)
        self._P: dict = {EMPTY: one()}
        self._norm: dict = {EMPTY: Fraction(1)}  # <P_lam, P_lam>_t
        self._built = 0
        self._lock = threading.RLock()

    def __repr__(self):
        return f"HLContext(t={self.t}, degree_cap={self.degree_cap})"

    def _require(self, n: int):
        if n > self.degree_cap:
            raise DegreeCapError(f"degree {n} exceeds cap {self.degree_cap}")
        if n <= self._built:
            return
        with self._lock:
            for k in range(self._built + 1, n + 1):
                self._build_degree(k)
                self._built = k

    def _build_degree(self, n: int):
        # Gram-Schmidt from the dominance-smallest monomial up; the result is
        # unitriangular on monomials and orthogonal, which pins it uniquely.
        done: list = []
        for lam in reversed(enumerate_partitions(n)):
            v = monomial_in_p(lam)
            for mu, pm, norm in done:
                c = inner_product(v, pm, self.t)
                if c:
                    v = v - pm.scale(c / norm)
            nv = inner_product(v, v, self.t)
            assert nv != 0, f"degenerate inner product at {lam} (t={self.t})"
            self._P[lam] = v
            self._norm[lam] = nv
            done.append((lam, v, nv))

    def P(self, lam) -> SymElement:
        lam = Partition(lam)
        self._require(sum(lam))
        return self._P[lam]

    def Q(self, lam) -> SymElement:
        lam = Partition(lam)
        return self.P(lam).scale(b_factor(lam, self.t))


def hl_P(lam, ctx: HLContext) -> SymElement:
    """Power-sum expansion of P_lam at the context's parameter."""
    return ctx.P(lam)


def hl_Q(lam, ctx: HLContext) -> SymElement:
    """Q_lam = b_factor(lam, t) * P_lam."""
    return ctx.Q(lam)


def _require_negative(ctx: HLContext):
    if not (Fraction(-1) < ctx.t < 0):
        raise ValueError("modified basis needs a context at a negative parameter -t, t in (0,1)")


def hl_P_tilde(lam, ctx: HLContext) -> SymElement:
    """Sign-corrected P at a negative parameter: (-1)^n_stat(lam) * P_lam.

    The context must hold the negative parameter -t for t in (0,1).
    """
    _require_negative(ctx)
    lam = Partition(lam)
    P = ctx.P(lam)
    return P if n_stat(lam) % 2 == 0 else -P


def hl_Q_tilde(lam, ctx: HLContext) -> SymElement:
    """Qtilde_lam = b_factor(lam, -t) * Ptilde_lam."""
    lam = Partition(lam)
    return hl_P_tilde(lam, ctx).scale(b_factor(lam, ctx.t))


def expand_in_P(f: SymElement, ctx: HLContext) -> dict:
    """Coefficients c_lam with f = sum c_lam P_lam, via pairing with Q_lam.

    Zero coefficients are omitted; the round trip is exact.
    """
    out = {}
    degrees = {sum(mu) for mu in f.terms}
    for n in sorted(degrees):
        ctx._require(n)
        for lam in enumerate_partitions(n):
            c = inner_product(f, ctx.Q(lam), ctx.t)
            if c:
                out[lam] = c
    return out


def expand_in_P_tilde(f: SymElement, ctx: HLContext) -> dict:
    """Coefficients of f in the modified basis Ptilde at the context's -t."""
    _require_negative(ctx)
    out = {}
    degrees = {sum(mu) for mu in f.terms}
    for n in sorted(degrees):
        ctx._require(n)
        for lam in enumerate_partitions(n):
            c = inner_product(f, hl_Q_tilde(lam, ctx), ctx.t)
            if c:
                out[lam] = c
    return out


# ---------------------------------------------------------------------------
# structure constants

def structconst_f(mu, nu, ctx: HLContext) -> dict:
    """Expansion coefficients of P_mu * P_nu in the P basis.

    Returns the full map lam -> coefficient (zeros omitted); all keys
    have size |mu| + |nu|.
    """
    return expand_in_P(ctx.P(mu) * ctx.P(nu), ctx)


def pieri_weight(mu, lam, t) -> Fraction:
    """Closed form for the coefficient of P_lam in p_1 * P_mu when lam
    covers mu: (1 - t^(d)) / (1 - t) with d the column-height drop at the
    added box's column."""
    mu, lam = Partition(mu), Partition(lam)
    t = _as_scalar(t)
    if not (lam.contains(mu) and sum(lam) == sum(mu) + 1):
        raise ValueError(f"{lam!r} does not cover {mu!r}")
    j = next(lam[i] for i in range(len(lam)) if i >= len(mu) or lam[i] != mu[i])
    lp = lam.conjugate()
    d = lp[j - 1] - (lp[j] if j < len(lp) else 0)
    return (1 - t**d) / (1 - t)


def structconst_ftilde(mu, nu, ctx_a: HLContext, ctx_b: HLContext) -> dict:
    """Structure constants of the doubled action in the modified basis:
    the expansion of plethysm_pi(P_mu at t^2) * Ptilde_nu (at -t) in the
    Ptilde basis.  Keys have size 2|mu| + |nu|.

    ctx_a holds the parameter t^2, ctx_b the parameter -t.
    """
    _require_negative(ctx_b)
    if ctx_a.t != ctx_b.t * ctx_b.t:
        raise ValueError("context parameters must be (t^2, -t) for one t")
    f = plethysm_pi(ctx_a.P(mu)) * hl_P_tilde(nu, ctx_b)
    return expand_in_P_tilde(f, ctx_b)


def structconst_fbar(mu, nu, ctx: HLContext) -> dict:
    """Sign-twisted structure constants at a negative parameter:
    (-1)^(n_stat(lam) - n_stat(mu) - n_stat(nu)) times the plain constant.

    The context holds -t for t in (0,1).
    """
    _require_negative(ctx)
    mu, nu = Partition(mu), Partition(nu)
    s = n_stat(mu) + n_stat(nu)
    out = {}
    for lam, c in structconst_f(mu, nu, ctx).items():
        out[lam] = c if (n_stat(lam) - s) % 2 == 0 else -c
    return out


def _rows_and_columns(n: int) -> list:
    if n <= 1:
        return [Partition([n] if n else [])]
    return [Partition([n]), Partition([1] * n)]


def find_negative_fbar(t, cap: int, ctx: HLContext | None = None):
    """First negative sign-twisted constant with nu a row or column.

    Scans lam by increasing size then reverse-lex, nu by increasing size
    (row before column), mu in reverse-lex order.  Returns a tuple
    (lam, mu, nu, value) or None.
    """
    t = _as_scalar(t)
    if not 0 < t < 1:
        raise ValueError("need t in (0, 1)")
    if ctx is None:
        ctx = HLContext(-t, cap)
    fam: dict = {}
    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            for vs in range(n + 1):
                for nu in _rows_and_columns(vs):
                    for mu in enumerate_partitions(n - vs):
                        key = (mu, nu)
                        if key not in fam:
                            fam[key] = structconst_fbar(mu, nu, ctx)
                        val = fam[key].get(lam)
                        if val is not None and val < 0:
                            return lam, mu, nu, val
    return None
