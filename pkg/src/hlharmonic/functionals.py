"""Linear functionals on the ring of symmetric functions.

A functional is a value table on the power sums p_mu up to a degree cap,
extended linearly.  Multiplicative functionals additionally carry the
generating values on p_1, p_2, ... so the table can be regenerated.

The module provides the classical one-parameter family of extreme
harmonic functionals, the row/column and Plancherel functionals, the
dilation and convolution (mixing) operations for both the standard and
the twisted coproduct, the closed-form even/odd embeddings, and the
degree-capped harmonicity and positivity checks.

Dilations on the twisted side are parameterized by u = sqrt(s) so that
s^(deg/2) stays rational on odd degrees.
"""

from __future__ import annotations

from fractions import Fraction

from .hlbasis import HLContext, hl_P, hl_P_tilde
from .partitions import EMPTY, Partition, enumerate_partitions, partitions_upto
from .symring import SymElement, _as_scalar, _coproduct_splits, _twisted_splits


P1 = Partition([1])
P2 = Partition([2])


class Functional:
    """Linear functional given by its values on p_mu, |mu| <= degree_cap.

    Missing keys within the cap mean value zero; querying beyond the cap
    raises.  `spec`, when present, lists the values on p_1..p_degree_cap
    of a multiplicative functional and regenerates the table.
    """

    __slots__ = ("values", "degree_cap", "spec")

    def __init__(self, values, degree_cap: int, spec=None):
        degree_cap = int(degree_cap)
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        table = {}
        for mu, v in (values or {}).items():
            mu = Partition(mu)
            if sum(mu) > degree_cap:
                raise ValueError(f"value key {mu!r} beyond degree cap {degree_cap}")
            v = _as_scalar(v)
            if v:
                table[mu] = v
        self.values = table
        self.degree_cap = degree_cap
        self.spec = tuple(_as_scalar(x) for x in spec) if spec is not None else None

    def value(self, mu) -> Fraction:
        mu = Partition(mu)
        if sum(mu) > self.degree_cap:
            raise ValueError(f"degree {sum(mu)} exceeds functional cap {self.degree_cap}")
        return self.values.get(mu, Fraction(0))

    def evaluate(self, f: SymElement) -> Fraction:
        """Linear extension of the value table to any symmetric function."""
        total = Fraction(0)
        for mu, c in f.terms.items():
            total += c * self.value(mu)
        return total

    def __eq__(self, other):
        return (isinstance(other, Functional)
                and self.degree_cap == other.degree_cap
                and self.values == other.values)

    __hash__ = None

    def equal_upto(self, other: "Functional", cap: int) -> bool:
        """Agreement of value tables on every p_mu with |mu| <= cap."""
        if cap > min(self.degree_cap, other.degree_cap):
            raise ValueError("cap exceeds a functional's table")
        for mu in partitions_upto(cap):
            if self.value(mu) != other.value(mu):
                return False
        return True

    def __repr__(self):
        return f"Functional(cap={self.degree_cap}, {len(self.values)} nonzero values)"


def from_spec(gen, cap: int) -> Functional:
    """Multiplicative functional with the given values on p_1..p_cap."""
    spec = [_as_scalar(gen[k - 1]) for k in range(1, cap + 1)]
    values = {}
    for mu in partitions_upto(cap):
        v = Fraction(1)
        for x in mu:
            v *= spec[x - 1]
            if not v:
                break
        values[mu] = v
    return Functional(values, cap, spec=spec)


def extreme_phi(alpha, beta, t, cap: int) -> Functional:
    """The multiplicative functional of the classical two-sequence family:
    value 1 on p_1 and, for k >= 2,

        sum_i alpha_i^k  +  (-1)^(k-1) (1 - t^k)^(-1) sum_j beta_j^k.

    Requires alpha and beta weakly decreasing and nonnegative with
    sum(alpha) + sum(beta)/(1-t) <= 1, and t in (-1, 1).
    """
    t = _as_scalar(t)
    alpha = [_as_scalar(a) for a in alpha]
    beta = [_as_scalar(b) for b in beta]
    if not -1 < t < 1:
        raise ValueError(f"need t in (-1, 1), got {t}")
    for name, seq in (("alpha", alpha), ("beta", beta)):
        if any(x < 0 for x in seq):
            raise ValueError(f"{name} must be nonnegative")
        if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError(f"{name} must be weakly decreasing")
    if sum(alpha) + sum(beta) / (1 - t) > 1:
        raise ValueError("need sum(alpha) + sum(beta)/(1-t) <= 1")

    def gen(k):
        if k == 1:
            return Fraction(1)
        v = sum((a**k for a in alpha), Fraction(0))
        if beta:
            sb = sum((b**k for b in beta), Fraction(0))
            v += (-1) ** (k - 1) * sb / (1 - t**k)
        return v

    return from_spec([gen(k) for k in range(1, cap + 1)], cap)


def phi_row(t, cap: int) -> Functional:
    """The multiplicative functional with value 1 on every p_k."""
    t = _as_scalar(t)
    if not 0 < t < 1:
        raise ValueError("need t in (0, 1)")
    return from_spec([Fraction(1)] * cap, cap)


def phi_col(t, cap: int) -> Functional:
    """The multiplicative functional with p_k -> (-1)^(k-1) (1-t)^k / (1-t^k)."""
    t = _as_scalar(t)
    if not 0 < t < 1:
        raise ValueError("need t in (0, 1)")
    return from_spec(
        [(-1) ** (k - 1) * (1 - t) ** k / (1 - t**k) for k in range(1, cap + 1)], cap
    )


def plancherel(kind: str, cap: int) -> Functional:
    """Indicator-supported functionals: 1 on p_(1^n) (kind "A"),
    on p_(2^n) (kind "even"), or on p_((2^n) u (1)) (kind "odd")."""
    values = {}
    if kind == "A":
        for n in range(cap + 1):
            values[Partition([1] * n)] = 1
    elif kind == "even":
        for n in range(cap // 2 + 1):
            values[Partition([2] * n)] = 1
    elif kind == "odd":
        for n in range((cap - 1) // 2 + 1) if cap >= 1 else []:
            values[Partition([2] * n + [1])] = 1
    else:
        raise ValueError(f"unknown Plancherel kind {kind!r}")
    return Functional(values, cap)


def counit_functional(cap: int) -> Functional:
    """The functional that is 1 at p_empty and 0 in positive degrees."""
    return Functional({EMPTY: 1}, cap, spec=[Fraction(0)] * cap)


# ---------------------------------------------------------------------------
# dilations and mixings

def dilate_A(phi: Functional, r) -> Functional:
    """Rescale by r^degree (with 0^0 = 1, so r = 0 keeps only degree 0)."""
    r = _as_scalar(r)
    if r < 0:
        raise ValueError("dilation parameter must be nonnegative")
    values = {mu: v * r ** sum(mu) for mu, v in phi.values.items()}
    spec = None
    if phi.spec is not None:
        spec = [x * r**k for k, x in enumerate(phi.spec, start=1)]
    return Functional(values, phi.degree_cap, spec=spec)


def dilate_B(psi: Functional, u, shift: int = 0) -> Functional:
    """Rescale by s^(degree/2) where s = u^2, i.e. by u^(degree - shift).

    shift = 0 is the plain half-degree dilation (exact on even support);
    shift = 1 is the normalized variant u^(degree-1), well defined at
    u = 0 only when the value at p_empty vanishes.
    """
    u = _as_scalar(u)
    if u < 0:
        raise ValueError("dilation parameter must be nonnegative")
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    if shift == 1 and psi.values.get(EMPTY):
        raise ValueError("shift=1 requires a functional vanishing at p_empty")
    values = {mu: v * u ** (sum(mu) - shift) for mu, v in psi.values.items()}
    spec = None
    if shift == 0 and psi.spec is not None:
        spec = [x * u**k for k, x in enumerate(psi.spec, start=1)]
    return Functional(values, psi.degree_cap, spec=spec)


def convolve_std(phi: Functional, psi: Functional) -> Functional:
    """Convolution against the standard coproduct:
    value on p_mu = sum over part-multiset splits of weighted products."""
    cap = min(phi.degree_cap, psi.degree_cap)
    values = {}
    for mu in partitions_upto(cap):
        total = Fraction(0)
        for rho, sigma, m in _coproduct_splits(mu):
            a = phi.values.get(rho)
            if not a:
                continue
            b = psi.values.get(sigma)
            if b:
                total += m * a * b
        values[mu] = total
    spec = None
    if (phi.spec is not None and psi.spec is not None
            and phi.values.get(EMPTY) == psi.values.get(EMPTY) == 1):
        spec = [phi.spec[k] + psi.spec[k] for k in range(cap)]
    return Functional(values, cap, spec=spec)


def convolve_twisted(phi: Functional, psi: Functional, t) -> Functional:
    """Convolution against the twisted coproduct at base parameter t in (0,1).

    phi is evaluated on the left slots (partnering parameter t^2), psi on
    the right (parameter -t).
    """
    t = _as_scalar(t)
    if not abs(t) < 1:
        raise ValueError("need |t| < 1")
    cap = min(psi.degree_cap, 2 * phi.degree_cap + 1)
    values = {}
    for tau in partitions_upto(cap):
        total = Fraction(0)
        for rho, sigma, w in _twisted_splits(tau, t):
            a = phi.values.get(rho)
            if not a:
                continue
            b = psi.values.get(sigma)
            if b:
                total += w * a * b
        values[tau] = total
    return Functional(values, cap)


def mix_std(phi: Functional, psi: Functional, r, s) -> Functional:
    """Standard mixing: convolve the r- and s-dilations; requires r + s = 1."""
    r, s = _as_scalar(r), _as_scalar(s)
    if r + s != 1:
        raise ValueError("standard mixing needs r + s = 1")
    return convolve_std(dilate_A(phi, r), dilate_A(psi, s))


def mix_twisted(phi: Functional, psi: Functional, t, r, u, shift: int = 0) -> Functional:
    """Twisted mixing with weights (r, s = u^2); requires 2r + s = 1.

    shift = 1 applies the normalized odd-side dilation.
    """
    r, u = _as_scalar(r), _as_scalar(u)
    if 2 * r + u * u != 1:
        raise ValueError("twisted mixing needs 2r + u^2 = 1")
    return convolve_twisted(dilate_A(phi, r), dilate_B(psi, u, shift=shift), t)


# ---------------------------------------------------------------------------
# embeddings

def embed_even(phi: Functional) -> Functional:
    """Even-side image of phi: value phi(p_rho) * 2^(len(rho) - |rho|) on
    p_(2 rho), zero on every other p_sigma.  The table does not depend on
    the target parameter."""
    cap = 2 * phi.degree_cap + 1
    values = {}
    for rho, v in phi.values.items():
        values[rho.double()] = v * Fraction(2) ** (len(rho) - sum(rho))
    return Functional(values, cap)


def embed_odd(phi: Functional) -> Functional:
    """Odd-side image of phi: value phi(p_rho) * 2^(len(rho) - |rho|) on
    p_((2 rho) u (1)), zero elsewhere."""
    cap = 2 * phi.degree_cap + 1
    values = {}
    for rho, v in phi.values.items():
        values[rho.double().union(P1)] = v * Fraction(2) ** (len(rho) - sum(rho))
    return Functional(values, cap)


# ---------------------------------------------------------------------------
# predicates

def _check_harmonic(phi: Functional, cap: int, part: Partition):
    step = sum(part)
    if cap + step > phi.degree_cap:
        raise ValueError(f"harmonicity check at cap {cap} needs table up to {cap + step}")
    for mu in partitions_upto(cap):
        if phi.value(mu.union(part)) != phi.value(mu):
            return False, mu
    return True, None


def check_p1_harmonic(phi: Functional, cap: int):
    """Whether appending a part 1 leaves all values fixed, for |mu| <= cap.

    Returns (ok, first violating mu or None).
    """
    return _check_harmonic(phi, cap, P1)


def check_p2_harmonic(psi: Functional, cap: int):
    """Whether appending a part 2 leaves all values fixed, for |mu| <= cap."""
    return _check_harmonic(psi, cap, P2)


def check_HL_positive(phi: Functional, t, cap: int, modified: bool = False,
                      ctx: HLContext | None = None):
    """Nonnegativity of phi on the (modified) Hall-Littlewood basis up to cap.

    With modified=False the basis is P_lam at parameter t; with
    modified=True it is Ptilde_lam at parameter -t for t in (0, 1).
    Returns (ok, (lam, value) witness or None).
    """
    t = _as_scalar(t)
    param = -t if modified else t
    if ctx is None:
        ctx = HLContext(param, cap)
    elif ctx.t != param:
        raise ValueError(f"context parameter {ctx.t} does not match {param}")
    basis = hl_P_tilde if modified else hl_P
    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            v = phi.evaluate(basis(lam, ctx))
            if v < 0:
                return False, (lam, v)
    return True, None


def is_parity_pure(phi: Functional, parity: int) -> bool:
    """Whether the table vanishes on all p_mu of degree != parity mod 2."""
    return all(sum(mu) % 2 == parity for mu in phi.values)
