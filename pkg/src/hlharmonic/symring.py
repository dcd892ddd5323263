"""The ring of symmetric functions in the power-sum basis over exact rationals.

Elements are finite linear combinations of the power sums p_mu, stored
sparsely as Partition -> Fraction maps.  Products concatenate index
partitions, and the deformed inner product at parameter t is diagonal
with <p_kappa, p_kappa>_t = z_factor(kappa, t).

Two comultiplications are provided: the standard one, determined by
p_k -> p_k (x) 1 + 1 (x) p_k, and a twisted one that is adjoint to the
doubled multiplication action (a, b) -> plethysm_pi(a) * b with respect
to the mixed inner products (t^2 on the left tensor slot, -t on the
right).  The two tensor slots are both plain SymElements; the parameter
convention is carried by the operations, not the types.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb

from .partitions import EMPTY, Partition, split_even, z_factor


def _as_scalar(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass Fraction, int, or 'num/den' string")
    return Fraction(x)


def term_order(lam: Partition):
    """Sort key: size increasing, then reverse-lex (largest first) within a size."""
    return (sum(lam), tuple(-x for x in lam))


class SymElement:
    """A finite linear combination of power sums p_mu with exact coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable;
    all arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mu, c in terms.items():
                c = _as_scalar(c)
                if c:
                    clean[Partition(mu)] = c
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SymElement) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for mu, c in other.terms.items():
            s = out.get(mu, 0) + c
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
        res = SymElement.__new__(SymElement)
        res.terms = out
        return res

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymElement":
        c = _as_scalar(c)
        res = SymElement.__new__(SymElement)
        res.terms = {mu: c * v for mu, v in self.terms.items()} if c else {}
        return res

    def __mul__(self, other):
        if isinstance(other, SymElement):
            out = {}
            for mu, c in self.terms.items():
                for nu, d in other.terms.items():
                    k = mu.union(nu)
                    out[k] = out.get(k, 0) + c * d
            return SymElement(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def coeff(self, mu) -> Fraction:
        return self.terms.get(Partition(mu), Fraction(0))

    def degree(self):
        """Largest |mu| in the support; None for the zero element."""
        return max((sum(mu) for mu in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        return len({sum(mu) for mu in self.terms}) <= 1

    def homogeneous_part(self, n: int) -> "SymElement":
        return SymElement({mu: c for mu, c in self.terms.items() if sum(mu) == n})

    def truncate(self, cap: int) -> "SymElement":
        """Drop all terms of degree above cap."""
        return SymElement({mu: c for mu, c in self.terms.items() if sum(mu) <= cap})

    def support(self) -> list:
        return sorted(self.terms, key=term_order)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c})p{mu!r}" for mu, c in sorted(self.terms.items(), key=lambda kv: term_order(kv[0]))]
        return " + ".join(bits)


def p(parts) -> SymElement:
    """The power-sum basis element p_mu."""
    return SymElement({Partition(parts): Fraction(1)})


def one() -> SymElement:
    return p(())


def zero() -> SymElement:
    return SymElement()


def counit(f: SymElement) -> Fraction:
    """The coefficient of p_empty (evaluation that kills positive degrees)."""
    return f.coeff(EMPTY)


def inner_product(f: SymElement, g: SymElement, t) -> Fraction:
    """Deformed power-sum inner product: sum_mu f_mu g_mu z_factor(mu, t)."""
    t = _as_scalar(t)
    a, b = f.terms, g.terms
    if len(b) < len(a):
        a, b = b, a
    total = Fraction(0)
    for mu, c in a.items():
        d = b.get(mu)
        if d:
            total += c * d * z_factor(mu, t)
    return total


def plethysm_pi(f: SymElement) -> SymElement:
    """The algebra morphism doubling every power-sum index: p_mu -> p_{2mu}."""
    return SymElement({mu.double(): c for mu, c in f.terms.items()})


def xi(f: SymElement) -> SymElement:
    """The algebra morphism p_k -> 2 p_k, i.e. p_mu -> 2^len(mu) p_mu.

    Equals multiplication composed with the standard coproduct.
    """
    return SymElement({mu: c * 2 ** len(mu) for mu, c in f.terms.items()})


class TensorElement:
    """A finite linear combination of p_rho (x) p_sigma, stored sparsely."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (rho, sigma), c in terms.items():
                c = _as_scalar(c)
                if c:
                    clean[(Partition(rho), Partition(sigma))] = c
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = TensorElement.__new__(TensorElement)
        res.terms = out
        return res

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = _as_scalar(c)
        res = TensorElement.__new__(TensorElement)
        res.terms = {k: c * v for k, v in self.terms.items()} if c else {}
        return res

    def __mul__(self, other):
        """Componentwise product: (p_r (x) p_s)(p_r' (x) p_s') = p_{r u r'} (x) p_{s u s'}."""
        out = {}
        for (r1, s1), c in self.terms.items():
            for (r2, s2), d in other.terms.items():
                k = (r1.union(r2), s1.union(s2))
                out[k] = out.get(k, 0) + c * d
        return TensorElement(out)

    def coeff(self, rho, sigma) -> Fraction:
        return self.terms.get((Partition(rho), Partition(sigma)), Fraction(0))

    def support(self) -> list:
        return sorted(self.terms, key=lambda k: (term_order(k[0]), term_order(k[1])))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({self.terms[k]})p{k[0]!r}(x)p{k[1]!r}" for k in self.support()]
        return " + ".join(bits)


def tensor(f: SymElement, g: SymElement) -> TensorElement:
    out = {}
    for mu, c in f.terms.items():
        for nu, d in g.terms.items():
            out[(mu, nu)] = c * d
    return TensorElement(out)


def tensor_inner(x: TensorElement, y: TensorElement, t_left, t_right) -> Fraction:
    """Pairing on tensors: product of the componentwise inner products."""
    a, b = x.terms, y.terms
    if len(b) < len(a):
        a, b = b, a
    total = Fraction(0)
    for (rho, sigma), c in a.items():
        d = b.get((rho, sigma))
        if d:
            total += c * d * z_factor(rho, Fraction(t_left)) * z_factor(sigma, Fraction(t_right))
    return total


@lru_cache(maxsize=None)
def _coproduct_splits(mu: Partition):
    """All ordered splits of the multiset of parts of mu, with multinomial weights.

    Returns tuples (rho, sigma, m) with rho u sigma == mu and
    m = prod_i C(m_i(mu), m_i(rho)).
    """
    mult = Counter(mu)
    vals = sorted(mult, reverse=True)
    out = []
    for ks in itertools.product(*(range(mult[v] + 1) for v in vals)):
        rho, sigma, m = [], [], 1
        for v, k in zip(vals, ks):
            rho.extend([v] * k)
            sigma.extend([v] * (mult[v] - k))
            m *= comb(mult[v], k)
        out.append((Partition(rho), Partition(sigma), m))
    return tuple(out)


def coproduct(f: SymElement) -> TensorElement:
    """The standard coproduct, on p_mu the sum over all ordered part-multiset
    splits rho u sigma = mu weighted by prod_i C(m_i(mu), m_i(rho))."""
    out = {}
    for mu, c in f.terms.items():
        for rho, sigma, m in _coproduct_splits(mu):
            k = (rho, sigma)
            out[k] = out.get(k, 0) + c * m
    return TensorElement(out)


def coproduct_power(f: SymElement, m: int) -> dict:
    """The m-fold coproduct as a map from m-tuples of partitions to scalars.

    m = 1 is the identity; each further step splits the last slot.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    out = {(mu,): c for mu, c in f.terms.items()}
    for _ in range(m - 1):
        nxt = {}
        for key, c in out.items():
            for rho, sigma, mult in _coproduct_splits(key[-1]):
                k = key[:-1] + (rho, sigma)
                nxt[k] = nxt.get(k, 0) + c * mult
        out = nxt
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _twisted_splits(tau: Partition, t: Fraction):
    """Split weights for the twisted coproduct of p_tau at parameter t in (0,1):
    pairs (rho, sigma) with double(rho) u sigma = tau, each weighted by
    z_tau(-t) / (z_rho(t^2) z_sigma(-t))."""
    zt = z_factor(tau, -t)
    out = []
    for rho, sigma in split_even(tau):
        w = zt / (z_factor(rho, t * t) * z_factor(sigma, -t))
        out.append((rho, sigma, w))
    return tuple(out)


def twisted_coproduct(f: SymElement, t) -> TensorElement:
    """The coproduct adjoint to (a, b) -> plethysm_pi(a) * b.

    The left tensor slot pairs at parameter t^2, the right at -t; the
    argument t is the base parameter with |t| < 1.
    """
    t = _as_scalar(t)
    if not abs(t) < 1:
        raise ValueError("need |t| < 1")
    out = {}
    for tau, c in f.terms.items():
        for rho, sigma, w in _twisted_splits(tau, t):
            k = (rho, sigma)
            out[k] = out.get(k, 0) + c * w
    return TensorElement(out)


def mackey_check(a: SymElement, b: SymElement, t):
    """Compatibility of the two coproducts with the doubled action.

    Compares twisted_coproduct(plethysm_pi(a) * b) against the sum over
    split terms of coproduct(a) and twisted_coproduct(b) of
    (xi(a1) * b1) (x) (plethysm_pi(a2) * b2).  Returns (True, None) on
    equality, else (False, (rho, sigma, lhs_value, rhs_value)) for the
    first differing tensor key in (left, right) reverse-lex order.
    """
    t = _as_scalar(t)
    lhs = twisted_coproduct(plethysm_pi(a) * b, t)
    rhs = {}
    cb = twisted_coproduct(b, t)
    for (a1, a2), ca in coproduct(a).terms.items():
        w = ca * 2 ** len(a1)
        da2 = a2.double()
        for (b1, b2), dbv in cb.terms.items():
            k = (a1.union(b1), da2.union(b2))
            rhs[k] = rhs.get(k, 0) + w * dbv
    diff = lhs - TensorElement(rhs)
    if not diff:
        return True, None
    rho, sigma = min(diff.terms, key=lambda k: (term_order(k[0]), term_order(k[1])))
    return False, (rho, sigma, lhs.coeff(rho, sigma), TensorElement(rhs).coeff(rho, sigma))
