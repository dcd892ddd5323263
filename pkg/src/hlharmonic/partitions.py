"""Integer partitions and Young-diagram combinatorics.

Partitions are stored as weakly decreasing tuples of positive integers;
the empty tuple is the empty partition.  The deterministic total order
used throughout the package is reverse-lexicographic (largest first),
which on each fixed size refines the dominance order.  Since ``Partition``
subclasses ``tuple``, sorting in decreasing tuple order gives exactly
this ordering.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A partition as a weakly decreasing tuple of positive integers.

    Trailing zeros in the input are stripped, so equal partitions compare
    and hash equal.  Instances are immutable and safe to share.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        parts = parts[:n]
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts!r}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "[%s]" % ",".join(str(x) for x in self)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to i."""
        return self.count(i)

    def multiplicities(self) -> dict:
        """Map part value -> multiplicity."""
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return self
        cols = [0] * self[0]
        for x in self:
            for j in range(x):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other) -> bool:
        """Containment of Young diagrams (componentwise)."""
        if len(other) > len(self):
            return False
        return all(self[i] >= other[i] for i in range(len(other)))

    def union(self, other) -> "Partition":
        """Multiset union of the parts (sorted concatenation)."""
        return Partition(sorted(itertools.chain(self, other), reverse=True))

    def double(self) -> "Partition":
        """The partition with every part doubled."""
        return Partition(2 * x for x in self)

    def halve(self):
        """Inverse of double; None if some part is odd."""
        if any(x % 2 for x in self):
            return None
        return Partition(x // 2 for x in self)


EMPTY = Partition()


def n_stat(lam: Partition) -> int:
    """The statistic sum_i (i-1)*lam_i over the rows of lam."""
    return sum(i * x for i, x in enumerate(lam))


def z_plain(kappa: Partition) -> int:
    """The centralizer order prod_i i^{m_i} * m_i! of a permutation of cycle type kappa."""
    out = 1
    for v, m in Counter(kappa).items():
        out *= v**m * factorial(m)
    return out


@lru_cache(maxsize=None)
def z_factor(kappa: Partition, t: Fraction = Fraction(0)) -> Fraction:
    """Deformed centralizer order z_kappa * prod_i (1 - t^i)^(-m_i).

    At t = 0 this is the plain z_kappa.  Raises ZeroDivisionError when
    some 1 - t^i vanishes (cannot happen for |t| < 1).
    """
    t = Fraction(t)
    out = Fraction(z_plain(kappa))
    for v, m in Counter(kappa).items():
        d = 1 - t**v
        if d == 0:
            raise ZeroDivisionError(f"1 - t^{v} = 0 at t = {t}")
        out /= d**m
    return out


def b_factor(lam: Partition, t) -> Fraction:
    """prod_i (t;t)_{m_i(lam)} with (t;t)_m = (1-t)(1-t^2)...(1-t^m)."""
    t = Fraction(t)
    out = Fraction(1)
    for _, m in Counter(lam).items():
        for j in range(1, m + 1):
            out *= 1 - t**j
    return out


@lru_cache(maxsize=None)
def _enum(n: int, maxpart: int):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _enum(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list:
    """All partitions of n in reverse-lexicographic order, largest first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _enum(n, max(n, 1))]


def partitions_upto(n: int) -> list:
    """All partitions of size 0..n, sizes increasing, reverse-lex within each size."""
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def covers_box(mu: Partition) -> list:
    """All (lam, j) with lam obtained from mu by adding one box in column j.

    Results are ordered with the box added to the top row first, which is
    decreasing reverse-lex order on lam.
    """
    out = []
    for i in range(len(mu) + 1):
        v = (mu[i] + 1) if i < len(mu) else 1
        if i > 0 and mu[i - 1] < v:
            continue
        lam = list(mu)
        if i < len(mu):
            lam[i] = v
        else:
            lam.append(1)
        out.append((Partition(lam), v))
    return out


def _skew_columns(lam: Partition, nu: Partition) -> list:
    cols = []
    for i in range(len(lam)):
        lo = nu[i] if i < len(nu) else 0
        cols.extend(range(lo + 1, lam[i] + 1))
    return cols


def covers_two(nu: Partition) -> list:
    """All lam obtained from nu by adding two boxes lying in one column or
    in two consecutive columns (vertical or slanted/horizontal dominoes).

    Computed by filtering all two-box additions; decreasing reverse-lex order.
    """
    cands = set()
    for lam1, _ in covers_box(nu):
        for lam2, _ in covers_box(lam1):
            cands.add(lam2)
    out = []
    for lam in sorted(cands, reverse=True):
        c1, c2 = sorted(_skew_columns(lam, nu))
        if c2 - c1 <= 1:
            out.append(lam)
    return out


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Dominance order on partitions of equal size: all partial sums of mu
    are bounded by those of lam."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: |{mu!r}| != |{lam!r}|")
    pm = pl = 0
    for k in range(max(len(mu), len(lam))):
        pm += mu[k] if k < len(mu) else 0
        pl += lam[k] if k < len(lam) else 0
        if pm > pl:
            return False
    return True


def split_even(tau: Partition) -> list:
    """All pairs (rho, sigma) with double(rho) union sigma == tau.

    Every even part value of tau splits independently: some copies are
    halved into rho, the rest stay in sigma.  Odd parts always stay in
    sigma.  Pairs are returned in decreasing (rho, sigma) order.
    """
    mult = Counter(tau)
    evens = sorted((v for v in mult if v % 2 == 0), reverse=True)
    odds = [v for v in tau if v % 2 == 1]
    out = []
    for ks in itertools.product(*(range(mult[v] + 1) for v in evens)):
        rho, sigma = [], list(odds)
        for v, k in zip(evens, ks):
            rho.extend([v // 2] * k)
            sigma.extend([v] * (mult[v] - k))
        out.append((Partition(sorted(rho, reverse=True)),
                    Partition(sorted(sigma, reverse=True))))
    out.sort(reverse=True)
    return out
