"""Brute-force oracles used to derive and freeze expected test values.

Symmetric functions of degree <= N are represented faithfully as honest
polynomials in N variables (dict from exponent tuples to Fractions), so
power-sum arithmetic, monomial expansions, and inner-product-free
identities can be checked against first principles.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from hlharmonic.partitions import Partition


def poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def poly_scale(a, c):
    return {k: c * v for k, v in a.items()} if c else {}


def p_poly(k: int, N: int):
    """The power sum x_1^k + ... + x_N^k."""
    out = {}
    for i in range(N):
        e = [0] * N
        e[i] = k
        out[tuple(e)] = Fraction(1)
    return out


def pmu_poly(mu, N: int):
    out = {tuple([0] * N): Fraction(1)}
    for k in mu:
        out = poly_mul(out, p_poly(k, N))
    return out


def m_poly(lam, N: int):
    """The monomial symmetric function: sum of distinct permutations of lam."""
    padded = tuple(lam) + (0,) * (N - len(lam))
    return {e: Fraction(1) for e in set(permutations(padded))}


def sym_to_poly(f, N: int):
    out = {}
    for mu, c in f.terms.items():
        out = poly_add(out, poly_scale(pmu_poly(mu, N), c))
    return out


def partitions_bruteforce(n: int):
    """All partitions of n, found by filtering bounded multisets."""
    if n == 0:
        return [Partition()]
    out = []
    for k in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.append(Partition(sorted(combo, reverse=True)))
    return sorted(set(out), reverse=True)
