from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hlharmonic.partitions import (
    Partition,
    b_factor,
    covers_box,
    covers_two,
    dominance_leq,
    enumerate_partitions,
    n_stat,
    partitions_upto,
    split_even,
    z_factor,
)
from oracle_polys import partitions_bruteforce

parts_st = st.lists(st.integers(1, 6), max_size=6).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


def test_construction_normalizes_and_validates():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition() == Partition([])
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_conjugate_examples():
    assert Partition().conjugate() == Partition()
    assert Partition([3]).conjugate() == Partition([1, 1, 1])
    assert Partition([2, 1]).conjugate() == Partition([2, 1])


@given(parts_st)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam


def test_n_stat_examples():
    assert n_stat(Partition()) == 0
    assert n_stat(Partition([1, 1])) == 1
    assert n_stat(Partition([2, 2, 1])) == 4


def test_n_stat_column_identity():
    # n(lam) counts pairs of boxes within each column
    for lam in partitions_upto(12):
        assert n_stat(lam) == sum(comb(c, 2) for c in lam.conjugate())


def test_z_factor_examples():
    assert z_factor(Partition([2, 1, 1])) == 4
    for u in (F(1, 2), F(1, 3), F(2, 7)):
        assert z_factor(Partition([1]), -u) == 1 / (1 + u)
    assert z_factor(Partition([2]), F(-1, 3)) == F(9, 4)


def test_z_factor_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        z_factor(Partition([2, 1]), F(1))


def test_b_factor_examples():
    for t in (F(0), F(1, 3), F(-2, 5)):
        assert b_factor(Partition(), t) == 1
        assert b_factor(Partition([1, 1]), t) == (1 - t) * (1 - t**2)
    assert b_factor(Partition([2, 1]), F(1, 2)) == F(1, 4)


def test_enumerate_examples():
    assert enumerate_partitions(0) == [Partition()]
    assert enumerate_partitions(2) == [Partition([2]), Partition([1, 1])]
    assert len(enumerate_partitions(5)) == 7


def test_enumerate_matches_bruteforce_and_order():
    for n in range(9):
        got = enumerate_partitions(n)
        assert got == partitions_bruteforce(n)
        # reverse-lex, largest first
        assert got == sorted(got, reverse=True)


def test_covers_box_examples():
    assert covers_box(Partition()) == [(Partition([1]), 1)]
    assert covers_box(Partition([1])) == [(Partition([2]), 2), (Partition([1, 1]), 1)]
    assert covers_box(Partition([2, 1])) == [
        (Partition([3, 1]), 3), (Partition([2, 2]), 2), (Partition([2, 1, 1]), 1)]


def test_covers_box_bruteforce():
    for mu in partitions_upto(8):
        got = covers_box(mu)
        expected = {lam for lam in partitions_bruteforce(mu.size() + 1)
                    if lam.contains(mu)}
        assert {lam for lam, _ in got} == expected
        for lam, j in got:
            # the added box sits at the end of the changed row
            i = next(k for k in range(len(lam)) if k >= len(mu) or lam[k] != mu[k])
            assert j == lam[i]


def _boxes(lam):
    return {(i, j) for i, x in enumerate(lam) for j in range(1, x + 1)}


def test_covers_two_examples():
    assert covers_two(Partition()) == [Partition([2]), Partition([1, 1])]
    assert covers_two(Partition([1])) == [
        Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    got = covers_two(Partition([2, 1]))
    assert Partition([3, 1, 1]) not in got  # added boxes in columns 3 and 1


def test_covers_two_bruteforce():
    for nu in partitions_upto(8):
        expected = []
        for lam in partitions_bruteforce(nu.size() + 2):
            if not lam.contains(nu):
                continue
            cols = sorted(j for _, j in _boxes(lam) - _boxes(nu))
            if len(cols) == 2 and cols[1] - cols[0] <= 1:
                expected.append(lam)
        assert covers_two(nu) == expected


def test_cover_relations_never_empty():
    for mu in partitions_upto(8):
        assert covers_box(mu)
        assert covers_two(mu)
        for lam, _ in covers_box(mu):
            assert lam.size() == mu.size() + 1 and lam.contains(mu)


def test_every_shape_has_a_two_box_parent():
    # every lam other than the two roots is reachable by a two-box step
    for lam in partitions_upto(12):
        if lam in (Partition(), Partition([1])):
            continue
        assert any(lam in covers_two(nu)
                   for nu in enumerate_partitions(lam.size() - 2))


def test_dominance_examples():
    assert dominance_leq(Partition([1, 1, 1]), Partition([3]))
    assert not dominance_leq(Partition([3]), Partition([1, 1, 1]))
    assert dominance_leq(Partition([2, 2]), Partition([3, 1]))
    assert not dominance_leq(Partition([3, 1]), Partition([2, 2]))
    with pytest.raises(ValueError):
        dominance_leq(Partition([2]), Partition([3]))


def test_reverse_lex_refines_dominance():
    for n in range(10):
        order = enumerate_partitions(n)
        for i, lam in enumerate(order):
            for mu in order[i + 1:]:
                assert not (dominance_leq(lam, mu) and lam != mu)


def test_split_even_bruteforce():
    for tau in partitions_upto(10):
        got = split_even(tau)
        n = tau.size()
        expected = set()
        for a in range(n // 2 + 1):
            for rho in partitions_bruteforce(a):
                for sigma in partitions_bruteforce(n - 2 * a):
                    if rho.double().union(sigma) == tau:
                        expected.add((rho, sigma))
        assert set(got) == expected
        assert len(got) == len(set(got))


def test_plumbing_double_halve_union():
    assert Partition([3, 1]).double() == Partition([6, 2])
    assert Partition([6, 2]).halve() == Partition([3, 1])
    assert Partition([3, 2]).halve() is None
    assert Partition([3, 1]).union(Partition([2, 2])) == Partition([3, 2, 2, 1])
    assert Partition([2, 1]).multiplicity(1) == 1


@given(parts_st)
def test_double_halve_roundtrip(rho):
    assert rho.double().halve() == rho


@given(parts_st, parts_st)
def test_union_is_commutative(mu, nu):
    assert mu.union(nu) == nu.union(mu)
    assert mu.union(nu).size() == mu.size() + nu.size()
