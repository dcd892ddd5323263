"""Acceptance checks, one per numbered criterion, all in exact arithmetic
(zero tolerance).  Each prints a single pass/fail line; run with

    pytest tests/test_acceptance.py -v -s
"""

from fractions import Fraction as F

from hlharmonic.functionals import (
    check_HL_positive,
    check_p1_harmonic,
    extreme_phi,
    mix_std,
    phi_row,
)
from hlharmonic.hlbasis import expand_in_P_tilde, find_negative_fbar, hl_P_tilde
from hlharmonic.partitions import Partition, covers_two, partitions_upto
from hlharmonic.suites import run_suite
from hlharmonic.symring import SymElement, coproduct, p, twisted_coproduct

T = F(1, 3)


def _report(num: int, ok: bool, desc: str, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num:02d} {status}: {desc}")
    assert ok, f"criterion {num} failed: {desc} {detail}"


def _suite_ok(name, t, cap):
    report = run_suite(name, t, cap)
    return not report["failures"], report


def test_c01_pieri_equivalence():
    fails = []
    for t in (F(1, 3), F(-1, 3), F(2, 5)):
        ok, rpt = _suite_ok("pieri", t, 9)
        if not ok:
            fails.append(rpt["failures"][0])
    _report(1, not fails, "one-box expansion matches the closed Pieri form, "
            "|mu| <= 9, t in {1/3, -1/3, 2/5}", fails)


def test_c02_twisted_structure_constants_nonnegative():
    fails = []
    for t in (F(1, 3), F(1, 5), F(1, 9)):
        ok, rpt = _suite_ok("positivity-ftilde", t, 10)
        if not ok:
            fails.append(rpt["failures"][0])
    _report(2, not fails, "doubled-action structure constants nonnegative, "
            "2|mu|+|nu| <= 10, t in {1/3, 1/5, 1/9}", fails)


def test_c03_mackey_identity():
    fails = []
    for t in (F(1, 3), F(2, 5)):
        ok, rpt = _suite_ok("mackey", t, 10)
        if not ok:
            fails.append(rpt["failures"][0])
    _report(3, not fails, "coproduct compatibility identity on all pairs "
            "with 2|rho|+|sigma| <= 10, t in {1/3, 2/5}", fails)


def test_c04_embeddings():
    ok, rpt = _suite_ok("harmonic-embed", T, 10)
    _report(4, ok, "even/odd embeddings are p2-harmonic (cap 8), positive "
            "(caps 10/9), and normalized, t = 1/3", rpt["failures"][:3])


def test_c05_twisted_mixing():
    ok, rpt = _suite_ok("twisted-mixing", T, 10)
    _report(5, ok, "twisted mixings are p2-harmonic (cap 8), positive (cap 10), "
            "parity-pure, and normalized, t = 1/3", rpt["failures"][:3])


def test_c06_coherence():
    ok, rpt = _suite_ok("coherence", T, 10)
    _report(6, ok, "stochasticity identity on all three graphs up to "
            "partition size 10, t = 1/3", rpt["failures"][:3])


def test_c07_row_column_evaluations():
    fails = []
    for t in (F(1, 3), F(2, 5)):
        ok, rpt = _suite_ok("prop2e", t, 10)
        if not ok:
            fails.append(rpt["failures"][0])
    _report(7, not fails, "row/column functional evaluations on the P/Q bases, "
            "|lam| <= 10, t in {1/3, 2/5}", fails)


def test_c08_two_box_expansion(ctx_at):
    ctxn = ctx_at(-T)
    bad = []
    p2 = p([2])
    for nu in partitions_upto(9):
        fam = expand_in_P_tilde(p2 * hl_P_tilde(nu, ctxn), ctxn)
        if sorted(fam, reverse=True) != covers_two(nu):
            bad.append(("support", nu))
        if any(v <= 0 for v in fam.values()):
            bad.append(("sign", nu))
    _report(8, not bad, "p2 action in the modified basis is supported exactly "
            "on two-box covers with positive coefficients, |nu| <= 9, t = 1/3", bad[:3])


def test_c09_negative_witness():
    got = find_negative_fbar(T, 4)
    want = (Partition([1, 1]), Partition([1]), Partition([1]), F(-2, 3))
    _report(9, got == want, "first negative sign-twisted constant is "
            "((1,1),(1),(1),-2/3) at t = 1/3, cap 4", got)


def test_c10_plancherel_correspondence():
    ok, rpt = _suite_ok("plancherel", T, 10)
    _report(10, ok, "embeddings carry the pure-power functional to the even/odd "
            "indicator functionals, cap 10", rpt["failures"][:3])


def test_c11_mixing_reconstructs_extremes(ctx_at):
    ctx = ctx_at(T)
    bad = []
    for a1, a2 in ((F(1, 2), F(1, 2)), (F(2, 3), F(1, 3))):
        mixed = mix_std(phi_row(T, 9), phi_row(T, 9), a1, a2)
        target = extreme_phi((a1, a2), (), T, 9)
        if not mixed.equal_upto(target, 8):
            bad.append(("table", a1))
        if not check_p1_harmonic(mixed, 8)[0]:
            bad.append(("harmonic", a1))
        if not check_HL_positive(mixed, T, 8, ctx=ctx)[0]:
            bad.append(("positivity", a1))
    _report(11, not bad, "two-row mixings equal the two-parameter extreme "
            "functional on |mu| <= 8 and stay harmonic and positive, t = 1/3", bad)


def test_c12_comodule_axioms():
    bad = []
    for tau in partitions_upto(10):
        back = SymElement()
        for (rho, sigma), c in twisted_coproduct(p(tau), T).terms.items():
            if not rho:
                back = back + p(sigma).scale(c)
        if back != p(tau):
            bad.append(("counit", tau))
    for tau in partitions_upto(8):
        d = twisted_coproduct(p(tau), T)
        lhs, rhs = {}, {}
        for (rho, sigma), c in d.terms.items():
            for (r1, r2), w in coproduct(p(rho)).terms.items():
                k = (r1, r2, sigma)
                lhs[k] = lhs.get(k, 0) + c * w
            for (s1, s2), w in twisted_coproduct(p(sigma), T).terms.items():
                k = (rho, s1, s2)
                rhs[k] = rhs.get(k, 0) + c * w
        if ({k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}):
            bad.append(("coassociativity", tau))
    _report(12, not bad, "twisted coproduct satisfies the counit law (cap 10) "
            "and coassociativity against the standard coproduct (cap 8), t = 1/3", bad[:3])
