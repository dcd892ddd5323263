"""Named verification suites with machine-readable reports.

Each suite runs a family of exact checks at a configured (t, cap) and
returns a JSON-ready report::

    {"suite": ..., "t": "1/3", "cap": N, "checked": n,
     "failures": [...], "elapsed_ms": ...}

plus, where relevant, "warnings", "observations", or "witness" fields.
Reports are deterministic for a fixed configuration, up to elapsed_ms.

The item-based suites (pieri, positivity-f, positivity-ftilde, mackey)
can fan out over worker processes; each worker builds its own basis
caches, and chunk results are merged in input order, so the report does
not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import functionals as fn
from .graphs import GraphKind, build_levels, coherence_check
from .hlbasis import (
    HLContext,
    find_negative_fbar,
    hl_P,
    hl_Q,
    pieri_weight,
    structconst_f,
    structconst_ftilde,
)
from .partitions import (
    Partition,
    covers_box,
    covers_two,
    enumerate_partitions,
    partitions_upto,
    z_factor,
)
from .serialize import partition_str, scalar_str
from .symring import mackey_check, p, tensor

SUITES = (
    "pieri", "positivity-f", "positivity-ftilde", "mackey", "harmonic-embed",
    "twisted-mixing", "coherence", "prop2e", "negative-fbar", "plancherel",
    "cauchy",
)

DEFAULT_CAPS = {
    "pieri": 9,
    "positivity-f": 8,
    "positivity-ftilde": 10,
    "mackey": 10,
    "harmonic-embed": 10,
    "twisted-mixing": 10,
    "coherence": 10,
    "prop2e": 10,
    "negative-fbar": 4,
    "plancherel": 10,
    "cauchy": 6,
}


def is_inverse_odd_prime_power(t: Fraction) -> bool:
    """Whether t = 1/q with q a power of a single odd prime."""
    if t.numerator != 1:
        return False
    q = t.denominator
    if q < 3 or q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            while q % d == 0:
                q //= d
            return q == 1
        d += 2
    return True  # q itself is an odd prime


def _pairs_weighted(cap: int, mu_weight: int) -> list:
    """(mu, nu) pairs with mu_weight*|mu| + |nu| <= cap, in scan order."""
    out = []
    for a in range(cap // mu_weight + 1):
        for mu in enumerate_partitions(a):
            for b in range(cap - mu_weight * a + 1):
                for nu in enumerate_partitions(b):
                    out.append((mu, nu))
    return out


# -- per-chunk workers (top level so they are picklable) --------------------

def _chunk_pieri(args):
    t, cap, items = args
    ctx = HLContext(t, cap + 1)
    checked, failures = 0, []
    one_box = Partition([1])
    for mu in items:
        fam = structconst_f(mu, one_box, ctx)
        covers = dict(covers_box(mu))
        if set(fam) != set(covers):
            failures.append({"case": f"mu={partition_str(mu)}",
                             "detail": "support differs from one-box covers"})
            continue
        for lam in covers:
            checked += 1
            w = pieri_weight(mu, lam, t)
            if fam[lam] != w:
                failures.append({"case": f"mu={partition_str(mu)} lam={partition_str(lam)}",
                                 "expected": scalar_str(w), "got": scalar_str(fam[lam])})
    return checked, failures


def _chunk_positivity_f(args):
    t, cap, items = args
    ctx = HLContext(t, cap)
    checked, failures = 0, []
    for mu, nu in items:
        for lam, v in structconst_f(mu, nu, ctx).items():
            checked += 1
            if v < 0:
                failures.append({
                    "case": f"lam={partition_str(lam)} mu={partition_str(mu)} nu={partition_str(nu)}",
                    "got": scalar_str(v)})
    return checked, failures


def _chunk_positivity_ftilde(args):
    t, cap, items = args
    ctx_a = HLContext(t * t, cap // 2)
    ctx_b = HLContext(-t, cap)
    checked, failures = 0, []
    for mu, nu in items:
        for lam, v in structconst_ftilde(mu, nu, ctx_a, ctx_b).items():
            checked += 1
            if v < 0:
                failures.append({
                    "case": f"lam={partition_str(lam)} mu={partition_str(mu)} nu={partition_str(nu)}",
                    "got": scalar_str(v)})
    return checked, failures


def _chunk_mackey(args):
    t, cap, items = args
    checked, failures = 0, []
    for rho, sigma in items:
        checked += 1
        ok, witness = mackey_check(p(rho), p(sigma), t)
        if not ok:
            r, s, lhs, rhs = witness
            failures.append({
                "case": f"a=p{partition_str(rho)} b=p{partition_str(sigma)}",
                "key": f"({partition_str(r)},{partition_str(s)})",
                "lhs": scalar_str(lhs), "rhs": scalar_str(rhs)})
    return checked, failures


_CHUNK_FNS = {
    "pieri": _chunk_pieri,
    "positivity-f": _chunk_positivity_f,
    "positivity-ftilde": _chunk_positivity_ftilde,
    "mackey": _chunk_mackey,
}


def _run_chunked(name: str, t: Fraction, cap: int, items: list, workers: int):
    fn_ = _CHUNK_FNS[name]
    if workers <= 1 or len(items) < 2 * workers:
        return fn_((t, cap, items))
    size = (len(items) + workers - 1) // workers
    chunks = [(t, cap, items[i:i + size]) for i in range(0, len(items), size)]
    checked, failures = 0, []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for c, f in pool.map(fn_, chunks):
            checked += c
            failures.extend(f)
    return checked, failures


# -- suites -----------------------------------------------------------------

def suite_pieri(t, cap, workers=1):
    items = [mu for n in range(cap + 1) for mu in enumerate_partitions(n)]
    return _run_chunked("pieri", t, cap, items, workers)


def suite_positivity_f(t, cap, workers=1):
    checked, failures = _run_chunked("positivity-f", t, cap,
                                     _pairs_weighted(cap, 1), workers)
    warnings = [] if 0 < t < 1 else ["nonnegativity is only claimed for t in (0,1)"]
    return checked, failures, warnings


def suite_positivity_ftilde(t, cap, workers=1):
    if not 0 < t < 1:
        raise ValueError("positivity-ftilde needs t in (0, 1)")
    checked, failures = _run_chunked("positivity-ftilde", t, cap,
                                     _pairs_weighted(cap, 2), workers)
    warnings, observations = [], []
    if not is_inverse_odd_prime_power(t):
        warnings.append(
            f"t={scalar_str(t)} is not 1/q for an odd prime power q; "
            "nonnegativity is not claimed here, findings are observations")
        observations, failures = failures, []
    return checked, failures, warnings, observations


def suite_mackey(t, cap, workers=1):
    return _run_chunked("mackey", t, cap, _pairs_weighted(cap, 2), workers)


def _phi_grid(t2, cap):
    return [
        ("row", fn.phi_row(t2, cap)),
        ("col", fn.phi_col(t2, cap)),
        ("extreme[(1/2,1/4);(1/8)]",
         fn.extreme_phi((Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 8),), t2, cap)),
    ]


def suite_harmonic_embed(t, cap, workers=1):
    """Even/odd embedding membership: p2-harmonicity at cap-2, modified
    positivity at cap (even side) and cap-1 (odd side), and the root
    normalizations."""
    if not 0 < t < 1:
        raise ValueError("harmonic-embed needs t in (0, 1)")
    checked, failures = 0, []
    ctx = HLContext(-t, cap)
    hcap = cap - 2
    for label, phi in _phi_grid(t * t, (cap + 1) // 2):
        for side, emb in (("even", fn.embed_even(phi)), ("odd", fn.embed_odd(phi))):
            pos_cap = cap if side == "even" else cap - 1
            ok, w = fn.check_p2_harmonic(emb, hcap)
            checked += 1
            if not ok:
                failures.append({"case": f"{side}({label}) p2-harmonic",
                                 "witness": partition_str(w)})
            ok, w = fn.check_HL_positive(emb, t, pos_cap, modified=True, ctx=ctx)
            checked += 1
            if not ok:
                failures.append({"case": f"{side}({label}) positivity",
                                 "witness": partition_str(w[0]), "got": scalar_str(w[1])})
            norm = emb.value(()) if side == "even" else emb.value((1,))
            checked += 1
            if norm != 1:
                failures.append({"case": f"{side}({label}) normalization",
                                 "got": scalar_str(norm)})
    return checked, failures


MIX_GRID = ((Fraction(1, 2), Fraction(0)),
            (Fraction(3, 8), Fraction(1, 2)),
            (Fraction(0), Fraction(1)))  # (r, u) with 2r + u^2 = 1


def suite_twisted_mixing(t, cap, workers=1):
    """Twisted mixing closure on the sample grid: p2-harmonicity at cap-2,
    modified positivity at cap, parity preservation, and normalization."""
    if not 0 < t < 1:
        raise ValueError("twisted-mixing needs t in (0, 1)")
    checked, failures = 0, []
    ctx = HLContext(-t, cap)
    t2 = t * t
    psis = [("plancherel-even", fn.plancherel("even", cap + 2)),
            ("embed-even(row)", fn.embed_even(fn.phi_row(t2, (cap + 1) // 2)))]
    for plabel, phi in _phi_grid(t2, (cap + 1) // 2):
        for qlabel, psi in psis:
            for r, u in MIX_GRID:
                label = f"phi={plabel} psi={qlabel} r={scalar_str(r)} u={scalar_str(u)}"
                mixed = fn.mix_twisted(phi, psi, t, r, u)
                ok, w = fn.check_p2_harmonic(mixed, cap - 2)
                checked += 1
                if not ok:
                    failures.append({"case": f"{label} p2-harmonic",
                                     "witness": partition_str(w)})
                ok, w = fn.check_HL_positive(mixed, t, cap, modified=True, ctx=ctx)
                checked += 1
                if not ok:
                    failures.append({"case": f"{label} positivity",
                                     "witness": partition_str(w[0]),
                                     "got": scalar_str(w[1])})
                checked += 1
                if not fn.is_parity_pure(mixed, 0):
                    failures.append({"case": f"{label} parity"})
                checked += 1
                if mixed.value(()) != 1:
                    failures.append({"case": f"{label} normalization",
                                     "got": scalar_str(mixed.value(()))})
    return checked, failures


def suite_coherence(t, cap, workers=1):
    """Stochasticity of all three graphs up to partition size cap, plus the
    two-box support law for the even/odd edges."""
    checked, failures = 0, []
    specs = [("standard", cap), ("even", cap // 2), ("odd", (cap - 1) // 2)]
    for kind, levels_n in specs:
        g = GraphKind(kind, t)
        levels = build_levels(g, levels_n)
        ok, w = coherence_check(g, levels_n, levels)
        checked += sum(len(lv.vertices) for lv in levels[1:])
        if not ok:
            failures.append({"case": f"{kind} level {w[0]}", "vertex": partition_str(w[1])})
        if kind != "standard":
            for lv in levels[1:]:
                sources = {}
                for src, dst, _ in lv.edges:
                    sources.setdefault(src, []).append(dst)
                for src, dsts in sources.items():
                    checked += 1
                    if sorted(dsts, reverse=True) != covers_two(src):
                        failures.append({"case": f"{kind} edge support at {partition_str(src)}"})
    return checked, failures


def suite_prop2e(t, cap, workers=1):
    """Row/column evaluations: the row functional is the indicator of row
    shapes on the P basis; the column functional takes (1-t)^n on column
    shapes in the Q basis and 0 elsewhere."""
    if not 0 < t < 1:
        raise ValueError("prop2e needs t in (0, 1)")
    ctx = HLContext(t, cap)
    row = fn.phi_row(t, cap)
    col = fn.phi_col(t, cap)
    checked, failures = 0, []
    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            checked += 2
            want_row = Fraction(1) if len(lam) <= 1 else Fraction(0)
            got_row = row.evaluate(hl_P(lam, ctx))
            if got_row != want_row:
                failures.append({"case": f"row on P{partition_str(lam)}",
                                 "expected": scalar_str(want_row), "got": scalar_str(got_row)})
            want_col = (1 - t) ** n if all(x == 1 for x in lam) else Fraction(0)
            got_col = col.evaluate(hl_Q(lam, ctx))
            if got_col != want_col:
                failures.append({"case": f"col on Q{partition_str(lam)}",
                                 "expected": scalar_str(want_col), "got": scalar_str(got_col)})
    return checked, failures


def suite_negative_fbar(t, cap, workers=1):
    """Search for a negative sign-twisted constant; absence is the failure."""
    witness = find_negative_fbar(t, cap)
    if witness is None:
        return 1, [{"case": "no negative value found",
                    "detail": f"cap={cap} may be too small"}], None
    lam, mu, nu, v = witness
    return 1, [], {"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                   "value": scalar_str(v)}


def suite_plancherel(t, cap, workers=1):
    """The even/odd embeddings carry the pure-power functional to the
    matching even/odd indicator functionals, as exact value tables."""
    half = (cap + 1) // 2
    pa = fn.plancherel("A", half)
    checked, failures = 0, []
    for side, emb, want in (("even", fn.embed_even(pa), fn.plancherel("even", cap)),
                            ("odd", fn.embed_odd(pa), fn.plancherel("odd", cap))):
        for mu in partitions_upto(cap):
            checked += 1
            if emb.value(mu) != want.value(mu):
                failures.append({"case": f"{side} at {partition_str(mu)}",
                                 "expected": scalar_str(want.value(mu)),
                                 "got": scalar_str(emb.value(mu))})
    return checked, failures


def suite_cauchy(t, cap, workers=1):
    """Degree-n slices of the product kernel: sum of P (x) Q over size-n
    shapes equals the z-weighted diagonal power-sum sum."""
    ctx = HLContext(t, cap)
    checked, failures = 0, []
    for n in range(cap + 1):
        lhs = None
        for lam in enumerate_partitions(n):
            term = tensor(hl_P(lam, ctx), hl_Q(lam, ctx))
            lhs = term if lhs is None else lhs + term
        rhs = None
        for kappa in enumerate_partitions(n):
            term = tensor(p(kappa), p(kappa)).scale(1 / z_factor(kappa, t))
            rhs = term if rhs is None else rhs + term
        checked += 1
        if lhs != rhs:
            failures.append({"case": f"degree {n}"})
    return checked, failures


def run_suite(name: str, t, cap: int | None = None, workers: int = 1) -> dict:
    """Run one named suite and assemble its report."""
    t = Fraction(t)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    if cap is None:
        cap = DEFAULT_CAPS[name]
    start = time.monotonic()
    warnings, observations, witness = [], None, None
    if name == "pieri":
        checked, failures = suite_pieri(t, cap, workers)
    elif name == "positivity-f":
        checked, failures, warnings = suite_positivity_f(t, cap, workers)
    elif name == "positivity-ftilde":
        checked, failures, warnings, observations = suite_positivity_ftilde(t, cap, workers)
    elif name == "mackey":
        checked, failures = suite_mackey(t, cap, workers)
    elif name == "harmonic-embed":
        checked, failures = suite_harmonic_embed(t, cap, workers)
    elif name == "twisted-mixing":
        checked, failures = suite_twisted_mixing(t, cap, workers)
    elif name == "coherence":
        checked, failures = suite_coherence(t, cap, workers)
    elif name == "prop2e":
        checked, failures = suite_prop2e(t, cap, workers)
    elif name == "negative-fbar":
        checked, failures, witness = suite_negative_fbar(t, cap, workers)
    elif name == "plancherel":
        checked, failures = suite_plancherel(t, cap, workers)
    else:
        checked, failures = suite_cauchy(t, cap, workers)
    report = {
        "suite": name,
        "t": scalar_str(t),
        "cap": cap,
        "checked": checked,
        "failures": failures,
        "elapsed_ms": int((time.monotonic() - start) * 1000),
    }
    if warnings:
        report["warnings"] = warnings
    if observations:
        report["observations"] = observations
    if name == "negative-fbar":
        report["witness"] = witness
    return report
