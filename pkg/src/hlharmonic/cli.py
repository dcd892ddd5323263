"""Command-line surface: expansions, structure-constant dumps, graph dumps,
functional construction and mixing, and the named verification suites.

The parameter t is always an exact rational string such as 1/3; decimal
input is rejected.  Subcommands: expand, structconst, graph, functional,
mix, verify.  Exit status is 0 only when there are no failures.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import functionals as fn
from .graphs import GraphKind, build_levels
from .hlbasis import (
    HLContext,
    expand_in_P,
    expand_in_P_tilde,
    hl_P,
    hl_P_tilde,
    hl_Q,
    hl_Q_tilde,
    structconst_f,
    structconst_fbar,
    structconst_ftilde,
)
from .serialize import (
    functional_to_json,
    graph_to_json,
    parse_partition,
    parse_scalar,
    partition_str,
    scalar_str,
    structconst_csv,
)
from .suites import SUITES, run_suite
from .symring import SymElement, p, term_order


@dataclass
class RunConfig:
    t: Fraction
    cap: int | None
    output_format: str
    workers: int
    out: str | None


BASIS_LABELS = {"p": "p", "P": "P", "Q": "Q", "Ptilde": "Pt", "Qtilde": "Qt"}

_TERM_RE = re.compile(r"^(?:([+-]?\d+(?:/\d+)?)\*)?(p|P|Q|Ptilde|Qtilde)(\[[\d,\s]*\])$")


def _parse_element(text: str):
    """Parse e.g. "P[2,1] + 3/2*p[1] - Q[2]" into (basis -> unused), returning
    a list of (coeff, basis, partition) terms."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    # split into signed terms; +/- inside brackets never occurs
    terms, buf, depth = [], "", 0
    for ch in s:
        if ch in "+-" and depth == 0 and buf:
            terms.append(buf)
            buf = ch
        else:
            buf += ch
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
    if buf:
        terms.append(buf)
    out = []
    for term in terms:
        sign = Fraction(1)
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign, term = Fraction(-1), term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r} (expected e.g. 3/2*P[2,1])")
        coeff = parse_scalar(m.group(1)) if m.group(1) else Fraction(1)
        out.append((sign * coeff, m.group(2), parse_partition(m.group(3))))
    return out


def _format_expansion(coeffs: dict, basis: str) -> str:
    label = BASIS_LABELS[basis]
    items = sorted(coeffs.items(), key=lambda kv: term_order(kv[0]))
    if not items:
        return "0"
    bits = []
    for i, (lam, c) in enumerate(items):
        mag = abs(c)
        body = f"{label}{partition_str(lam)}" if mag == 1 else f"({scalar_str(mag)}){label}{partition_str(lam)}"
        if i == 0:
            bits.append(body if c > 0 else f"-{body}")
        else:
            bits.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(bits)


def _element_to_sym(terms, t: Fraction, cap: int) -> SymElement:
    ctx_t = ctx_neg = None
    total = SymElement()
    for coeff, basis, lam in terms:
        if basis == "p":
            total = total + p(lam).scale(coeff)
            continue
        if basis in ("P", "Q"):
            if ctx_t is None:
                ctx_t = HLContext(t, cap)
            e = hl_P(lam, ctx_t) if basis == "P" else hl_Q(lam, ctx_t)
        else:
            if ctx_neg is None:
                ctx_neg = HLContext(-t, cap)
            e = hl_P_tilde(lam, ctx_neg) if basis == "Ptilde" else hl_Q_tilde(lam, ctx_neg)
        total = total + e.scale(coeff)
    return total


def _sym_to_basis(f: SymElement, basis: str, t: Fraction, cap: int) -> dict:
    if basis == "p":
        return dict(f.terms)
    if basis in ("P", "Q"):
        ctx = HLContext(t, cap)
        coeffs = expand_in_P(f, ctx)
        if basis == "Q":
            from .partitions import b_factor
            coeffs = {lam: c / b_factor(lam, t) for lam, c in coeffs.items()}
        return coeffs
    ctx = HLContext(-t, cap)
    coeffs = expand_in_P_tilde(f, ctx)
    if basis == "Qtilde":
        from .partitions import b_factor
        coeffs = {lam: c / b_factor(lam, -t) for lam, c in coeffs.items()}
    return coeffs


def cmd_expand(args, cfg: RunConfig) -> int:
    terms = _parse_element(args.element)
    cap = cfg.cap if cfg.cap is not None else max(sum(lam) for _, _, lam in terms)
    f = _element_to_sym(terms, cfg.t, cap)
    coeffs = _sym_to_basis(f, args.to_basis, cfg.t, cap)
    if cfg.output_format == "json":
        data = {"basis": args.to_basis,
                "terms": [{"mu": list(lam), "c": scalar_str(c)}
                          for lam, c in sorted(coeffs.items(), key=lambda kv: term_order(kv[0]))]}
        _emit(json.dumps(data, indent=2), cfg)
    else:
        _emit(_format_expansion(coeffs, args.to_basis), cfg)
    return 0


def cmd_structconst(args, cfg: RunConfig) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    t = cfg.t
    if args.family == "f":
        cap = cfg.cap if cfg.cap is not None else sum(mu) + sum(nu)
        fam = structconst_f(mu, nu, HLContext(t, cap))
    elif args.family == "ftilde":
        if not 0 < t < 1:
            raise ValueError("ftilde needs t in (0, 1)")
        cap = cfg.cap if cfg.cap is not None else 2 * sum(mu) + sum(nu)
        fam = structconst_ftilde(mu, nu, HLContext(t * t, sum(mu)), HLContext(-t, cap))
    else:
        if not 0 < t < 1:
            raise ValueError("fbar needs t in (0, 1)")
        cap = cfg.cap if cfg.cap is not None else sum(mu) + sum(nu)
        fam = structconst_fbar(mu, nu, HLContext(-t, cap))
    rows = [(lam, mu, nu, v) for lam, v in sorted(fam.items(), key=lambda kv: term_order(kv[0]))]
    if cfg.output_format == "json":
        data = [{"lambda": list(lam), "mu": list(m), "nu": list(n), "value": scalar_str(v)}
                for lam, m, n, v in rows]
        _emit(json.dumps(data, indent=2), cfg)
    elif cfg.output_format == "csv":
        _emit(structconst_csv(rows), cfg)
    else:
        for lam, _, _, v in rows:
            _emit(f"{partition_str(lam)}: {scalar_str(v)}", cfg)
    return 0


def cmd_graph(args, cfg: RunConfig) -> int:
    g = GraphKind(args.kind, cfg.t)
    levels = build_levels(g, args.levels)
    _emit(json.dumps(graph_to_json(g, levels), indent=2), cfg)
    return 0


def _csv_scalars(text: str):
    return [parse_scalar(x) for x in text.split(",")] if text else []


def _functional_from_args(kind, t, cap, alpha="", beta=""):
    if kind == "row":
        return fn.phi_row(t, cap)
    if kind == "col":
        return fn.phi_col(t, cap)
    if kind == "extreme":
        return fn.extreme_phi(_csv_scalars(alpha), _csv_scalars(beta), t, cap)
    if kind.startswith("plancherel-"):
        return fn.plancherel(kind.removeprefix("plancherel-"), cap)
    raise ValueError(f"unknown functional kind {kind!r}")


def cmd_functional(args, cfg: RunConfig) -> int:
    cap = cfg.cap if cfg.cap is not None else 8
    phi = _functional_from_args(args.kind, cfg.t, cap, args.alpha, args.beta)
    _emit(json.dumps(functional_to_json(phi), indent=2), cfg)
    return 0


def cmd_mix(args, cfg: RunConfig) -> int:
    """Mix two functionals per a JSON spec file.

    Spec keys: mode ("std"|"twisted"), r, and s (std) or u (twisted);
    optional shift (twisted, default 0); phi and psi are functional
    descriptions {"kind": ..., "alpha": ..., "beta": ...} or inline
    {"cap": ..., "values": [...]} tables; t and cap default to the
    command-line configuration.
    """
    with open(args.spec_file) as fh:
        spec = json.load(fh)
    t = parse_scalar(spec["t"]) if "t" in spec else cfg.t
    cap = spec.get("cap", cfg.cap if cfg.cap is not None else 8)

    def build(side):
        d = spec[side]
        if "values" in d:
            from .serialize import functional_from_json
            return functional_from_json(d)
        return _functional_from_args(d["kind"], parse_scalar(d.get("t", scalar_str(t))),
                                     d.get("cap", cap), d.get("alpha", ""), d.get("beta", ""))

    phi, psi = build("phi"), build("psi")
    r = parse_scalar(spec["r"])
    if spec.get("mode", "twisted") == "std":
        s = parse_scalar(spec["s"]) if "s" in spec else 1 - r
        mixed = fn.mix_std(phi, psi, r, s)
    else:
        u = parse_scalar(spec["u"])
        mixed = fn.mix_twisted(phi, psi, t, r, u, shift=int(spec.get("shift", 0)))
    _emit(json.dumps(functional_to_json(mixed), indent=2), cfg)
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    report = run_suite(args.suite, cfg.t, cfg.cap, workers=cfg.workers)
    if cfg.output_format == "pretty":
        status = "PASS" if not report["failures"] else "FAIL"
        _emit(f"{report['suite']}: {status} ({report['checked']} checks, "
              f"{len(report['failures'])} failures, {report['elapsed_ms']} ms)", cfg)
        for w in report.get("warnings", []):
            _emit(f"  warning: {w}", cfg)
        for flr in report["failures"][:10]:
            _emit(f"  failure: {json.dumps(flr)}", cfg)
        if report.get("witness"):
            _emit(f"  witness: {json.dumps(report['witness'])}", cfg)
    else:
        _emit(json.dumps(report, indent=2), cfg)
    return 0 if not report["failures"] else 1


def _emit(text: str, cfg: RunConfig):
    if cfg.out:
        with open(cfg.out, "a") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _add_common(sp):
    sp.add_argument("--t", default="1/3", help="exact rational parameter, e.g. 1/3")
    sp.add_argument("--cap", type=int, default=None, help="degree cap")
    sp.add_argument("--format", dest="output_format", default="pretty",
                    choices=["json", "csv", "pretty"])
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", default=None, help="append output to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hlharmonic",
        description="Exact verification toolkit for deformed symmetric-function "
                    "bases, twisted coproducts, and harmonic functionals.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("expand", help="expand an element between bases")
    sp.add_argument("--from", dest="from_basis", required=True,
                    choices=list(BASIS_LABELS))
    sp.add_argument("--to", dest="to_basis", required=True,
                    choices=list(BASIS_LABELS))
    sp.add_argument("element", help='e.g. "P[2]" or "p[2] + 3/2*p[1,1]"')
    _add_common(sp)

    sp = sub.add_parser("structconst", help="dump a structure-constant family")
    sp.add_argument("--family", required=True, choices=["f", "ftilde", "fbar"])
    sp.add_argument("--mu", required=True, help="e.g. [2,1]")
    sp.add_argument("--nu", required=True)
    _add_common(sp)

    sp = sub.add_parser("graph", help="dump a branching graph as JSON")
    sp.add_argument("--kind", required=True, choices=["standard", "even", "odd"])
    sp.add_argument("--levels", type=int, required=True)
    _add_common(sp)

    sp = sub.add_parser("functional", help="construct a functional and dump its table")
    sp.add_argument("--kind", required=True,
                    choices=["row", "col", "extreme", "plancherel-A",
                             "plancherel-even", "plancherel-odd"])
    sp.add_argument("--alpha", default="", help="comma-separated rationals")
    sp.add_argument("--beta", default="")
    _add_common(sp)

    sp = sub.add_parser("mix", help="mix two functionals per a JSON spec file")
    sp.add_argument("spec_file")
    _add_common(sp)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", choices=list(SUITES))
    _add_common(sp)

    return ap


_COMMANDS = {
    "expand": cmd_expand,
    "structconst": cmd_structconst,
    "graph": cmd_graph,
    "functional": cmd_functional,
    "mix": cmd_mix,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        t = parse_scalar(args.t)
        if not abs(t) < 1:
            raise ValueError(f"need |t| < 1, got {scalar_str(t)}")
        cfg = RunConfig(t=t, cap=args.cap, output_format=args.output_format,
                        workers=max(1, args.workers), out=args.out)
        return _COMMANDS[args.command](args, cfg)
    except (ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
