"""Text, JSON, and CSV forms of the package's values.

Scalars travel as reduced fraction strings ("1/3", "-2", "4"); decimal
input is rejected since exactness is the point.  Partitions travel as
JSON integer lists, rendered compactly as "[3,1,1]" where a string key
is needed.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .functionals import Functional
from .graphs import GraphKind
from .partitions import Partition
from .symring import SymElement, TensorElement, term_order

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(s) -> Fraction:
    """Parse an exact rational "num/den" or integer string."""
    if isinstance(s, int):
        return Fraction(s)
    s = str(s).strip()
    if not _SCALAR_RE.match(s):
        raise ValueError(f"not an exact rational (use e.g. 1/3, -2): {s!r}")
    return Fraction(s)


def scalar_str(x) -> str:
    return str(Fraction(x))


def partition_str(lam) -> str:
    return "[%s]" % ",".join(str(x) for x in lam)


def parse_partition(text) -> Partition:
    """Parse "[3,1,1]" (or a JSON list) into a Partition."""
    if isinstance(text, (list, tuple)):
        data = text
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"bad partition syntax {text!r}") from e
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ValueError(f"partition must be a list of integers: {text!r}")
    return Partition(data)


def sym_to_json(f: SymElement) -> dict:
    terms = [{"mu": list(mu), "c": scalar_str(c)}
             for mu, c in sorted(f.terms.items(), key=lambda kv: term_order(kv[0]))]
    return {"terms": terms}


def sym_from_json(data) -> SymElement:
    return SymElement({parse_partition(t["mu"]): parse_scalar(t["c"])
                       for t in data["terms"]})


def tensor_to_json(x: TensorElement) -> dict:
    terms = [{"rho": list(k[0]), "sigma": list(k[1]), "c": scalar_str(x.terms[k])}
             for k in x.support()]
    return {"terms": terms}


def tensor_from_json(data) -> TensorElement:
    return TensorElement({(parse_partition(t["rho"]), parse_partition(t["sigma"])):
                          parse_scalar(t["c"]) for t in data["terms"]})


def functional_to_json(phi: Functional) -> dict:
    values = [{"mu": list(mu), "v": scalar_str(v)}
              for mu, v in sorted(phi.values.items(), key=lambda kv: term_order(kv[0]))]
    return {
        "cap": phi.degree_cap,
        "values": values,
        "spec": [scalar_str(x) for x in phi.spec] if phi.spec is not None else None,
    }


def functional_from_json(data) -> Functional:
    values = {parse_partition(t["mu"]): parse_scalar(t["v"]) for t in data["values"]}
    spec = [parse_scalar(x) for x in data["spec"]] if data.get("spec") is not None else None
    return Functional(values, data["cap"], spec=spec)


def graph_to_json(g: GraphKind, levels: list) -> dict:
    out = {"kind": g.kind, "t": scalar_str(g.t), "levels": []}
    for lv in levels:
        out["levels"].append({
            "n": lv.level,
            "vertices": [list(v) for v in lv.vertices],
            "edges": [{"from": list(a), "to": list(b), "w": scalar_str(w)}
                      for a, b, w in lv.edges],
            "dims": {partition_str(v): scalar_str(d) for v, d in lv.dims.items()},
        })
    return out


def structconst_csv(rows) -> str:
    """CSV dump of (lam, mu, nu, value) rows: lambda,mu,nu,value."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "mu", "nu", "value"])
    for lam, mu, nu, v in rows:
        w.writerow([partition_str(lam), partition_str(mu), partition_str(nu), scalar_str(v)])
    return buf.getvalue()
