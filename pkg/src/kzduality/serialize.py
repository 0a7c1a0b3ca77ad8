"""
Canonical JSON and pretty forms for polynomials, psi tables and reports.

Coefficient schema: ``{"num": [[c, deg_q, deg_t], ...], "den": [...]}``
with integer (or rational-string) c, sorted by (deg_q, deg_t).  A ZPoly is
``{"n": n, "terms": [{"exp": [...], "num": ..., "den": ...}, ...]}`` with
terms sorted by exponent.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .ratfunc import RatFunc
from .reduction import PsiTable
from .report import CheckReport
from .zpoly import ZPoly


def _triples(terms):
    return [[c, dq, dt] for (dq, dt), c in sorted(terms.items())]


def _parse_coeff(c):
    if isinstance(c, str):
        return Fraction(c)
    return c


def ratfunc_to_obj(c):
    return {"num": _triples(c.numerator_terms()), "den": _triples(c.denominator_terms())}


def ratfunc_from_obj(obj):
    num = {(dq, dt): _parse_coeff(c) for c, dq, dt in obj["num"]}
    den = {(dq, dt): _parse_coeff(c) for c, dq, dt in obj["den"]}
    return RatFunc.from_terms(num, den)


def zpoly_to_obj(f):
    terms = []
    for e in sorted(f.terms):
        terms.append({"exp": list(e), **ratfunc_to_obj(f.terms[e])})
    return {"n": f.n, "terms": terms}


def zpoly_from_obj(obj):
    return ZPoly(obj["n"], {tuple(t["exp"]): ratfunc_from_obj(t) for t in obj["terms"]})


def _num_to_obj(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def table_to_obj(table):
    entries = [{"nu": list(nu), "mu": list(mu), "value": ratfunc_to_obj(v)}
               for (nu, mu), v in sorted(table.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
    cf = table.common_factor
    return {"delta": list(table.delta), "epsilon": list(table.epsilon),
            "m": _num_to_obj(table.m), "p": table.p,
            "common_factor": None if cf is None else ratfunc_to_obj(cf),
            "consistent": table.consistent, "entries": entries}


def table_from_obj(obj):
    m = _parse_coeff(obj["m"])
    if isinstance(m, Fraction) and m.denominator == 1:
        m = int(m)
    cf = obj["common_factor"]
    return PsiTable(tuple(obj["delta"]), tuple(obj["epsilon"]), m, obj["p"],
                    {(tuple(e["nu"]), tuple(e["mu"])): ratfunc_from_obj(e["value"])
                     for e in obj["entries"]},
                    None if cf is None else ratfunc_from_obj(cf), obj["consistent"])


def to_obj(x):
    if isinstance(x, ZPoly):
        return zpoly_to_obj(x)
    if isinstance(x, PsiTable):
        return table_to_obj(x)
    if isinstance(x, RatFunc):
        return ratfunc_to_obj(x)
    if isinstance(x, CheckReport):
        return x.to_dict()
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(x):
    return json.dumps(to_obj(x), separators=(",", ":"), sort_keys=False)


def loads(s, kind="zpoly"):
    obj = json.loads(s)
    return {"zpoly": zpoly_from_obj, "table": table_from_obj, "ratfunc": ratfunc_from_obj}[kind](obj)


def pretty(x):
    if isinstance(x, PsiTable):
        lines = [f"delta={x.delta} epsilon={x.epsilon} m={x.m} p={x.p}",
                 f"d(t) = {x.common_factor}  consistent={x.consistent}"]
        for (nu, mu), v in sorted(x.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            lines.append(f"  psi({_comp(nu)}, {_comp(mu)}) = {v}")
        return "\n".join(lines)
    if isinstance(x, CheckReport):
        out = x.summary()
        for w in x.failures:
            out += f"\n  witness: {w}"
        return out
    return str(x)


def serialize(x, fmt="json"):
    """Deterministic bytes for ``x`` in 'json' or 'pretty' form."""
    return (dumps(x) if fmt == "json" else pretty(x)).encode()


def _comp(c):
    return "(" + ",".join(str(a) for a in c) + ")"


def comp_key(c):
    return _comp(c)
