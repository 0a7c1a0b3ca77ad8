"""
Command line front end.

    kzd emu --mu 1,0
    kzd fmu --mu 0,2 --method mpa
    kzd reduce --mu 0,2 --m 1 --p 1
    kzd psi-table --delta 0,0,2,2 --m 2
    kzd h-eval --nu 0,1,1 --x 2 --x 1
    kzd staircase --mu 0,2,1 --m 2
    kzd verify local-duality --delta 0,0,2 --m 1
    kzd suite --only 1,8

Exit status: 0 when every requested check passes, 1 on a verification
failure (witness as JSON on stderr), 2 on an invalid request.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import serialize
from .config import ConfigError, load_bounds
from .ratfunc import PoleOrderExceeded
from .report import CheckReport

VERIFY_TARGETS = ("hecke", "exchange", "cyclic", "mpa", "local-duality", "global-duality",
                  "conjecture")


class InvalidSpec(ValueError):
    pass


class CheckFailed(Exception):
    def __init__(self, report, output=""):
        super().__init__(report.summary())
        self.report = report
        self.output = output


@dataclass
class JobSpec:
    command: str
    target: str | None = None
    n: int | None = None
    mu: tuple | None = None
    delta: tuple | None = None
    nu: tuple | None = None
    m: object = None
    p: int | None = None
    r: int | None = None
    method: str | None = None
    degree: int = 3
    samples: int = 0
    width: int | None = None
    species: int = 1
    max_each: int = 3
    positions: list = field(default_factory=list)
    only: tuple = ()
    seed: int = 0
    fmt: str = "json"
    bounds: object = None


def parse_comp(s):
    if s is None:
        return None
    try:
        out = tuple(int(x) for x in s.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise InvalidSpec(f"bad composition {s!r}") from None
    if any(x < 0 for x in out):
        raise InvalidSpec(f"negative part in {s!r}")
    return out


def parse_m(s):
    if s is None:
        return None
    try:
        m = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise InvalidSpec(f"bad m {s!r}") from None
    if m <= 0:
        raise InvalidSpec("m must be positive")
    return int(m) if m.denominator == 1 else m


def _check_bounds(spec):
    b = spec.bounds
    for name in ("mu", "delta", "nu"):
        c = getattr(spec, name)
        if c is None:
            continue
        if spec.n is not None and len(c) != spec.n:
            raise InvalidSpec(f"--{name} has {len(c)} parts but --n is {spec.n}")
        if len(c) > b.max_n:
            raise InvalidSpec(f"n = {len(c)} exceeds max_n = {b.max_n}")
        if sum(c) > b.max_weight:
            raise InvalidSpec(f"weight {sum(c)} exceeds max_weight = {b.max_weight}")
        if c and max(c) > b.max_r:
            raise InvalidSpec(f"part {max(c)} exceeds max_r = {b.max_r}")
    if spec.n is not None and spec.n > b.max_n:
        raise InvalidSpec(f"n = {spec.n} exceeds max_n = {b.max_n}")
    if spec.width is not None and spec.width > b.window:
        raise InvalidSpec(f"width {spec.width} exceeds window cap {b.window}")


def _need(spec, *names):
    for name in names:
        if getattr(spec, name) is None:
            raise InvalidSpec(f"--{name.replace('_', '-')} is required for {spec.command}")


def _emit(spec, obj):
    return serialize.serialize(obj, spec.fmt).decode()


# -- commands ---------------------------------------------------------

def cmd_emu(spec):
    from .macdonald import nonsymmetric_macdonald
    _need(spec, "mu")
    method = spec.method or "triangular"
    if method not in ("triangular", "bareiss", "both"):
        raise InvalidSpec(f"unknown method {method}")
    if method == "both":
        a = nonsymmetric_macdonald(spec.mu)
        rep = CheckReport(f"E{spec.mu} triangular vs bareiss")
        rep.record(a == nonsymmetric_macdonald(spec.mu, "bareiss"), spec.mu)
        if not rep.passed:
            raise CheckFailed(rep, _emit(spec, a))
        return _emit(spec, a)
    return _emit(spec, nonsymmetric_macdonald(spec.mu, method))


def cmd_fmu(spec):
    from .asep_poly import (asep_polynomial, f_delta_rank_two_closed, f_delta_sum_formula,
                            mpa_rank_r, mpa_rank_two)
    from .combinatorics import antidominant
    _need(spec, "mu")
    mu = spec.mu
    f = asep_polynomial(mu)
    method = spec.method or "recursion"
    if method == "recursion":
        return _emit(spec, f)
    parts = set(mu) - {0}
    if method == "mpa":
        if parts <= {1, 2} and 2 in parts:
            g = mpa_rank_two(mu)
        elif len(parts) == 1 and max(parts) >= 2:
            g = mpa_rank_r(mu)
        else:
            raise InvalidSpec("mpa needs parts in {0,1,2} with a 2, or in {0,r}")
    elif method == "closed":
        if mu != antidominant(mu):
            raise InvalidSpec("closed form needs an anti-partition")
        if parts <= {1, 2} and 2 in parts:
            g = f_delta_rank_two_closed(len(mu), mu.count(1), mu.count(2))
        elif len(parts) == 1 and max(parts) >= 2:
            g = f_delta_sum_formula(mu)
        else:
            raise InvalidSpec("closed form needs parts in {0,1,2} with a 2, or in {0,r}")
    else:
        raise InvalidSpec(f"unknown method {method}")
    rep = CheckReport(f"f{mu} recursion vs {method}")
    rep.record(f == g, {"mu": list(mu), "recursion": str(f), method: str(g)})
    if not rep.passed:
        raise CheckFailed(rep, _emit(spec, f))
    return _emit(spec, f)


def cmd_reduce(spec):
    from .reduction import NonzeroResidual, reduce_expand
    _need(spec, "mu", "m")
    order = 1 if spec.p is None else spec.p
    try:
        psi = reduce_expand(spec.mu, spec.m, order)
    except NonzeroResidual as exc:
        rep = CheckReport(f"reduce {spec.mu}")
        rep.record(False, {"residual": str(exc.residual)})
        raise CheckFailed(rep) from None
    if spec.fmt == "json":
        return json.dumps({serialize.comp_key(nu): str(v) for nu, v in psi.items()},
                          separators=(",", ":"))
    return "\n".join(f"{serialize.comp_key(nu)}: {v}" for nu, v in psi.items())


def cmd_psi_table(spec):
    from .reduction import psi_table
    _need(spec, "delta")
    try:
        table = psi_table(spec.delta, spec.m, spec.p)
    except ValueError as exc:
        raise InvalidSpec(str(exc)) from None
    return _emit(spec, table)


def cmd_h_eval(spec):
    from .reduction import H_observable
    _need(spec, "nu")
    return str(H_observable(spec.nu, *spec.positions))


def cmd_staircase(spec):
    from .combinatorics import staircase
    _need(spec, "mu", "m")
    return json.dumps([x if isinstance(x, int) else str(x) for x in staircase(spec.mu, spec.m)],
                      separators=(",", ":"))


def _report_out(spec, rep):
    if not rep.passed:
        raise CheckFailed(rep, _emit(spec, rep))
    return _emit(spec, rep)


def cmd_verify(spec):
    from . import masep
    from .asep_poly import verify_cyclic, verify_exchange
    from .combinatorics import antidominant, sector
    from .hecke import verify_hecke_relations
    t = spec.target
    if t == "hecke":
        _need(spec, "n")
        rep = verify_hecke_relations(spec.n, spec.degree, spec.samples, spec.seed)
    elif t == "exchange":
        _need(spec, "delta")
        rep = verify_exchange(spec.delta)
    elif t == "cyclic":
        c = spec.mu or spec.delta
        if c is None:
            raise InvalidSpec("--mu or --delta is required")
        rep = CheckReport(f"cyclic {antidominant(c)}")
        for mu in ([spec.mu] if spec.mu else sector(antidominant(c))):
            rep.merge(verify_cyclic(mu))
    elif t == "mpa":
        c = spec.mu or spec.delta
        if c is None:
            raise InvalidSpec("--mu or --delta is required")
        rep = CheckReport(f"mpa {antidominant(c)}")
        for mu in ([spec.mu] if spec.mu else sector(antidominant(c))):
            sub = JobSpec("fmu", mu=mu, method="mpa", bounds=spec.bounds)
            try:
                cmd_fmu(sub)
                rep.record(True)
            except CheckFailed as exc:
                rep.merge(exc.report)
    elif t == "local-duality":
        from .reduction import psi_table
        _need(spec, "delta")
        try:
            table = psi_table(spec.delta, spec.m, spec.p)
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from None
        rep = masep.verify_table_duality(table)
        rep.record(table.consistent, ("table not of the closed form", str(table.common_factor)))
        rep.info["d"] = str(table.common_factor)
    elif t == "global-duality":
        _need(spec, "width")
        rep = masep.global_sweep(spec.width, spec.species, spec.max_each)
    elif t == "conjecture":
        from .reduction import conjecture_probe
        _need(spec, "mu", "m")
        r = conjecture_probe(spec.mu, spec.m, 1 if spec.p is None else spec.p)
        rep = CheckReport(f"conjecture {spec.mu} m={spec.m} p={r.p}")
        rep.info.update({"status": r.status, "nu": r.nu and list(r.nu),
                         "alpha": None if r.alpha is None else str(r.alpha)})
        rep.record(r.status in ("confirmed", "zero"), rep.info)
    else:
        raise InvalidSpec(f"unknown verify target {t!r}")
    return _report_out(spec, rep)


def cmd_suite(spec):
    from .suite import CRITERIA, run_suite
    numbers = spec.only or tuple(c.number for c in CRITERIA)
    if any(k < 1 or k > len(CRITERIA) for k in numbers):
        raise InvalidSpec(f"criteria are numbered 1..{len(CRITERIA)}")
    results = run_suite(numbers, threads=spec.bounds.threads)
    lines = []
    total = CheckReport("suite")
    for k, rep in results:
        lines.append(f"[{k}] {rep.summary()} {rep.info.get('seconds', 0):.1f}s")
        total.merge(rep)
    if not total.passed:
        rep = CheckReport("suite", passed=False, checked=total.checked,
                          failures=[f"[{k}] {w}" for k, r in results for w in r.failures])
        raise CheckFailed(rep, "\n".join(lines))
    return "\n".join(lines)


COMMANDS = {"emu": cmd_emu, "fmu": cmd_fmu, "reduce": cmd_reduce, "psi-table": cmd_psi_table,
            "h-eval": cmd_h_eval, "staircase": cmd_staircase, "verify": cmd_verify,
            "suite": cmd_suite}


def run(spec):
    """Execute a job; returns (exit code, stdout text, stderr text)."""
    try:
        _check_bounds(spec)
        out = COMMANDS[spec.command](spec)
        return 0, out, ""
    except InvalidSpec as exc:
        return 2, "", f"error: {exc}"
    except CheckFailed as exc:
        witness = json.dumps(exc.report.to_dict(), separators=(",", ":"), default=str)
        return 1, exc.output, witness
    except PoleOrderExceeded as exc:
        witness = json.dumps({"error": "pole-order-exceeded", "order": exc.order, "p": exc.p,
                              "m": str(exc.m)}, separators=(",", ":"))
        return 1, "", witness


def build_parser():
    ap = argparse.ArgumentParser(prog="kzd", description="Exact Hecke/Macdonald/ASEP duality engine")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("target", nargs="?", help="verify target: " + ", ".join(VERIFY_TARGETS))
    ap.add_argument("--n", type=int)
    ap.add_argument("--mu")
    ap.add_argument("--delta")
    ap.add_argument("--nu")
    ap.add_argument("--m")
    ap.add_argument("--p", type=int, help="pole order (reduce, conjecture) or rank-two sector parameter (psi-table, local-duality)")
    ap.add_argument("--r", type=int)
    ap.add_argument("--method")
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--samples", type=int, default=0)
    ap.add_argument("--width", type=int)
    ap.add_argument("--species", type=int, default=1)
    ap.add_argument("--max-each", type=int, default=3)
    ap.add_argument("--x", action="append", default=[], help="sites of one species (repeat per species)")
    ap.add_argument("--only", help="comma-separated criterion numbers")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("json", "pretty"), default="json")
    ap.add_argument("--config")
    ap.add_argument("--max-weight", type=int)
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--max-r", type=int)
    ap.add_argument("--window", type=int)
    ap.add_argument("--threads", type=int)
    return ap


def spec_from_args(args):
    bounds = load_bounds({"max_weight": args.max_weight, "max_n": args.max_n,
                          "max_r": args.max_r, "window": args.window,
                          "threads": args.threads}, path=args.config)
    if args.command == "verify" and args.target not in VERIFY_TARGETS:
        raise InvalidSpec(f"verify needs one of: {', '.join(VERIFY_TARGETS)}")
    if args.command != "verify" and args.target is not None:
        raise InvalidSpec(f"unexpected argument {args.target!r}")
    return JobSpec(
        command=args.command, target=args.target, n=args.n, mu=parse_comp(args.mu),
        delta=parse_comp(args.delta), nu=parse_comp(args.nu), m=parse_m(args.m), p=args.p,
        r=args.r, method=args.method, degree=args.degree, samples=args.samples,
        width=args.width, species=args.species, max_each=args.max_each,
        positions=[parse_comp(x) for x in args.x],
        only=parse_comp(args.only) or (), seed=args.seed, fmt=args.format, bounds=bounds)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
    except (InvalidSpec, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code, out, err = run(spec)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
