"""Command-line entry point: ``homflypt <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from .coeff import (
    S, X, CertificationError, Factor, factor_s2n_minus_1, factor_unit, factor_v4_minus_s2n,
    factor_variable, parse_rational,
)
from .connectsum import (
    RING_MONOIDS, ProbeFailure, UnsupportedConfiguration, certify_ring, obstruction,
    obstruction_factor, parse_presentation, reduce_coherent, s5_pipeline,
)
from .curls import eigenvalue_62, verify_62
from .hecke import BraidWord, HeckeElement, evaluate_braid, generator, markov_trace
from .idempotents import IdempotentError, alpha, basis_rank, beta, f, g, y
from .skeinrw import DiagramError, closure_of_braid, evaluate, parse_pd
from .young import c_factor, c_scalar, parse_partition, partitions, standard_tableaux

SCHEMA = 1


class UsageError(Exception):
    pass


def _limit(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def max_strands() -> int:
    return _limit("HOMFLYPT_MAX_STRANDS", 6)


def max_crossings() -> int:
    return _limit("HOMFLYPT_MAX_CROSSINGS", 16)


def _check_strands(n: int):
    cap = max_strands()
    if n > cap:
        raise UsageError(f"{n} strands exceeds the cap of {cap} (set HOMFLYPT_MAX_STRANDS to raise it)")


def _check_crossings(k: int):
    cap = max_crossings()
    if k > cap:
        raise UsageError(f"{k} crossings exceeds the cap of {cap} (set HOMFLYPT_MAX_CROSSINGS to raise it)")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _braid(text: str) -> BraidWord:
    try:
        w = BraidWord.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _check_strands(w.n)
    return w


# ---------------------------------------------------------------------------
# commands; each returns (ok, payload, text lines)

def cmd_homfly(args):
    if args.braid:
        w = _braid(args.braid)
        d = closure_of_braid(w)
        source = str(w)
    else:
        d, dotted = parse_pd(_read(args.diagram))
        if dotted:
            raise UsageError("diagram has dotted circles; use the reduce command")
        source = args.diagram
    _check_crossings(len(d.crossings))
    val = evaluate(d)
    return True, {"input": source, "value": str(val)}, [str(val)]


def cmd_trace(args):
    w = _braid(args.braid)
    val = markov_trace(evaluate_braid(w))
    return True, {"input": str(w), "value": str(val)}, [str(val)]


def _row(name: str, ok: bool) -> dict:
    return {"check": name, "pass": ok}


def cmd_idempotent_check(args):
    n = args.n
    _check_strands(n)
    rows = []
    for k in range(1, n + 1):
        fk, gk = f(k), g(k)
        rows.append(_row(f"f({k}) idempotent", fk * fk == fk))
        rows.append(_row(f"g({k}) idempotent", gk * gk == gk))
        ok_f = all(generator(i, k) * fk == fk.scale(X * S) == fk * generator(i, k) for i in range(1, k))
        ok_g = all(gk * generator(i, k) == gk.scale(-(X * S ** -1)) == generator(i, k) * gk for i in range(1, k))
        rows.append(_row(f"sigma f({k}) = xs f({k})", ok_f))
        rows.append(_row(f"g({k}) sigma = -x s^-1 g({k})", ok_g))
    for k in range(1, n + 1):
        for lam in partitions(k):
            try:
                q = y(lam)
                e = q.element
                ok = e * e == e
                norm = str(q.normalizer)
            except IdempotentError:
                ok, norm = False, None
            rows.append({"check": f"y{lam} idempotent", "pass": ok, "normalizer": norm})
            if not ok:
                continue
            ts = standard_tableaux(lam)
            orth = all(
                beta(tau).element * alpha(t).element == (e if t == tau else HeckeElement(k))
                for t in ts for tau in ts)
            rows.append(_row(f"y{lam} tableau orthogonality ({len(ts)} tableaux)", orth))
        rk = basis_rank(k)
        rows.append({"check": f"tableau basis rank in H_{k}", "pass": rk == factorial(k), "rank": rk})
    ok = all(r["pass"] for r in rows)
    lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}" for r in rows]
    return ok, {"n": n, "checks": rows}, lines


def cmd_eigen_table(args):
    _check_strands(args.max)
    rows = []
    for k in range(1, args.max + 1):
        for lam in partitions(k):
            for i in range(1, k + 1):
                for part in ("a", "b"):
                    rows.append({"lambda": list(lam.parts), "i": i, "part": part,
                                 "eigenvalue": str(eigenvalue_62(lam, i, part)),
                                 "pass": verify_62(lam, i, part)})
    ok = all(r["pass"] for r in rows)
    w = max((len(str(r["lambda"])) for r in rows), default=6)
    lines = [f"{'lambda':<{w}}  i  part  {'eigenvalue':<24} check"]
    for r in rows:
        lam = json.dumps(r["lambda"]).replace(" ", "")
        lines.append(f"{lam:<{w}}  {r['i']}  {r['part']:<4}  {r['eigenvalue']:<24} {'PASS' if r['pass'] else 'FAIL'}")
    return ok, {"max": args.max, "rows": rows}, lines


def cmd_c_table(args):
    rows = []
    for a in range(args.max + 1):
        for b in range(args.max + 1):
            for lam in partitions(a):
                for mu in partitions(b):
                    c = c_scalar(lam, mu)
                    row = {"lambda": list(lam.parts), "mu": list(mu.parts), "c": str(c)}
                    if a == b and a > 0:
                        row["nonzero"] = not c.is_zero()
                    rows.append(row)
    ok = all(r.get("nonzero", True) for r in rows)
    lines = [f"{json.dumps(r['lambda']).replace(' ', '')} {json.dumps(r['mu']).replace(' ', '')}  {r['c']}"
             for r in rows]
    return ok, {"max": args.max, "rows": rows}, lines


def cmd_rank(args):
    _check_strands(args.n)
    rk = basis_rank(args.n)
    ok = rk == factorial(args.n)
    return ok, {"n": args.n, "rank": rk, "expected": factorial(args.n)}, [str(rk)]


def cmd_reduce(args):
    p = parse_presentation(_read(args.file))
    _check_crossings(len(p.diagram.crossings))
    try:
        cert = reduce_coherent(p)
    except UnsupportedConfiguration as exc:
        raise UsageError(str(exc)) from None
    data = cert.to_json()
    ring = data["ring"]
    lines = [f"{cert.value}   over {ring}"] + [f"  {s}" for s in cert.steps]
    for c in cert.denominators:
        lines.append(f"  certificate {' * '.join(map(str, c.factors)) or '1'} -> {'ok' if c.verify() else 'FAILED'}")
    return cert.verify(), data, lines


def cmd_s5(args):
    try:
        cert = s5_pipeline()
    except ProbeFailure as exc:
        return False, {"error": str(exc)}, [f"FAIL  {exc}"]
    lines = [str(cert.value)] + [f"  {s}" for s in cert.steps] + ["PASS" if cert.verify() else "FAIL"]
    return cert.verify(), cert.to_json(), lines


def parse_tag(text: str) -> Factor:
    """Factor tags: x, v, s, unit:-1, s2n-1:<n>, v4-s2n:<n>, c:<lam>:<mu>, obstruction:<r>:<lam>:<mu>."""
    parts = text.split(":")
    head = parts[0]
    try:
        if head in ("x", "v", "s") and len(parts) == 1:
            return factor_variable(head)
        if head == "unit" and len(parts) == 2:
            return factor_unit(int(parts[1]))
        if head == "s2n-1" and len(parts) == 2:
            return factor_s2n_minus_1(int(parts[1]))
        if head == "v4-s2n" and len(parts) == 2:
            return factor_v4_minus_s2n(int(parts[1]))
        if head == "c" and len(parts) == 3:
            return c_factor(parse_partition(parts[1]), parse_partition(parts[2]))
        if head == "obstruction" and len(parts) == 4:
            return obstruction(int(parts[1]), parse_partition(parts[2]), parse_partition(parts[3]))
    except ValueError as exc:
        raise UsageError(f"bad tag {text!r}: {exc}") from None
    raise UsageError(f"unknown tag {text!r}")


def cmd_certify(args):
    try:
        value = parse_rational(args.value)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse value: {exc}") from None
    tags = [parse_tag(t) for t in args.tag]
    if args.ring == "k_r" and args.r is None:
        raise UsageError("--ring k_r needs --r")
    try:
        cert = certify_ring(value, args.ring, tags, args.r)
    except CertificationError as exc:
        return False, {"value": str(value), "ring": args.ring, "error": str(exc)}, [f"FAIL  {exc}"]
    return True, cert.to_json(), [f"PASS  {value} lies in {args.ring}"] + [f"  note: {n}" for n in cert.notes]


def cmd_obstruction(args):
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    try:
        val = obstruction_factor(args.r, lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return True, {"r": args.r, "lambda": list(lam.parts), "mu": list(mu.parts), "value": str(val)}, [str(val)]


COMMANDS = {
    "homfly": cmd_homfly, "trace": cmd_trace, "idempotent-check": cmd_idempotent_check,
    "eigen-table": cmd_eigen_table, "c-table": cmd_c_table, "rank": cmd_rank,
    "reduce": cmd_reduce, "s5": cmd_s5, "certify": cmd_certify, "obstruction": cmd_obstruction,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="homflypt", description="Exact framed Homflypt computations.")
    ap.add_argument("--json", action="store_true", help="print JSON instead of text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", help="invariant of a braid closure or a PD diagram")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='braid word, e.g. "n=2 s1 s1 s1"')
    src.add_argument("--diagram", help="PD code file")

    p = sub.add_parser("trace", help="Markov trace of a braid word")
    p.add_argument("--braid", required=True)

    p = sub.add_parser("idempotent-check", help="symmetrizer, idempotent and tableau-basis checks")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("eigen-table", help="encircling eigenvalues with exact checks")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("c-table", help="table of c(lambda, mu)")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("rank", help="rank of the tableau basis of H_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("reduce", help="reduce a surgery presentation with coherent passages")
    p.add_argument("file")

    sub.add_parser("s5", help="run the two-sphere example")

    p = sub.add_parser("certify", help="check a localization certificate")
    p.add_argument("--ring", required=True, choices=sorted(RING_MONOIDS))
    p.add_argument("--value", required=True, help='rational function, e.g. "(1)/(-1 + s^2)"')
    p.add_argument("--tag", action="append", default=[], help="factor tag, repeatable")
    p.add_argument("--r", type=int)

    p = sub.add_parser("obstruction", help="x^r - 1 - c(lambda, mu)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("n", "max"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"homflypt: --{name} must be positive", file=err)
            return 2
    try:
        ok, payload, lines = COMMANDS[args.command](args)
    except (UsageError, DiagramError, ValueError) as exc:
        print(f"homflypt {args.command}: {exc}", file=err)
        return 2
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command, "ok": ok}
        doc.update(payload)
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return 0 if ok else 1


def main():
    sys.exit(run())
