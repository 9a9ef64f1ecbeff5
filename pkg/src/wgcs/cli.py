"""Command-line front end: analyze, sweep, mindist, seq, verify."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import codes as cd
from .cyclotomy import CyclotomyError, valid_pairs, whiteman
from .gf import EXT_DEGREE_CAP
from .sequence import wgcs1, wgcs2
from .verify import SCHEMA, all_checks, analyze, estimate_distance, sweep

EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(args, doc, text):
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _mark(passed):
    return {True: "PASS", False: "FAIL", None: "SKIP"}[passed]


def _check_lines(checks):
    return [f"  {_mark(ch['passed']):4}  {ch['id']:28} {ch['detail']}" for ch in checks]


def _require_q(n1, n2, q):
    from sympy import isprime

    if not isprime(q):
        raise ValueError(f"q={q} must be prime")
    if (n1 * n2) % q == 0:
        raise ValueError(f"gcd(n, q) = gcd({n1 * n2}, {q}) != 1")


# commands


def cmd_analyze(args):
    _require_q(args.n1, args.n2, args.q)
    rep = analyze(
        args.n1, args.n2, args.q,
        g=args.g_override, ext_cap=args.ext_cap, budget=args.budget,
        trials=args.trials, seed=args.seed, distance=not args.no_distance,
    )
    p = rep.params
    dist = rep.distanceInfo
    lines = [
        f"(n1, n2, q) = ({p['n1']}, {p['n2']}, {p['q']})  n = {p['n']}  g = {p['g']}  u = {p['u']}"
        f"  e = {p['e']}  eta = {p['eta']}",
        f"-1 lies in W{rep.minusOneClass}",
        "ACF spectrum: " + ", ".join(f"{v} x{k}" for v, k in rep.acfSpectrum.items()),
        f"linear complexity: gcd {rep.linearComplexity['gcd']}, BM {rep.linearComplexity['bm']}",
        f"case: part {rep.caseReport['part']}, Lambda(beta) {rep.caseReport['lambdaBetaCase']},"
        f" extension degree {rep.caseReport['extDegree']}",
        f"code: [{p['n']},{rep.dimension}]  generator degree {rep.generator['degree']}",
        f"generator: {rep.generator['human']}",
    ]
    if dist is not None:
        lines.append(_distance_line(dist))
    lines.append("checks:")
    lines += _check_lines(rep.theoremChecks)
    _emit(args, rep.to_dict(), "\n".join(lines))
    return 0 if rep.passed else EXIT_FAIL


def _distance_line(d):
    if d["exact"] is not None:
        head = f"distance: exactly {d['exact']}"
    else:
        head = f"distance: {d['lower']} <= d <= {d['upper']}"
    wit = f", witness weight {d['witnessWeight']}" if d["witnessWeight"] is not None else ""
    detail = f"; {d['detail']}" if d["detail"] else ""
    return f"{head} ({d['method']}{wit}{detail})"


def cmd_sweep(args):
    pairs = [(a, b) for a, b in valid_pairs(args.nmax) if a * b >= args.nmin]
    t0 = time.perf_counter()
    rows = sweep(pairs, args.q, args.ext_cap, args.jobs)
    elapsed = time.perf_counter() - t0
    clause_rows = [r for r in rows if r["clause"] is not None]
    summary = {
        "rows": len(rows),
        "passed": sum(r["passed"] for r in rows),
        "clauseRows": len(clause_rows),
        "clauseAgree": sum(r["clauseAgrees"] for r in clause_rows),
        "seconds": round(elapsed, 2),
    }
    doc = {"schema": SCHEMA, "rows": rows, "summary": summary}
    head = f"{'n1':>4} {'n2':>4} {'q':>2} {'n':>5} {'L':>5} {'BM':>5} {'table':>5} part {'Lambda(beta)':>22} gen   acf   clause"
    lines = [head]
    for r in rows:
        clause = "-" if r["clause"] is None else f"{r['clause']} {'agrees' if r['clauseAgrees'] else 'DISAGREES'}"
        lines.append(
            f"{r['n1']:>4} {r['n2']:>4} {r['q']:>2} {r['n']:>5} {r['lcGcd']:>5} {r['lcBm']:>5} {r['lcTable']:>5}"
            f" {r['part']:>4} {r['lambdaBetaCase']:>22} {_mark(r['generatorMatches']):5} {_mark(r['acfMatches']):5} {clause}"
        )
    lines.append(
        f"{summary['passed']}/{summary['rows']} rows pass; residue clauses agree on"
        f" {summary['clauseAgree']}/{summary['clauseRows']}; {summary['seconds']} s"
    )
    _emit(args, doc, "\n".join(lines))
    return 0 if summary["passed"] == summary["rows"] else EXIT_FAIL


def cmd_mindist(args):
    _require_q(args.n1, args.n2, args.q)
    c = whiteman(args.n1, args.n2, args.g_override)
    code = cd.code_from_sequence(wgcs1(c, args.q))
    try:
        info = estimate_distance(c, args.q, code, args.budget, args.trials, args.seed, args.mode)
    except cd.BudgetExceeded as exc:
        raise ValueError(f"{exc}; raise --budget or use --mode random") from exc
    doc = {"schema": SCHEMA, "n": code.n, "k": code.k, "q": code.q, "distance": info.to_dict()}
    _emit(args, doc, f"[{code.n},{code.k}] over GF({code.q})\n" + _distance_line(info.to_dict()))
    return 0


def cmd_seq(args):
    c = whiteman(args.n1, args.n2, args.g_override)
    s = (wgcs1 if args.kind == 1 else wgcs2)(c)
    doc = {"schema": SCHEMA, "n1": c.n1, "n2": c.n2, "g": c.g, "kind": args.kind, "sequence": s.to_bitstring()}
    _emit(args, doc, s.to_bitstring())
    return 0


def cmd_verify(args):
    results = []
    for n1, n2 in args.pairs:
        c = whiteman(n1, n2, args.g_override)
        for q in args.q:
            if c.n % q == 0:
                continue
            checks = all_checks(c, q, args.ext_cap, args.seed, shape_budget=args.budget)
            results.append({"n1": n1, "n2": n2, "q": q, "checks": [vars(ch) for ch in checks]})
    ok = all(ch["passed"] is not False for r in results for ch in r["checks"])
    lines = []
    for r in results:
        lines.append(f"({r['n1']}, {r['n2']}, q={r['q']})")
        lines += _check_lines(r["checks"])
    lines.append("all checks pass" if ok else "some checks FAILED")
    _emit(args, {"schema": SCHEMA, "results": results, "passed": ok}, "\n".join(lines))
    return 0 if ok else EXIT_FAIL


# parsing


def _pair(text):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n1,n2 but got {text!r}") from None
    return a, b


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--g-override", type=int, default=None, help="common primitive root to use instead of the smallest")
    common.add_argument("--ext-cap", type=int, default=EXT_DEGREE_CAP, help="largest extension degree m to build GF(q^m)")
    common.add_argument("--budget", type=int, default=cd.DEFAULT_BUDGET, help="max codewords for exhaustive search")

    ap = argparse.ArgumentParser(prog="wgcs", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def pq(p, q_required=True):
        p.add_argument("--n1", type=int, required=True)
        p.add_argument("--n2", type=int, required=True)
        if q_required:
            p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for one parameter set")
    pq(p)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--no-distance", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", parents=[common], help="all valid pairs with nmin <= n1*n2 < nmax")
    p.add_argument("--nmin", type=int, default=0)
    p.add_argument("--nmax", type=int, default=1000)
    p.add_argument("--q", type=int, nargs="+", default=[2, 3, 5])
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mindist", parents=[common], help="minimum distance of the code")
    pq(p)
    p.add_argument("--mode", choices=("auto", "exhaustive", "random"), default="auto")
    p.add_argument("--trials", type=int, default=2000)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("seq", parents=[common], help="print one period of the sequence")
    pq(p, q_required=False)
    p.add_argument("--kind", type=int, choices=(1, 2), default=1)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("--pairs", type=_pair, nargs="+", default=[(7, 13), (7, 19), (7, 31), (13, 19)])
    p.add_argument("--q", type=int, nargs="+", default=[2, 3, 5])
    p.set_defaults(func=cmd_verify, budget=2**20)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CyclotomyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
