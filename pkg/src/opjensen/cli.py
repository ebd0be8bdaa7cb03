"""Command-line entry point: ``opjensen reproduce | fuzz | check``.

Exit status: 0 when everything passed, 1 when an inequality (or a golden
comparison) failed, 2 for hypothesis violations, parse errors and invalid
arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import HypothesisError, OpJensenError
from .functions import ScalarFunction
from .fuzz import RunSummary, run_fuzz
from .instance import Instance, canonical_theorem, run_instance
from .reproduce import EXAMPLE_IDS, reproduce
from .spectral import DEFAULT_TOL

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def resolve_tol(flag):
    """``--tol`` wins over ``LOEWNER_TOL``, which wins over the default."""
    if flag is not None:
        return float(flag)
    env = os.environ.get("LOEWNER_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise ValueError(f"LOEWNER_TOL is not a number: {env!r}") from None
    return DEFAULT_TOL


def _write(payload, path):
    text = json.dumps(payload, indent=2)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_reproduce(args, tol):
    ids = EXAMPLE_IDS if args.example == "all" else (args.example,)
    summary = RunSummary(f"reproduce {args.example}")
    start = time.perf_counter()
    results = []
    for ex in ids:
        res = reproduce(ex, tol)
        results.append(res)
        for c in res.comparisons:
            summary.instances_run += 1
            if c.passed:
                summary.passed += 1
            else:
                summary.failed += 1
        summary.reports.extend(res.reports)
        summary.strict_count += sum(r.strict() for r in res.reports)
        if not args.json:
            for c in res.comparisons:
                print(f"[{'PASS' if c.passed else 'FAIL'}] {ex}: {c.name}" + (f" ({c.detail})" if c.detail else ""))
            for d in res.discrepancies:
                print(f"[NOTE] {ex}: {d}")
    summary.wall_time = time.perf_counter() - start
    payload = {"summary": summary.to_json(), "examples": [r.to_json() for r in results]}
    if args.out:
        _write(payload, args.out)
    if args.json:
        print(json.dumps(payload["summary"], indent=2))
    else:
        print(summary.line())
    return EXIT_OK if summary.ok else EXIT_FAIL


def _theorem_from_args(args):
    thm = args.theorem
    if args.variant:
        thm = f"{thm}.{args.variant}"
    if thm == "power-pairs":
        return thm
    return canonical_theorem(thm)


def cmd_fuzz(args, tol):
    thm = _theorem_from_args(args)
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    function = ScalarFunction.parse(args.function) if args.function else None
    params = {}
    if thm.startswith("power-pairs"):
        if function is not None:
            if function.kind != "power":
                raise ValueError("power-pairs takes --function power:p")
            params["p"] = function.params[0]
        if args.q is not None:
            params["q"] = args.q
    summary = run_fuzz(thm, args.count, seed=args.seed, tol=tol, workers=args.workers, function=function,
                       dim=args.dim, m=args.m, M=args.M, params=params or None)
    if args.out:
        _write(summary.to_json(), args.out)
    if args.json:
        print(json.dumps({k: v for k, v in summary.to_json().items() if k != "reports"}, indent=2))
    else:
        print(summary.line())
        for e in summary.errors[:5]:
            print(f"  errored #{e['index']}: {e['error']}")
        for r in summary.reports:
            if not r.passed:
                print(f"  {r.summary()}")
    if summary.failed:
        return EXIT_FAIL
    return EXIT_INPUT if summary.errored else EXIT_OK


def cmd_check(args, tol):
    summary = RunSummary(f"check {args.file}")
    start = time.perf_counter()
    with open(args.file) as fh:
        text = fh.read()
    try:
        inst = Instance.loads(text)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot parse instance file: {exc}") from None
    if args.variant and inst.theorem == "main":
        inst.params["variant"] = args.variant
    rep = run_instance(inst, tol=tol)
    summary.instances_run = 1
    summary.passed, summary.failed = (1, 0) if rep.passed else (0, 1)
    summary.strict_count = int(rep.strict())
    summary.reports.append(rep)
    summary.wall_time = time.perf_counter() - start
    if args.out:
        _write(rep.to_json(), args.out)
    if args.json:
        print(json.dumps({k: v for k, v in summary.to_json().items() if k != "reports"}, indent=2))
    elif args.out:
        print(rep.summary())
    else:
        _write(rep.to_json(), None)
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="opjensen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None,
                        help=f"Loewner tolerance (default {DEFAULT_TOL:g}, or LOEWNER_TOL)")
        sp.add_argument("--out", default=None, help="write the JSON report here")
        sp.add_argument("--json", action="store_true", help="print the summary as JSON")

    rp = sub.add_parser("reproduce", help="recompute the fixed golden examples")
    rp.add_argument("example", choices=EXAMPLE_IDS + ("all",))
    common(rp)

    fp = sub.add_parser("fuzz", help="run a seeded campaign for one checker")
    fp.add_argument("theorem", help="checker id, e.g. main, cor25.2, omega.mid-in, monotone.iii, power-pairs")
    fp.add_argument("--seed", type=int, default=0)
    fp.add_argument("--count", type=int, default=100)
    fp.add_argument("--dim", type=int, default=None, help="operator dimension (default: cycle 1..5)")
    fp.add_argument("--m", type=float, default=None, help="lower bound m (default: drawn per instance)")
    fp.add_argument("--M", type=float, default=None, help="upper bound M (default: drawn per instance)")
    fp.add_argument("--function", default=None, help="kind[:params], e.g. power:4, exp, -power:2, log, affine:1:0")
    fp.add_argument("--variant", default=None, help="theorem variant, e.g. X2 for main, 3 for cor25")
    fp.add_argument("--q", type=float, default=None, help="exponent q for power-pairs")
    fp.add_argument("--workers", type=int, default=1)
    common(fp)

    cp = sub.add_parser("check", help="check an instance JSON file")
    cp.add_argument("file")
    cp.add_argument("--variant", default=None, help="variant for a 'main' instance")
    common(cp)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = resolve_tol(args.tol)
        handler = {"reproduce": cmd_reproduce, "fuzz": cmd_fuzz, "check": cmd_check}[args.command]
        return handler(args, tol)
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OpJensenError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
