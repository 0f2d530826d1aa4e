"""Command line entry point: ``ritz-majorize {verify,repro,search,fem-demo}``.

Exit codes: 0 when every expectation is met, 1 when a proven bound (or a
classical inequality) is violated, 2 when a conjecture or known-false bound
is violated.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import BOUND_IDS, get_spec
from .classical import CLASSICAL_KINDS
from .errors import RitzMajorizeError
from .harness import (CASES, dumps, fem_demo, matches_expectation, repro, rows_to_text,
                      run_suite, search)
from .harness.instances import REGIMES
from .harness.report import write_text
from .majorization import TOL_MAJ

SEED_ENV = "RITZ_MAJORIZE_SEED"
EXIT_OK, EXIT_PROVEN, EXIT_CONJECTURE = 0, 1, 2
EXIT_USAGE = 64  # kept apart from 2, which argparse would otherwise use


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        _note(f"error: {SEED_ENV}={raw!r} is not an integer")
        raise SystemExit(EXIT_USAGE) from None


def _common(default_trials: int) -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help=f"base RNG seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--trials", type=int, default=default_trials, help="instances per bound or kind")
    p.add_argument("--tol", type=float, default=TOL_MAJ, help="relative majorization tolerance")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ritz-majorize", description="Check majorization bounds for Ritz values.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[_common(1000)], help="run the property suites")
    v.add_argument("--bounds", nargs="*", choices=BOUND_IDS, default=None,
                   help="bound ids to check (default: all proven bounds)")
    v.add_argument("--kinds", nargs="*", choices=CLASSICAL_KINDS, default=list(CLASSICAL_KINDS))
    v.add_argument("--n-max", type=int, default=12)

    r = sub.add_parser("repro", parents=[_common(1)], help="reproduce the known counterexamples")
    r.add_argument("case", nargs="?", choices=CASES + ("all",), default="all")

    s = sub.add_parser("search", parents=[_common(10000)], help="random search for violations")
    s.add_argument("bound_id", choices=BOUND_IDS)
    s.add_argument("--regime", choices=REGIMES, default="auto")
    s.add_argument("--max-violations", type=int, default=10,
                   help="stop after this many violations (0: never stop early)")
    s.add_argument("--max-attempts", type=int, default=None)
    s.add_argument("--witness", default=None, help="write the shrunk witness spec as JSON")

    f = sub.add_parser("fem-demo", parents=[_common(1)], help="mesh-refinement surrogate table")
    f.add_argument("--lambda1", type=float, default=1.0)
    f.add_argument("--lambda2", type=float, default=1.0)
    f.add_argument("--alpha", type=float, default=0.6)
    f.add_argument("--h", type=float, nargs="+", default=[1e-1, 1e-2, 1e-3])
    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_text(text, out)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _cmd_verify(args) -> int:
    kwargs = {} if args.bounds is None else {"bound_ids": args.bounds}
    res = run_suite(args.trials, args.seed, args.tol, kinds=args.kinds, n_max=args.n_max, **kwargs)
    records = []
    for r in res.bounds:
        _note(f"{r.bound_id:26s} {r.status:11s} trials={r.trials:6d} violations={r.violation_count}")
        records += [v.record() for v in r.violations]
    for c in res.classical:
        _note(f"{c.kind:26s} {'classical':11s} trials={c.trials:6d} failures={len(c.failures)}")
    _write(dumps(records, args.format), args.out)
    if res.proven_violations or res.classical_failures:
        return EXIT_PROVEN
    if any(r.violation_count for r in res.bounds):
        return EXIT_CONJECTURE
    return EXIT_OK


def _cmd_repro(args) -> int:
    cases = CASES if args.case == "all" else (args.case,)
    records, code = [], EXIT_OK
    for case in cases:
        recs = repro(case)
        for rec in recs:
            _note(f"{case}: {rec.report.bound_id} holds={str(rec.report.holds).lower()}")
        if not matches_expectation(case, recs):
            code = EXIT_PROVEN
        records += recs
    _write(dumps(records, args.format), args.out)
    return code


def _cmd_search(args) -> int:
    res = search(args.bound_id, args.trials, args.regime, args.seed, args.tol,
                 max_violations=args.max_violations or None, max_attempts=args.max_attempts)
    _note(f"{res.bound_id} ({res.status}): {res.trials} trials, {res.attempts} draws, "
          f"{res.violation_count} violations")
    if res.min_violation is not None:
        _note("smallest witness: " + json.dumps(res.min_violation.spec.to_dict()))
        if args.witness:
            write_text(json.dumps(res.min_violation.spec.to_dict(), indent=2) + "\n", args.witness)
    elif res.status == "conjecture":
        _note("conjecture supported: no violation found")
    _write(dumps([v.record() for v in res.violations], args.format), args.out)
    if res.violation_count == 0:
        return EXIT_OK
    return EXIT_PROVEN if get_spec(args.bound_id).status == "proven" else EXIT_CONJECTURE


def _cmd_fem(args) -> int:
    rows = fem_demo(args.lambda1, args.lambda2, args.alpha, args.h)
    for row in rows:
        _note(f"h={row.h:.1e} ratio={row.ratio:.6f} closed-form={row.closed_form_ratio:.6f} "
              f"trace error {row.trace_error:.3e} <= {row.majorization_bound:.3e}")
    _write(rows_to_text(rows, args.format), args.out)
    return EXIT_OK if all(r.within_bounds for r in rows) else EXIT_PROVEN


_COMMANDS = {"verify": _cmd_verify, "repro": _cmd_repro, "search": _cmd_search, "fem-demo": _cmd_fem}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.trials < 1:
        _note("error: --trials must be at least 1")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except RitzMajorizeError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
