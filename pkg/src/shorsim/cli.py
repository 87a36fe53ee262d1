"""Command-line entry point.

    shorsim factor --n 15 --x 7 --seed 1 --json
    shorsim order --n 21 --x 2 --seed 3
    shorsim spectrum --n 15 --x 7 --simulated --json
    shorsim audit-demos
    shorsim claim-audit --n 15 --x 7 --s 8
    shorsim sweep --n 15 --x 7 --s-min 3 --s-max 8 --trials 200 --seed 7

Exit status: 0 on success, 1 on usage or capacity errors, 2 when a factoring
run ends without factors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from math import gcd

import numpy as np

from shorsim.modexp import claim_audit
from shorsim.pipeline import (ShorConfig, choose_q, demo_audit, order_find, register2_width,
                              run_shor, success_sweep)
from shorsim.spectrum import analytic_distribution, simulated_distribution
from shorsim.state import CapacityError, RegisterLayout

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_FACTORS = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(lo):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {value}")
        return value
    return parse


def load_schema(name: str) -> dict:
    """Shipped JSON schema for one output document, e.g. ``"shor_report"``."""
    text = resources.files("shorsim.schemas").joinpath(f"{name}.v1.json").read_text()
    return json.loads(text)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def _coprime_base(n, x):
    if not 1 <= x < n:
        raise UsageError(f"--x must lie in [1, {n}), got {x}")
    g = gcd(x, n)
    if g != 1:
        raise UsageError(f"gcd({x}, {n}) = {g} != 1")


def cmd_factor(args) -> int:
    config = ShorConfig(n=args.n, x=args.x, s_override=args.s, seed=args.seed,
                        max_samples=args.max_samples, fast=args.fast)
    report = run_shor(config)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print(f"n={report.n} x={report.x} s={report.s} q={report.q} method={report.method}")
        for i, rec in enumerate(report.samples):
            print(f"  sample {i}: c={rec['c']} d/r={rec['d']}/{rec['r']} {rec['status']}")
        if report.verified_r is not None:
            print(f"order r = {report.verified_r}")
        if report.reason:
            print(f"reason: {report.reason}")
        print(f"outcome: {report.outcome}")
        if report.factors:
            print(f"factors: {report.factors[0]} x {report.factors[1]}")
    if report.outcome == "invalid_input":
        return EXIT_USAGE
    return EXIT_OK if report.factors else EXIT_NO_FACTORS


def cmd_order(args) -> int:
    _coprime_base(args.n, args.x)
    s = args.s if args.s is not None else choose_q(args.n)[0]
    r = order_find(args.n, args.x, s, args.max_samples, np.random.default_rng(args.seed),
                   fast=args.fast)
    doc = {"n": args.n, "x": args.x, "s": s, "q": 1 << s, "r": r}
    print(_dump(doc) if args.json else f"order of {args.x} mod {args.n}: {r}")
    return EXIT_OK if r is not None else EXIT_NO_FACTORS


def cmd_spectrum(args) -> int:
    _coprime_base(args.n, args.x)
    s = args.s if args.s is not None else choose_q(args.n)[0]
    if args.simulated:
        dist = simulated_distribution(args.n, args.x, s, register2_width(args.n))
        mode = "simulated"
    else:
        dist = analytic_distribution(args.n, args.x, 1 << s)
        mode = "analytic"
    doc = dist.to_dict() | {"mode": mode, "s": s}
    if args.json:
        print(_dump(doc))
    else:
        print(f"n={dist.n} x={dist.x} q={dist.q} r={dist.r} ({mode})")
        for c, p in enumerate(doc["marginal"]):
            if p >= args.threshold:
                print(f"  c={c:6d}  P={p:.6f}")
    return EXIT_OK


def cmd_audit_demos(args) -> int:
    rows = demo_audit()
    if args.json:
        print(_dump([r.to_dict() for r in rows]))
    else:
        print(f"{'demonstration':<18}{'n':>4}{'s1':>4}{'s2':>4}  q_ok   width_ok  need_s1  verdict")
        for r in rows:
            print(f"{r.label:<18}{r.n:>4}{r.s1:>4}{r.s2:>4}  {str(r.q_ok):<6} "
                  f"{str(r.width_ok):<9} {r.required_s1:>7}  {r.verdict}")
    return EXIT_OK


def cmd_claim_audit(args) -> int:
    _coprime_base(args.n, args.x)
    s = args.s if args.s is not None else choose_q(args.n)[0]
    layout = RegisterLayout(s, register2_width(args.n))
    report = claim_audit(layout, args.x, args.n, rng=np.random.default_rng(args.seed))
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print(f"stages={report.t} claimed={report.claimed_invocations} "
              f"claimed_total={report.claimed_total_invocations} "
              f"deviation={report.max_amplitude_deviation:.3g} equal={str(report.equal).lower()} "
              f"linearity_ok={str(report.linearity_ok).lower()}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    _coprime_base(args.n, args.x)
    if args.s_max < args.s_min:
        raise UsageError("--s-max must be >= --s-min")
    rows = success_sweep(args.n, args.x, range(args.s_min, args.s_max + 1), args.trials,
                         args.seed, max_samples=args.max_samples, fast=args.fast)
    if args.json:
        print(_dump([r.to_dict() for r in rows]))
    else:
        print(f"{'s':>3}{'q':>8}{'trials':>8}{'ok':>6}  rate")
        for r in rows:
            print(f"{r.s:>3}{r.q:>8}{r.trials:>8}{r.successes:>6}  {r.rate:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shorsim", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    n_arg = dict(type=_int_at_least(2), required=True)

    p = sub.add_parser("factor", help="run order finding and extract factors")
    p.add_argument("--n", **n_arg)
    p.add_argument("--x", type=_int_at_least(1))
    p.add_argument("--s", type=_int_at_least(1))
    p.add_argument("--seed", type=_int_at_least(0), required=True)
    p.add_argument("--max-samples", type=_int_at_least(1), default=16)
    p.add_argument("--fast", action="store_true", help="sample the closed-form distribution")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("order", help="recover the order of x mod n")
    p.add_argument("--n", **n_arg)
    p.add_argument("--x", type=_int_at_least(1), required=True)
    p.add_argument("--s", type=_int_at_least(1))
    p.add_argument("--seed", type=_int_at_least(0), required=True)
    p.add_argument("--max-samples", type=_int_at_least(1), default=16)
    p.add_argument("--fast", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("spectrum", help="register-1 outcome distribution")
    p.add_argument("--n", **n_arg)
    p.add_argument("--x", type=_int_at_least(1), required=True)
    p.add_argument("--s", type=_int_at_least(1))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--analytic", action="store_true", help="closed form (default)")
    mode.add_argument("--simulated", action="store_true", help="full state-vector run")
    p.add_argument("--threshold", type=float, default=1e-3,
                   help="smallest probability listed in text output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("audit-demos", help="register-width checks of published demonstrations")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit_demos)

    p = sub.add_parser("claim-audit", help="stage count and circuit/oracle comparison")
    p.add_argument("--n", **n_arg)
    p.add_argument("--x", type=_int_at_least(1), required=True)
    p.add_argument("--s", type=_int_at_least(1))
    p.add_argument("--seed", type=_int_at_least(0), default=0,
                   help="seed for the random subset superpositions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_claim_audit)

    p = sub.add_parser("sweep", help="order-recovery success rate per register-1 width")
    p.add_argument("--n", **n_arg)
    p.add_argument("--x", type=_int_at_least(1), required=True)
    p.add_argument("--s-min", type=_int_at_least(1), required=True)
    p.add_argument("--s-max", type=_int_at_least(1), required=True)
    p.add_argument("--trials", type=_int_at_least(1), required=True)
    p.add_argument("--seed", type=_int_at_least(0), required=True)
    p.add_argument("--max-samples", type=_int_at_least(1), default=16)
    p.add_argument("--fast", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapacityError, ValueError) as exc:
        print(f"shorsim {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
