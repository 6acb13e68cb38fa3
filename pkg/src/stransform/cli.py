"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 verification failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import gaussian, io, pairs, rebase, verify
from .errors import InvalidParameter, STransformError
from .plan import Regime, make_plan, plan_from_json, plan_to_dict, plan_to_json
from .theorems import convolve_exact_integers
from .transform import dump_weights, forward, inverse, weights_csv

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64
REGIMES = ("prime", "prime-power", "two-p", "pseudo-fermat", "mersenne", "fermat")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("NTT_THREADS")
    if env is None:
        return 1
    try:
        n = int(env)
    except ValueError:
        raise UsageError(f"NTT_THREADS must be an integer, got {env!r}") from None
    if n < 1:
        raise UsageError("NTT_THREADS must be >= 1")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_plan(path):
    return plan_from_json(Path(path).read_text())


def _emit_sequence(args, values, modulus):
    sys.stdout.write(io.format_sequence(values, modulus, as_json=args.json))


def cmd_plan(args) -> int:
    regime = Regime.from_name(args.regime, args.n, args.p, args.nn)
    print(plan_to_json(make_plan(args.s, args.n, regime)))
    return EXIT_OK


def _read_for_plan(path, plan) -> list[int]:
    values, modulus = io.read_sequence(path)
    if modulus is not None and modulus != plan.M:
        raise InvalidParameter(f"{path}: modulus {modulus} does not match plan modulus {plan.M}")
    return values


def cmd_transform(args) -> int:
    plan = _load_plan(args.plan)
    values = _read_for_plan(args.seqfile, plan)
    fn = inverse if args.inverse else forward
    _emit_sequence(args, fn(plan, values, threads=_threads(args)).values, plan.M)
    return EXIT_OK


def cmd_conv(args) -> int:
    a, _ = io.read_sequence(args.a)
    b, _ = io.read_sequence(args.b)
    plan = _load_plan(args.plan) if args.plan else None
    _emit_sequence(args, convolve_exact_integers(a, b, plan), None)
    return EXIT_OK


def cmd_rebase(args) -> int:
    pair = rebase.make_pair(_load_plan(args.plan1), _load_plan(args.plan2))
    if args.direction == rebase.IMAGE:
        values = _read_for_plan(args.seqfile, pair.plan2)
        out = rebase.rebase_image(pair, values, check=not args.no_check)
    else:
        values = _read_for_plan(args.seqfile, pair.plan1)
        out = rebase.rebase_original(pair, values, check=not args.no_check)
    _emit_sequence(args, out.values, pair.M)
    return EXIT_OK


def cmd_gtransform(args) -> int:
    plan = gaussian.make_gaussian_plan(gaussian.GaussianElement(args.s_re, args.s_im), args.n)
    z = io.read_gaussian(args.gseqfile)
    out = (gaussian.gauss_inverse if args.inverse else gaussian.gauss_forward)(plan, z)
    if args.json:
        doc = {
            "modulus": [str(plan.modulus.re), str(plan.modulus.im)],
            "elements": [[str(v.re), str(v.im)] for v in out],
        }
        print(json.dumps(doc))
    else:
        sys.stdout.write(io.format_gaussian(out))
    return EXIT_OK


def cmd_pairs_demo(args) -> int:
    s = pairs.PairElement(args.a, args.b)
    v = args.variant
    m = pairs.variant_matrix(s, v)
    print(f"variant {v} matrix of s={s}: {list(m[0])} {list(m[1])}  det {pairs.determinant(m)}")
    print("m  s^m")
    for e in range(2 * args.n + 1):
        print(f"{e:<2} {pairs.pair_pow(s, e, v)}")
    try:
        plan = pairs.pair_plan(s, args.n, v)
    except STransformError as exc:
        print(f"no transform for this choice: {exc}")
        return EXIT_INVALID
    diag = pairs.pair_diagnostic(plan, samples=args.samples, seed=args.seed)
    print("\n".join(diag.lines()))
    return EXIT_OK


def cmd_verify(args) -> int:
    rows = verify.run_suite(args.suite, args.seed)
    if args.json:
        doc = {
            "seed": args.seed,
            "passed": verify.passed(rows),
            "checks": [{"suite": r.suite, "name": r.name, "status": r.status, "detail": r.detail} for r in rows],
        }
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(verify.format_table(rows, args.seed))
    return EXIT_OK if verify.passed(rows) else EXIT_VERIFY


def cmd_dump_weights(args) -> int:
    plan = _load_plan(args.plan)
    rows = dump_weights(plan, args.i, args.periods)
    if args.json:
        print(json.dumps({"plan": plan_to_dict(plan), "rows": [[str(c) for c in r] for r in rows]}))
    else:
        sys.stdout.write(weights_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker threads for transforms (default: $NTT_THREADS or 1)")

    parser = _Parser(prog="stransform", description="Number-theoretic S-transform toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("plan", parents=[common], help="validate a plan and print it as JSON")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--regime", choices=REGIMES, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--nn", type=int, help="prime-power exponent")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("transform", parents=[common], help="forward or inverse transform of a sequence file")
    p.add_argument("--plan", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("seqfile")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("conv", parents=[common], help="exact linear convolution of two integer sequences")
    p.add_argument("--plan")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("rebase", parents=[common], help="move an image or original between two bases")
    p.add_argument("--plan1", required=True)
    p.add_argument("--plan2", required=True)
    p.add_argument("--direction", choices=(rebase.IMAGE, rebase.ORIGINAL), default=rebase.IMAGE)
    p.add_argument("--no-check", action="store_true", help="skip the two-path consistency check")
    p.add_argument("seqfile")
    p.set_defaults(func=cmd_rebase)

    p = sub.add_parser("gtransform", parents=[common], help="Gaussian-integer transform")
    p.add_argument("--s-re", type=int, required=True)
    p.add_argument("--s-im", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("gseqfile")
    p.set_defaults(func=cmd_gtransform)

    p = sub.add_parser("pairs", parents=[common], help="ordered-pair ring tools")
    psub = p.add_subparsers(dest="pairs_command", required=True, metavar="ACTION")
    d = psub.add_parser("demo", parents=[common], help="variant tables and the transform diagnostic")
    d.add_argument("--a", type=int, required=True)
    d.add_argument("--b", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--variant", type=int, choices=(1, 2, 3, 4), required=True)
    d.add_argument("--samples", type=int, default=20)
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=cmd_pairs_demo)

    p = sub.add_parser("verify", parents=[common], help="run the seeded verification battery")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump-weights", parents=[common], help="weight table rows (i, k, weight) as CSV")
    p.add_argument("--plan", required=True)
    p.add_argument("--i", type=_int_list, required=True, help="comma-separated row indices")
    p.add_argument("--periods", type=_positive, default=1)
    p.set_defaults(func=cmd_dump_weights)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except (STransformError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
