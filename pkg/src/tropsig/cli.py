"""Command-line entry point: ``tropsig keygen|sign|verify|attack|bench``.

``verify`` exits 0 when the signature is accepted, 1 when it is rejected and
2 on usage or format errors. ``--seed`` is only honoured when the environment
variable ``TROPSIG_ALLOW_SEED=1`` is set (test and benchmark runs); otherwise
it is ignored with a warning, since deterministic ephemerals leak the key.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import codec
from .bench import run_bench, summary, to_csv
from .cryptanalysis import (DEFAULT_WORK_LIMIT, WorkLimitError, brute_force_factor,
                            contains_pair, forgery_battery, run_division_attack)
from .keygen import Params, generate_keypair, make_rng, random_poly
from .scheme_one import sign_v1, verify_v1
from .scheme_two import sign_v2, verify_v2
from .semiring import otimes

SEED_ENV = "TROPSIG_ALLOW_SEED"

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rng(seed: str | None) -> random.Random:
    if seed is None:
        return make_rng()
    if os.environ.get(SEED_ENV) != "1":
        print(f"warning: --seed ignored (set {SEED_ENV}=1 to enable)", file=sys.stderr)
        return make_rng()
    try:
        return make_rng(bytes.fromhex(seed))
    except ValueError as exc:
        raise UsageError(f"--seed must be hex: {exc}") from exc


def _read_message(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _check_scheme(params: Params, scheme: int, what: str) -> None:
    if params.scheme != scheme:
        raise UsageError(f"{what} is for scheme {params.scheme}, not {scheme}")


def cmd_keygen(args) -> int:
    try:
        params = Params(d=args.d, r=args.r, scheme=args.scheme)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    key = generate_keypair(params, _rng(args.seed))
    codec.write_atomic(args.priv, codec.dumps_private(key))
    codec.write_atomic(args.pub, codec.dumps_public(key.public))
    print(f"wrote {args.priv} and {args.pub} (deg X = {key.X.degree}, deg Y = {key.Y.degree})")
    return EXIT_OK


def cmd_sign(args) -> int:
    key = codec.loads_private(codec.read_text(args.priv))
    _check_scheme(key.params, args.scheme, args.priv)
    message = _read_message(args.msg)
    sign = sign_v1 if args.scheme == 1 else sign_v2
    sig = sign(message, key, _rng(args.seed))
    codec.write_atomic(args.sig, codec.dumps_signature(sig, key.params))
    print(f"wrote {args.sig}")
    return EXIT_OK


def cmd_verify(args) -> int:
    public = codec.loads_public(codec.read_text(args.pub))
    _check_scheme(public.params, args.scheme, args.pub)
    params, sig = codec.loads_signature(codec.read_text(args.sig))
    if params != public.params:
        print(f"REJECTED header: signature parameters {codec.format_header(params)!r} "
              f"do not match the public key")
        return EXIT_REJECTED
    message = _read_message(args.msg)
    outcome = (verify_v1 if args.scheme == 1 else verify_v2)(message, sig, public)
    if outcome:
        print("ACCEPTED")
        return EXIT_OK
    print(f"REJECTED {outcome.failed_gate}: {outcome.detail}")
    return EXIT_REJECTED


def _attack_bruteforce(args, rng) -> list[str]:
    d = 2 if args.d is None else args.d
    bound = 2 if args.r is None else args.r
    trials = 100 if args.trials is None else args.trials
    found = multi = 0
    for _ in range(trials):
        X, Y = random_poly(d, bound, rng), random_poly(d, bound, rng)
        report = brute_force_factor(otimes(X, Y), d, d, bound, args.work_limit)
        found += contains_pair(report, X, Y)
        multi += len(report.factorizations) >= 2
    print(f"bruteforce: originating pair recovered in {found}/{trials} trials; "
          f"{multi} targets had >= 2 incomparable factorizations "
          f"(degrees {d}+{d}, coefficients in [0, {bound}])")
    return [f"bruteforce,{trials},{found}"]


def cmd_attack(args) -> int:
    rng = _rng(args.seed)
    if args.name == "bruteforce":
        rows = _attack_bruteforce(args, rng)
    elif args.name == "division":
        params = Params(d=16 if args.d is None else args.d, r=127 if args.r is None else args.r)
        report = run_division_attack(params, 500 if args.trials is None else args.trials, rng)
        print(report)
        rows = [report.row()]
    else:
        rows = []
        trials = 100 if args.trials is None else args.trials
        for scheme, sign in ((1, sign_v1), (2, sign_v2)):
            params = Params(d=150 if args.d is None else args.d,
                            r=127 if args.r is None else args.r, scheme=scheme)
            key = generate_keypair(params, rng)
            reports = forgery_battery(key.public, scheme, trials, rng,
                                      signer=lambda m, k=key, s=sign: s(m, k, rng))
            for rep in reports:
                rep.attack_name = f"scheme{scheme}/{rep.attack_name}"
                print(rep)
                rows.append(rep.row())
    print("attack,trials,successes")
    print("\n".join(rows))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = [(d, args.r) for d in args.d]
    try:
        results = run_bench(rows, args.trials)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(summary(results))
    if args.csv:
        codec.write_atomic(args.csv, to_csv(results))
    else:
        print(to_csv(results), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropsig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_arg(p):
        p.add_argument("--scheme", type=int, choices=(1, 2), required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    scheme_arg(p)
    p.add_argument("--d", type=int, default=150)
    p.add_argument("--r", type=int, default=127)
    p.add_argument("--seed")
    p.add_argument("--priv", required=True)
    p.add_argument("--pub", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a message file ('-' for stdin)")
    scheme_arg(p)
    p.add_argument("--priv", required=True)
    p.add_argument("--msg", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--seed")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature; exit 0 accept, 1 reject, 2 error")
    scheme_arg(p)
    p.add_argument("--pub", required=True)
    p.add_argument("--msg", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("attack", help="run a desk-scale attack experiment")
    p.add_argument("--name", choices=("bruteforce", "division", "battery"), required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.add_argument("--seed")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("bench", help="time verification and measure encoded sizes")
    p.add_argument("--d", type=int, nargs="+", default=[100, 150, 200])
    p.add_argument("--r", type=int, default=127)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, codec.CodecError, WorkLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
