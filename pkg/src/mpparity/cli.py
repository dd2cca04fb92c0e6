"""Command line entry point: ``mpparity <command> ...``.

Results go to stdout as one JSON object, diagnostics to stderr.  Exit
status is 1 for parse failures and oracle mismatches, 2 when a value query
exceeds the candidate-set budget.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import check as checking
from .core import parse_rational
from .decremental import DecrementalState
from .gamefile import GameFormatError, format_game, parse_game
from .generate import gen_random
from .measure import Stats, shift_weights
from .parity import solve_mpp_threshold
from .results import ResultDocument
from .two_priority import solve_mp_buchi, solve_mp_cobuchi
from .value import DEFAULT_BUDGET, CapacityError, solve_values

# name -> (n, priorities, W, density, instances)
SUITES = {
    "small": (12, (0, 1, 2), 4, 0.3, 5),
    "buchi": (200, (0, 1), 10, 0.025, 3),
    "cobuchi": (200, (1, 2), 10, 0.025, 3),
    "parity": (80, (0, 1, 2, 3), 6, 0.06, 3),
    "value": (30, (0, 1, 2), 5, 0.15, 2),
    "decremental": (150, (0,), 8, 0.03, 3),
}


def _params(g, nu=None) -> dict:
    params = {"n": g.n, "m": g.m, "d": g.d, "W": g.max_abs_weight}
    if nu is not None:
        params["threshold"] = str(nu)
    return params


def _read_game(path: str):
    with (sys.stdin if path == "-" else open(path)) as fh:
        return parse_game(fh.read())


def cmd_solve_threshold(args) -> int:
    g = _read_game(args.file)
    nu = parse_rational(args.threshold)
    stats = Stats()
    t0 = time.perf_counter()
    region = solve_mpp_threshold(g, nu, stats)
    info = stats.as_dict()
    info["wall_time"] = time.perf_counter() - t0
    doc = ResultDocument("solve_mpp_threshold", _params(g, nu), winning_region=sorted(region), stats=info)
    print(doc.to_json())
    return 0


def cmd_solve_value(args) -> int:
    g = _read_game(args.file)
    stats = Stats()
    t0 = time.perf_counter()
    values = solve_values(g, budget=args.budget, stats=stats)
    info = stats.as_dict()
    info["wall_time"] = time.perf_counter() - t0
    print(ResultDocument.for_values("solve_values", _params(g), values, info).to_json())
    return 0


def cmd_gen(args) -> int:
    sys.stdout.write(format_game(gen_random(args.n, args.d, args.W, args.density, args.seed)))
    return 0


def cmd_check(args) -> int:
    checked, bad = checking.run_check(args.max_n, args.max_d, args.max_W, args.seeds, args.start)
    report = {"checked": checked, "mismatch": bad.as_dict() if bad else None}
    print(json.dumps(report, sort_keys=True))
    if bad:
        print(f"mismatch at seed {bad.seed}: {bad.reason}", file=sys.stderr)
        return 1
    return 0


def _bench_instance(name: str, g, seed: int) -> dict:
    nu = Fraction(0)
    stats = Stats()
    wprime = shift_weights(g, nu).effective_max
    t0 = time.perf_counter()
    if name == "buchi":
        size = len(solve_mp_buchi(g, nu, stats))
    elif name == "cobuchi":
        size = len(solve_mp_cobuchi(g, nu, stats))
    elif name == "value":
        size = len(solve_values(g, stats=stats))
    elif name == "decremental":
        rng = random.Random(seed)
        state = DecrementalState(g, nu, stats=stats)
        while state.alive_set:
            core = {rng.choice(sorted(state.alive_set))}
            state.delete(core)
        size = state.rounds
    else:
        size = len(solve_mpp_threshold(g, nu, stats))
    row = {"suite": name, "seed": seed, **_params(g), "result_size": size, "lift_bound": g.n * (g.n * wprime + 2)}
    row.update(stats.as_dict())
    row.pop("bounded_rounds")
    row["wall_time"] = time.perf_counter() - t0
    return row


def cmd_bench(args) -> int:
    n, prios, W, density, count = SUITES[args.suite]
    rows = []
    for seed in range(count):
        g = gen_random(n, len(prios), W, density, seed, priorities=prios)
        row = _bench_instance(args.suite, g, seed)
        print(f"{args.suite} seed={seed} lifts={row['lifts']} time={row['wall_time']:.3f}s", file=sys.stderr)
        rows.append(row)
    print(json.dumps({"suite": args.suite, "instances": rows}, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpparity", description="Mean-payoff parity game solver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-threshold", help="winning region for parity and MP >= threshold")
    p.add_argument("file", help="game file, '-' for stdin")
    p.add_argument("--threshold", default="0", help="rational threshold y/z or integer (default 0)")
    p.set_defaults(func=cmd_solve_threshold)

    p = sub.add_parser("solve-value", help="exact mean-payoff parity value of every vertex")
    p.add_argument("file", help="game file, '-' for stdin")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate set size limit")
    p.set_defaults(func=cmd_solve_value)

    p = sub.add_parser("gen", help="print a random game")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--W", type=int, default=3)
    p.add_argument("--density", type=float, default=0.4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="fuzz fast solvers against the oracles")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--max-W", type=int, default=3)
    p.add_argument("--seeds", type=int, default=1000)
    p.add_argument("--start", type=int, default=0, help="first seed")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="instrumented lift counts and timings")
    p.add_argument("--suite", choices=sorted(SUITES), default="small")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GameFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
