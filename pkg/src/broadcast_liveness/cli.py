"""Command-line entry point.

Exit codes: 0 for YES (or a valid witness), 1 for NO (or an invalid witness),
2 for usage, parse and I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time

from .fair import check_fair_liveness, instrument
from .generate import random_network
from .liveness import check_liveness
from .model import CapExceeded, ModelError
from .oracle import DEFAULT_CAP, oracle_fair, oracle_liveness
from .textio import load_network, serialize_network
from .witness import (check_witness, concretize, validate_computation, run,
                      witness_from_json, witness_to_json)

YES, NO, ERROR = 0, 1, 2


def _load(path):
    try:
        return load_network(path)
    except OSError as exc:
        raise SystemExit(_fail(f"cannot read {path}: {exc.strerror or exc}"))
    except ModelError as exc:
        raise SystemExit(_fail(f"{path}: {exc}"))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return ERROR


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    net = _load(args.file)
    t_parse = time.perf_counter() - t0
    want_witness = bool(args.witness)
    checker = check_fair_liveness if args.fair else check_liveness
    verdict = checker(net, witness=want_witness)
    timings = {"parse": t_parse, "coverability": verdict.stats.get("coverability", 0.0),
               "fixed_point": verdict.stats.get("fixed_point", 0.0),
               "witness": verdict.stats.get("witness", 0.0)}
    notes = []
    if verdict.answer and want_witness:
        target = instrument(net).net_f if args.fair else net
        concrete = None
        if args.concretize:
            t1 = time.perf_counter()
            try:
                concrete = concretize(target, verdict.witness, cap_clients=args.cap_clients, sizing="auto")
            except CapExceeded as exc:
                notes.append(f"concrete computation skipped: {exc}")
            timings["witness"] += time.perf_counter() - t1
        doc = witness_to_json(target, verdict.witness, concrete)
        doc["problem"] = verdict.problem
        with open(args.witness, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    timings["total"] = sum(timings.values())
    report = {
        "verdict": verdict.label,
        "problem": verdict.problem,
        "timings": timings,
        "iterations": int(verdict.stats.get("iterations", 0)),
        "witness": args.witness if (verdict.answer and want_witness) else None,
        "notes": notes,
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"{report['problem']}: {report['verdict']}  "
              f"({report['iterations']} fixed-point iterations, {timings['total'] * 1000:.1f} ms)")
        if report["witness"]:
            print(f"witness written to {report['witness']}")
        for note in notes:
            print(note)
    return YES if verdict.answer else NO


def cmd_oracle(args) -> int:
    net = _load(args.file)
    if args.clients < 1:
        return _fail("--clients must be at least 1")
    try:
        answer = (oracle_fair if args.fair else oracle_liveness)(net, args.clients, args.cap)
    except CapExceeded as exc:
        return _fail(str(exc))
    label = "YES" if answer else "NO"
    if args.json:
        print(json.dumps({"verdict": label, "problem": "fair" if args.fair else "liveness",
                          "clients": args.clients}))
    else:
        print(f"{'fair' if args.fair else 'liveness'} with {args.clients} clients: {label}")
    return YES if answer else NO


def cmd_instrument(args) -> int:
    net = _load(args.file)
    sys.stdout.write(serialize_network(instrument(net).net_f))
    return YES


def cmd_gen(args) -> int:
    if args.states < 1 or args.messages < 1 or args.trans < 0:
        return _fail("--states and --messages must be >= 1, --trans >= 0")
    net = random_network(args.states, args.messages, args.trans, args.seed,
                         random_marks=args.random_marks, name=args.name)
    sys.stdout.write(serialize_network(net))
    return YES


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["states", "transitions", "millis", "iterations"])
    medians = {}
    for n in sizes:
        times = []
        for k in range(args.per_size):
            messages = args.messages or max(2, n // 10)
            net = random_network(n, messages, args.density * n, seed=args.seed * 100_003 + n * 101 + k)
            t0 = time.perf_counter()
            verdict = check_liveness(net)
            ms = (time.perf_counter() - t0) * 1000
            times.append(ms)
            writer.writerow([n, len(net.transitions), f"{ms:.3f}", verdict.stats.get("iterations", 0)])
        medians[n] = statistics.median(times)
    if len(medians) > 1:
        import numpy as np
        xs = np.log([n for n in medians])
        ys = np.log([max(t, 1e-6) for t in medians.values()])
        slope = float(np.polyfit(xs, ys, 1)[0])
        print(f"# log-log slope of median time vs states: {slope:.2f}", file=sys.stderr)
    return YES


def cmd_validate_witness(args) -> int:
    net = _load(args.network)
    try:
        with open(args.witness, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read witness {args.witness}: {exc}")
    if doc.get("problem") == "fair" or args.fair:
        net = instrument(net).net_f
    try:
        witness, concrete = witness_from_json(net, doc)
    except (KeyError, TypeError, ValueError) as exc:
        return _fail(f"malformed witness: {exc!r}")
    problems = check_witness(net, witness)
    if concrete is not None:
        if not validate_computation(net, concrete):
            problems.append("concrete computation is not a legal run")
        else:
            configs = run(net, concrete)
            if configs[-1] != concrete.start:
                problems.append("concrete computation does not return to its start")
            if set(concrete.start) != set(witness.seeds):
                problems.append("concrete start does not use exactly the seed states")
    for p in problems:
        print(p)
    print("witness OK" if not problems else "witness INVALID")
    return YES if not problems else NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bnlive", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_check(name, fair_default):
        p = sub.add_parser(name, help="decide (fair) liveness of a network file")
        p.add_argument("file")
        if not fair_default:
            p.add_argument("--fair", action="store_true", help="check fair liveness instead")
        p.add_argument("--witness", metavar="PATH", help="write a JSON witness on YES")
        p.add_argument("--concretize", action="store_true", help="add a concrete run to the witness")
        p.add_argument("--cap-clients", type=int, default=100_000)
        p.add_argument("--json", action="store_true", help="print the report as JSON")
        p.set_defaults(func=cmd_check, fair=fair_default)

    add_check("check", False)
    add_check("check-fair", True)

    p = sub.add_parser("oracle", help="explicit-state check with a fixed number of clients")
    p.add_argument("file")
    p.add_argument("--clients", "-k", type=int, default=2)
    p.add_argument("--fair", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("instrument", help="print the fairness-instrumented network")
    p.add_argument("file")
    p.set_defaults(func=cmd_instrument)

    p = sub.add_parser("gen", help="print a seeded random network")
    p.add_argument("--states", type=int, default=3)
    p.add_argument("--messages", type=int, default=2)
    p.add_argument("--trans", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-marks", action="store_true", help="draw initial and final states at random")
    p.add_argument("--name", default="")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the liveness check on random networks (CSV)")
    p.add_argument("--sizes", default="100,200,400,800")
    p.add_argument("--per-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=int, default=5, help="transitions per state")
    p.add_argument("--messages", type=int, default=0, help="alphabet size (default |Q|/10)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate-witness", help="re-check a JSON witness against a network")
    p.add_argument("network")
    p.add_argument("witness")
    p.add_argument("--fair", action="store_true")
    p.set_defaults(func=cmd_validate_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else ERROR


if __name__ == "__main__":
    sys.exit(main())
