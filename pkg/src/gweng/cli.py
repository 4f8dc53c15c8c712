"""Command line interface.

Games and strategies are exchanged as JSON files in the format of
kernel.game_to_json.  The registry of named games used by universe
types persists at the path in the GWE_REGISTRY environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .budget import Budget
from .demos import (
    funext_report,
    isom_roundtrip,
    nine_strategies,
    succ_double,
    uip_report,
)
from .frontend import (
    Elaborator,
    SyntaxProblem,
    TypingProblem,
    parse as parse_judgment,
)
from .gwe import bang_compose
from .kernel import check_game, game_from_json, game_to_json
from .predicative import PredGame, Registry, pred_of_game
from .strategies import (
    as_strategy,
    constraint_report,
    deterministic_violation,
    is_on,
)
from .suites import SUITES


def _load_game(path):
    with open(path) as fh:
        return game_from_json(json.load(fh))


def _emit(out, fmt, lines=None):
    if fmt == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for line in lines if lines is not None else _flatten(out):
            print(line)


def _flatten(out, prefix=""):
    if isinstance(out, dict):
        lines = []
        for k in sorted(out):
            lines.extend(_flatten(out[k], prefix + str(k) + ": "))
        return lines
    return ["%s%s" % (prefix, out)]


def load_registry(budget):
    reg = Registry()
    path = os.environ.get("GWE_REGISTRY")
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        for digest, games in data.items():
            pg = PredGame([as_strategy(game_from_json(g)) for g in games])
            if pg.digest() != digest:
                raise ValueError("registry entry %s is corrupt" % digest)
            reg.register(pg)
    return reg


def save_registry(reg):
    path = os.environ.get("GWE_REGISTRY")
    if not path:
        raise SystemExit("GWE_REGISTRY is not set")
    data = {
        d: [game_to_json(s) for s in pg.strategies]
        for d, pg in reg.objects.items()
    }
    with open(path, "w") as fh:
        json.dump(data, fh)


def cmd_check_game(args, budget):
    g = _load_game(args.file)
    rep = check_game(g)
    fields = (
        "legal_positions", "prefix_closed", "thread_closed",
        "labels_ok", "enabling_ok", "well_opened", "well_founded",
    )
    out = {f: getattr(rep, f) for f in fields}
    out["valid"] = rep.valid
    _emit(out, args.format)
    return 0 if rep.valid else 1


def cmd_check_strategy(args, budget):
    sigma = as_strategy(_load_game(args.strategy))
    g = _load_game(args.game)
    rep = dict(constraint_report(sigma, g, budget))
    rep["deterministic"] = deterministic_violation(sigma) is None
    rep["on_game"] = is_on(sigma, g)
    _emit(rep, args.format)
    return 0 if all(rep.values()) else 1


def cmd_compose(args, budget):
    sigma = as_strategy(_load_game(args.first))
    tau = as_strategy(_load_game(args.second))
    out = bang_compose(tau, sigma, budget)
    print(json.dumps(game_to_json(out)))
    return 0


def cmd_laws(args, budget):
    records = SUITES[args.suite](seed=args.seed, count=args.count)
    failed = 0
    for r in records:
        rec = {
            "law": r["law"],
            "instance-digest": r["instance"],
            "status": "pass" if r["pass"] else "fail",
        }
        if "counterexample" in r:
            rec["counterexample"] = r["counterexample"]
        if not r["pass"]:
            failed += 1
        if args.format == "json":
            print(json.dumps(rec, sort_keys=True))
        else:
            print("%-24s %s %s" % (rec["law"], rec["instance-digest"], rec["status"]))
    if args.format != "json":
        print("%d records, %d failed" % (len(records), failed))
    return 1 if failed else 0


def cmd_interpret(args, budget):
    with open(args.file) as fh:
        text = fh.read()
    reg = load_registry(budget)
    el = Elaborator(k=args.k, budget=budget, registry=reg if reg.objects else None)
    try:
        j = parse_judgment(text)
        result = el.judgment(j)
    except (SyntaxProblem, TypingProblem) as e:
        _emit({"error": str(e)}, args.format)
        return 1
    out = {"kind": result["kind"]}
    if result["kind"] == "context":
        out["objects"] = len(result["value"].objects)
        out["digest"] = result["value"].digest()
    elif result["kind"] == "type":
        out["context-digest"] = result["context"].digest()
        out["fibers"] = len(result["value"]._ob)
    else:
        out["context-digest"] = result["context"].digest()
        out["value-digest"] = result["value"].base.digest()
    _emit(out, args.format)
    return 0


def cmd_register(args, budget):
    g = _load_game(args.file)
    pg = pred_of_game(g, budget, budget.max_enum)
    reg = load_registry(budget)
    digest = reg.register(pg)
    save_registry(reg)
    _emit({"digest": digest, "strategies": len(pg.strategies)}, args.format)
    return 0


def cmd_demo(args, budget):
    name = args.name
    if name == "nine-strategies":
        rep = nine_strategies(budget)
        if args.format == "json":
            _emit(rep, "json")
        else:
            print(rep["count"])
        return 0 if rep["count"] == 9 and rep["collections_check"] else 1
    if name == "succ-double":
        value = succ_double(args.n, budget=budget)
        if args.format == "json":
            _emit({"n": args.n, "result": value}, "json")
        else:
            print(value)
        return 0
    if name == "uip":
        rep = uip_report(budget)
        if args.format == "json":
            _emit(rep, "json")
        elif rep["refuted"]:
            print(
                "UIP refuted: %d distinct proofs, %d identifications"
                % (rep["distinct"], rep["identifications"])
            )
        else:
            print("UIP not refuted: %r" % (rep,))
        return 0 if rep["refuted"] else 1
    if name == "funext":
        rep = funext_report(budget)
        if args.format == "json":
            _emit(rep, "json")
        elif rep["refuted"]:
            print(
                "FunExt refuted: pointwise equal functions with %d identifications"
                % rep["identifications"]
            )
        else:
            print("FunExt not refuted: %r" % (rep,))
        return 0 if rep["refuted"] else 1
    if name == "isom":
        rep = isom_roundtrip(budget)
        if args.format == "json":
            _emit(rep, "json")
        else:
            print(
                "%d invertible strategies, %d strategy round trips, "
                "%d bijection round trips"
                % (
                    rep["invertible"],
                    rep["strategy_roundtrips"],
                    rep["bijection_roundtrips"],
                )
            )
        return 0 if rep["ok"] else 1
    raise SystemExit("unknown demo %r" % name)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="gweng")
    ap.add_argument("--max-depth", type=int, default=24)
    ap.add_argument("--max-threads", type=int, default=3)
    ap.add_argument("--max-enum", type=int, default=200000)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-game")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check_game)

    p = sub.add_parser("check-strategy")
    p.add_argument("strategy")
    p.add_argument("game")
    p.set_defaults(fn=cmd_check_strategy)

    p = sub.add_parser("compose")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("laws")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(fn=cmd_laws)

    p = sub.add_parser("interpret")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(fn=cmd_interpret)

    p = sub.add_parser("register")
    p.add_argument("file")
    p.set_defaults(fn=cmd_register)

    p = sub.add_parser("demo")
    p.add_argument(
        "name",
        choices=("uip", "funext", "nine-strategies", "succ-double", "isom"),
    )
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(fn=cmd_demo)

    args = ap.parse_args(argv)
    budget = Budget(args.max_depth, args.max_threads, args.max_enum)
    return args.fn(args, budget)


if __name__ == "__main__":
    sys.exit(main())
