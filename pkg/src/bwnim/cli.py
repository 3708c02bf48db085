"""Command-line front end.

Subcommands: solve, verify, pcompare, beatty, explore, play, serve.
Spec grammar is the coloring grammar (modular:3, beatty:(1+1*sqrt(2))/1,
rational:5/2, explicit:2,5,9); positions are comma lists echoed back in
canonical sorted order.  Malformed grammar exits with code 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coloring import parse_coloring, verify_complementary
from .engine import engine_move
from .exactnum import QuadraticIrrational
from .gamecore import (
    Bichromatic,
    BichromaticMode,
    GameSpec,
    Interpretation,
    Spectrum,
    canonical,
    format_position,
    is_legal,
    legal_moves,
    parse_game_spec,
    parse_position,
)
from .oracles import cross_validate, oracle_for_spec
from .solver import (
    OUTCOME_P,
    grundy_table,
    outcome_table,
    partizan_outcomes,
    partizan_to_csv,
    tables_to_csv,
)

USAGE_ERROR = 2


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _outcome_only_csv(table) -> str:
    k = table.spec.k
    lines = [",".join(f"x{i + 1}" for i in range(k)) + ",outcome"]
    for pos, verdict in table.entries.items():
        lines.append(",".join(str(s) for s in pos) + f",{verdict}")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    spec = parse_game_spec(args.spec, args.k)
    outcome = outcome_table(spec, args.bound)
    grundy = grundy_table(spec, args.bound)
    if args.format == "csv":
        _emit(tables_to_csv(outcome, grundy), args.out)
    else:
        rows = [
            {"position": list(pos), "outcome": verdict,
             "grundy": grundy.entries.get(pos)}
            for pos, verdict in outcome.entries.items()
        ]
        payload = {"spec": spec.describe(), "k": spec.k, "bound": args.bound,
                   "rows": rows}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    spec = parse_game_spec(args.spec, 2)
    found = oracle_for_spec(spec)
    if found is None:
        print(f"no closed form covers spec {args.spec!r}", file=sys.stderr)
        return USAGE_ERROR
    report = cross_validate(spec, found[0], args.bound)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"{len(report.mismatches)} mismatches")
        if report.move_errors:
            print(f"{len(report.move_errors)} constructive-move errors")
    return 0 if report.ok else 1


def cmd_pcompare(args) -> int:
    spec = parse_game_spec(args.spec, 2)
    found = oracle_for_spec(spec)
    if found is None:
        print(f"no closed form covers spec {args.spec!r}", file=sys.stderr)
        return USAGE_ERROR
    _, is_p, _ = found
    table = outcome_table(spec, args.bound)
    print("x,y,oracle,solver")
    disagreements = 0
    for pos, verdict in table.entries.items():
        if verdict == "Illegal":
            continue
        o = is_p(pos)
        s = verdict == OUTCOME_P
        if o or s:
            print(f"{pos[0]},{pos[1]},{'P' if o else 'N'},{'P' if s else 'N'}")
        if o != s:
            disagreements += 1
    print(f"# disagreements: {disagreements}")
    return 0 if disagreements == 0 else 1


def cmd_beatty(args) -> int:
    beta = QuadraticIrrational.parse(args.beta)
    alpha = beta.complement()
    print(f"beta  = {beta}")
    print(f"alpha = {alpha}")
    report = verify_complementary(alpha, beta, args.bound)
    if args.bound > 0:
        limit = min(args.bound, args.terms_cap)
        print("beta sequence: ", ",".join(str(v) for v in
                                          _prefix(beta, limit)))
        print("alpha sequence:", ",".join(str(v) for v in
                                          _prefix(alpha, limit)))
    print(report)
    return 0 if report.ok else 1


def _prefix(x: QuadraticIrrational, bound: int) -> list[int]:
    out = []
    n = 1
    while True:
        v = x.floor_times(n)
        if v > bound:
            return out
        out.append(v)
        n += 1


def cmd_explore(args) -> int:
    if args.family in ("rational", "partizan") and not args.spec:
        raise ValueError(f"--spec is required for the {args.family} family")
    if args.family == "rational":
        spec = parse_game_spec(args.spec, args.k)
        table = outcome_table(spec, args.bound)
        _emit(_outcome_only_csv(table), args.out)
        return 0
    if args.family == "spectrum":
        interp = (Interpretation.ALL_COLORS_WHEN_FEASIBLE
                  if args.interpretation == "feasible"
                  else Interpretation.DISTINCT_COLORS)
        spec = GameSpec(k=args.k, rules=Spectrum(args.colors, interp))
    elif args.family == "bichromatic":
        mode = {"atmost": BichromaticMode.AT_MOST,
                "exactly": BichromaticMode.EXACTLY,
                "atleast": BichromaticMode.AT_LEAST}[args.mode]
        spec = GameSpec(k=args.k, rules=Bichromatic(args.colors, mode))
    elif args.family == "partizan":
        coloring = parse_coloring(args.spec)
        classes = partizan_outcomes(coloring, args.k, args.bound)
        _emit(partizan_to_csv(classes, args.k), args.out)
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {args.family!r}")
    outcome = outcome_table(spec, args.bound)
    grundy = grundy_table(spec, args.bound)
    _emit(tables_to_csv(outcome, grundy), args.out)
    return 0


def cmd_play(args) -> int:
    spec = parse_game_spec(args.spec, args.k)
    pos = parse_position(args.start, args.k)
    if not is_legal(spec, pos):
        print("start position violates color rule", file=sys.stderr)
        return USAGE_ERROR
    human_turn = not args.engine_first
    print(f"game: {spec.describe()} k={spec.k} start={format_position(pos)}")
    while True:
        moves = legal_moves(spec, pos)
        if not moves:
            winner = "engine" if human_turn else "human"
            print(f"no moves from {format_position(pos)}; {winner} wins")
            return 0
        if human_turn:
            line = _read_line(f"position {format_position(pos)} - your move"
                              " (heap_size new_size): ")
            if line is None or line.strip().lower() in ("q", "quit"):
                print("goodbye")
                return 0
            try:
                size, new = (int(v) for v in line.split())
                chosen = next(m for m in moves
                              if m.heap_from == size and m.heap_to == new)
            except (ValueError, StopIteration):
                print("illegal move; legal targets: "
                      + " ".join(format_position(m.target) for m in moves))
                continue
            print(f"you lower {chosen.heap_from} to {chosen.heap_to}"
                  f" -> {format_position(chosen.target)}")
            pos = chosen.target
        else:
            move = engine_move(spec, pos)
            print(f"engine lowers {move.heap_from} to {move.heap_to}"
                  f" -> {format_position(move.target)}")
            pos = move.target
        human_turn = not human_turn


def _read_line(prompt: str) -> str | None:
    try:
        return input(prompt)
    except EOFError:
        return None


def cmd_serve(args) -> int:
    from .service import serve

    serve(host=args.host, port=args.port, analysis_cap=args.analysis_cap,
          snapshot_path=args.snapshot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bwnim",
        description="Coloring-restricted Nim: solvers, closed forms, play",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="emit the outcome/Grundy table as CSV or JSON")
    sp.add_argument("--spec", required=True, help="coloring spec, e.g. modular:2")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--max", dest="bound", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_solve)

    vp = sub.add_parser("verify", help="cross-validate the closed form against the solver")
    vp.add_argument("--spec", required=True)
    vp.add_argument("--max", dest="bound", type=int, required=True)
    vp.add_argument("--format", choices=("text", "json"), default="text")
    vp.set_defaults(func=cmd_verify)

    cp = sub.add_parser("pcompare", help="print P positions from oracle and solver side by side")
    cp.add_argument("--spec", required=True)
    cp.add_argument("--max", dest="bound", type=int, required=True)
    cp.set_defaults(func=cmd_pcompare)

    bp = sub.add_parser("beatty", help="print complementary floor sequences and coverage report")
    bp.add_argument("--beta", required=True, help='e.g. "(1+1*sqrt(2))/1"')
    bp.add_argument("--bound", type=int, default=50)
    bp.add_argument("--terms-cap", type=int, default=200)
    bp.set_defaults(func=cmd_beatty)

    ep = sub.add_parser("explore", help="tables for the open-problem variants")
    ep.add_argument("--family", required=True,
                    choices=("rational", "spectrum", "bichromatic", "partizan"))
    ep.add_argument("--spec", default=None,
                    help="coloring spec for rational/partizan families")
    ep.add_argument("--colors", type=int, default=3)
    ep.add_argument("--interpretation", choices=("feasible", "distinct"),
                    default="feasible")
    ep.add_argument("--mode", choices=("atmost", "exactly", "atleast"),
                    default="atmost")
    ep.add_argument("--k", type=int, default=2)
    ep.add_argument("--max", dest="bound", type=int, required=True)
    ep.add_argument("--out", default=None)
    ep.set_defaults(func=cmd_explore)

    pp = sub.add_parser("play", help="interactive terminal game")
    pp.add_argument("--spec", required=True)
    pp.add_argument("--k", type=int, default=2)
    pp.add_argument("--start", required=True, help='comma list, e.g. "4,3"')
    pp.add_argument("--engine-first", action="store_true")
    pp.set_defaults(func=cmd_play)

    rp = sub.add_parser("serve", help="start the HTTP play/analysis service")
    rp.add_argument("--host", default="127.0.0.1")
    rp.add_argument("--port", type=int, default=8046)
    rp.add_argument("--analysis-cap", type=int, default=128)
    rp.add_argument("--snapshot", default=None,
                    help="append-only JSON-lines session snapshot file")
    rp.set_defaults(func=cmd_serve)
    return p


def cli_run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
