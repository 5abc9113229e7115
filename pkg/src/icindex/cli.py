"""Command-line front end.

Exit codes: 0 success / affirmative verdict, 1 negative verdict or analysis
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .conditions import check_conditions, theorem1_predict
from .construction import build_code
from .decoding import decode_all
from .digraph import Digraph
from .fileio import ParseError, parse_graph, serialize_graph
from .generate import GenerationFailedError, GenParams, gen_random_ic, gen_theorem2_family
from .oracle import SIZE_CAP_DEFAULT, SizeLimitError, oracle_report, write_full_table_csv
from .reporting import analyze, to_json, validation_section
from .structure import NotICStructureError, ic_structure, validate


def _read_graph(path: str) -> tuple[Digraph, int]:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _print_validation(section: dict) -> None:
    print(f"is-ic: {'yes' if section['is_ic'] else 'no'}")
    for v in section["violations"]:
        kind = v["kind"]
        if kind == "i_cycle_found":
            detail = "->".join(str(x) for x in v["cycle"] + v["cycle"][:1])
        elif kind == "i_path_missing":
            detail = f"{v['source']}->{v['target']}"
        elif kind == "i_path_duplicated":
            detail = f"{v['source']}->{v['target']}"
        elif kind == "uncovered_arc":
            detail = f"{v['tail']}->{v['head']}"
        else:
            detail = str(v["vertex"])
        print(f"violation: {kind} {detail}")


def _cmd_validate(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    section = validation_section(validate(g, k))
    _print_validation(section)
    return 0 if section["is_ic"] else 1


def _cmd_encode(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    code = build_code(ic_structure(g, k))
    for sym in code.symbols:
        print(sym)
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    ic = ic_structure(g, k)
    report = decode_all(ic, build_code(ic))
    for o in report.outcomes:
        residual = "+".join(f"x{v}" for v in sorted(o.residual_support))
        line = (
            f"x{o.vertex}: combination={'+'.join(o.combination)}"
            f" residual={residual or '0'}"
            f" decodable={'yes' if o.decodable else 'no'}"
        )
        if o.blocking:
            line += f" blocking={','.join(str(v) for v in sorted(o.blocking))}"
        print(line)
    print(f"all-decodable: {'yes' if report.all_decodable else 'no'}")
    return 0 if report.all_decodable else 1


def _cmd_conditions(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    ic = ic_structure(g, k)
    report = check_conditions(ic)
    for (i, j), c in sorted(report.a_table.items()):
        print(f"a[{i},{j}] = {c}")
    for (i, j), c in sorted(report.b_table.items()):
        print(f"b[{i},{j}] = {c}")
    print(f"c1: {'holds' if report.c1_holds else 'violated'}")
    print(f"c2: {'holds' if report.c2_holds else 'violated'}")
    print(f"noninner-cycle-free: {'yes' if report.noninner_cycle_free else 'no'}")
    predicted = theorem1_predict(report)
    print(f"combined-symbol-decodable (predicted): {'yes' if predicted else 'no'}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    ic = ic_structure(g, k)
    code = build_code(ic)
    outcomes = oracle_report(code, g, cap=args.cap)
    for o in outcomes:
        if o.decodable:
            assert o.witness is not None and o.witness_residual is not None
            residual = "+".join(f"x{v}" for v in sorted(o.witness_residual))
            print(f"x{o.vertex}: decodable via {'+'.join(o.witness)} residual={residual}")
        else:
            checked = o.combinations_checked or "rank"
            print(f"x{o.vertex}: not decodable ({checked} combinations checked)")
    if args.full_table:
        with open(args.full_table, "w", encoding="utf-8", newline="") as handle:
            rows = write_full_table_csv(handle, code, g, args.vertex, cap=args.cap)
        print(f"full table for x{args.vertex}: {rows} rows -> {args.full_table}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g, k = _read_graph(args.file)
    report = analyze(g, k, cap=args.cap)
    rendered = to_json(report)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    _print_validation(report["validation"])
    if "decode" in report:
        print(f"all-decodable: {'yes' if report['decode']['all_decodable'] else 'no'}")
        predicted = report["conditions"]["theorem1_predict"]
        print(f"combined-symbol-decodable (predicted): {'yes' if predicted else 'no'}")
        oracle_ok = all(o["decodable"] for o in report["oracle"]["outcomes"])
        print(f"linearly-decodable (all): {'yes' if oracle_ok else 'no'}")
    if args.json:
        print(f"report -> {args.json}")
    return 0 if report["validation"]["is_ic"] else 1


def _cmd_generate(args: argparse.Namespace) -> int:
    params = GenParams(
        k=args.k, max_extra=args.extra, seed=args.seed, attempts=args.attempts
    )
    ic = gen_theorem2_family(params) if args.theorem2 else gen_random_ic(params)
    text = serialize_graph(
        ic.g,
        ic.k,
        comments=[
            f"generated: k={args.k} extra={args.extra} seed={args.seed}"
            f"{' theorem2-family' if args.theorem2 else ''}"
        ],
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icindex",
        description="Interlinked-cycle index coding analyzer",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the IC-structure conditions")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("encode", help="print the broadcast symbols")
    p.add_argument("file")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="run the per-tree combined-symbol decoder")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("conditions", help="print cancellation counters and verdicts")
    p.add_argument("file")
    p.set_defaults(func=_cmd_conditions)

    p = sub.add_parser("oracle", help="exhaustive linear decodability per message")
    p.add_argument("file")
    p.add_argument("--full-table", metavar="OUT_CSV", default=None)
    p.add_argument("--vertex", type=int, default=1, help="target for --full-table")
    p.add_argument("--cap", type=int, default=SIZE_CAP_DEFAULT)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("analyze", help="everything in one structured report")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT_JSON", default=None)
    p.add_argument("--cap", type=int, default=SIZE_CAP_DEFAULT)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("generate", help="emit a generated structure as a graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extra", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--theorem2", action="store_true")
    p.add_argument("--attempts", type=int, default=400)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)
    return parser


def run_cli(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotICStructureError, SizeLimitError, GenerationFailedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
