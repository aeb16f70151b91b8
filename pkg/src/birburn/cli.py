"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed, 2 bad input.
Reports go to stdout (text or JSON), diagnostics to stderr.
"""

import argparse
import json
import sys

from birburn.classes import class_of
from birburn.ledger import ToricMap, ledger_report, sum_json
from birburn.presentation import build_presentation, reduce
from birburn.scenarios import ScenarioError, scenario_coarsening, scenario_dp6, scenario_lsh
from birburn.symbols import project_nontrivial
from birburn.toric import Embedding, FormatError, ReplayError, parse_fan, parse_word
from birburn.verify import CHECKS, run_verify


class InputError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_fan(path):
    try:
        return parse_fan(_read(path))
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_word(path):
    try:
        return parse_word(_read(path))
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _embedding(args):
    try:
        p, q = (int(x) for x in args.embed.split(","))
    except ValueError:
        raise InputError(f"--embed expects 'p,q', got {args.embed!r}") from None
    try:
        return Embedding(args.N, p, q)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(args, report, text_lines):
    if args.format == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def cmd_quotient(args):
    if not 2 <= args.N <= args.max_N:
        raise InputError(f"N must lie in [2, {args.max_N}], got {args.N}")
    q = build_presentation(args.N)
    report = q.to_json()
    lines = [f"C_{args.N} rational sector: {len(q.generators)} generators, "
             f"{len(q.relations)} relations"]
    lines += [f"  {g}" for g in q.generators] if args.verbose else []
    lines += [f"invariant factors: {q.invariant_factors or 'none'}",
              f"free rank: {q.free_rank}",
              f"sector group: {q.group_string()}"]
    _emit(args, report, lines)
    return 0


def cmd_class(args):
    f = _load_fan(args.fan)
    e = _embedding(args)
    cls = class_of(f, e)
    report = {"N": e.N, "embedding": [e.p, e.q], "fan": [list(r) for r in f.rays],
              "class": sum_json(cls)}
    lines = [f"[X / C_{e.N}] = {cls}"]
    if args.reduce and e.N >= 2:
        red = reduce(project_nontrivial(cls), build_presentation(e.N))
        report["reduced"] = {"torsion": [list(t) for t in red.torsion], "free": red.free,
                             "is_zero": red.is_zero}
        lines.append(f"nontrivial part in the sector group: torsion {red.torsion}, "
                     f"free {red.free}")
    _emit(args, report, lines)
    return 0


def cmd_cg(args):
    f = _load_fan(args.fan)
    word = _load_word(args.word)
    e = _embedding(args)
    try:
        m = ToricMap(f, word, e)
    except ReplayError as exc:
        raise InputError(f"{args.word}: {exc}") from None
    report = {"N": e.N, "embedding": [e.p, e.q], "fan_x": [list(r) for r in m.fan_x.rays],
              "fan_y": [list(r) for r in m.fan_y.rays], "word": [str(mv) for mv in word],
              **ledger_report(m)}
    lines = []
    for en in report["entries"]:
        lines.append(f"{en['side']:8} {tuple(en['divisor'])}: {en['equiv_class']}")
    lines += [f"c     = {report['c']['text']}",
              f"C_G   = {report['C_G']['text']}",
              f"C_orb = {report['C_orb']['text']}"]
    _emit(args, report, lines)
    return 0


def cmd_verify(args):
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    report = run_verify(args.kind, args.trials, args.seed)
    lines = [f"{args.kind}: {report['passed']}/{report['trials']} pass (seed {args.seed})"]
    lines += [f"  FAIL trial {f['trial']} (seed {f['seed']}): {f}" for f in report["failures"]]
    _emit(args, report, lines)
    return 0 if report["ok"] else 1


def cmd_scenario(args):
    try:
        if args.name == "dp6":
            report = scenario_dp6(args.N, args.a, args.b)
        elif args.name == "lsh":
            report = scenario_lsh(identify=args.identify)
        else:
            report = scenario_coarsening(args.N, *(int(x) for x in args.embed.split(",")))
    except (ScenarioError, ValueError) as exc:
        raise InputError(str(exc)) from None
    lines = [f"scenario {args.name}"]
    if args.name == "dp6":
        lines += [f"weights before: {report['weights_before']}",
                  f"weights after:  {report['weights_after']}",
                  f"class before: {report['class_before']['text']}",
                  f"class after:  {report['class_after']['text']}"]
        led = report["ledger"]
    elif args.name == "coarsening":
        lines.append(f"word: {', '.join(report['word'])}")
        led = report["ledger"]
    else:
        led = report
    lines += [f"c     = {led['c']['text']}",
              f"C_G   = {led['C_G']['text']}",
              f"C_orb = {led['C_orb']['text']}"]
    for k, v in report.get("checks", {}).items():
        lines.append(f"{'pass' if v else 'FAIL'}: {k}")
    _emit(args, report, lines)
    return 0 if report["ok"] else 1


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="birburn",
        description="Burnside-group invariants of equivariant birational maps of toric surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quotient", parents=[fmt], help="rational-sector presentation for C_N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-N", type=int, default=60)
    p.add_argument("--verbose", action="store_true", help="list the generators")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("class", parents=[fmt], help="class [X / C_N] of a toric surface")
    p.add_argument("--fan", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--embed", required=True, help="torsion point p,q")
    p.add_argument("--reduce", action="store_true", help="also reduce in the sector group")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("cg", parents=[fmt], help="ledger and invariants c, C_G, C_orb of a map")
    p.add_argument("--fan", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--embed", required=True)
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("verify", parents=[fmt], help="randomized property checks")
    p.add_argument("kind", choices=list(CHECKS))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scenario", parents=[fmt], help="worked examples")
    p.add_argument("name", choices=["dp6", "lsh", "coarsening"])
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--embed", default="1,2", help="torsion point for 'coarsening'")
    p.add_argument("--identify", action="store_true",
                   help="lsh: identify the labels of C and J2(C) (cancellation control)")
    p.set_defaults(func=cmd_scenario)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"birburn: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
