"""Command-line front end.

Exit codes: 0 success, 1 verification discrepancies, 2 bad input or flags,
3 the 2-bridge word gives a link, 4 the 2-bridge diagram is not uniformly
signed, 5 the pretzel word breaks the parity hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chords import ChordDiagram, min_removal
from .codes import parse_gauss, parse_word
from .errors import HypothesisViolated, KnotError, NotAKnot
from .families import PretzelWord, TwoBridgeWord, check_pretzel_hypothesis, parse_int_word
from .report import (
    SWEEP_LIMIT,
    ReportDocument,
    SweepSummary,
    report_gauss,
    report_pretzel,
    report_two_bridge,
    report_word,
    sweep,
)
from .svg import chord_diagram_svg

EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_NOT_A_KNOT = 3
EXIT_NOT_UNIFORM = 4
EXIT_HYPOTHESIS = 5


class UsageError(Exception):
    pass


def _emit(doc: ReportDocument, as_json: bool):
    if as_json:
        print(doc.to_json(indent=2))
        return
    d = doc.to_dict()
    print(f"{d['input_kind']} {d['input_text']}")
    for key, value in d.items():
        if key in ("input_kind", "input_text") or value is None or value == []:
            continue
        if key == "class":
            value = " ".join(f"{k}={v}" for k, v in value.items())
        print(f"  {key}: {value}")


def _exit_code(doc: ReportDocument) -> int:
    return EXIT_DISCREPANCY if doc.discrepancies else 0


def cmd_tr(args) -> int:
    if (args.gauss is None) == (args.word is None):
        raise UsageError("give exactly one of --gauss or --word")
    if args.gauss is not None:
        doc = report_gauss(parse_gauss(args.gauss), args.gauss, verify=args.verify)
    else:
        doc = report_word(parse_word(args.word), args.word, verify=args.verify)
    _emit(doc, args.json)
    return _exit_code(doc)


def cmd_twobridge(args) -> int:
    word = TwoBridgeWord(parse_int_word(args.word))
    doc = report_two_bridge(word, verify=args.verify)
    if doc.status == "link":
        raise NotAKnot(f"D({word}) is a 2-component link")
    _emit(doc, args.json)
    if doc.status == "not_uniform":
        return EXIT_NOT_UNIFORM
    return _exit_code(doc)


def cmd_pretzel(args) -> int:
    word = PretzelWord(parse_int_word(args.word))
    check_pretzel_hypothesis(word)
    doc = report_pretzel(word, verify=args.verify)
    _emit(doc, args.json)
    return _exit_code(doc)


def cmd_sweep(args) -> int:
    if not 0 <= args.max_crossings <= SWEEP_LIMIT:
        raise UsageError(f"--max-crossings must be between 0 and {SWEEP_LIMIT}")
    summary = SweepSummary()
    out = open(args.out, "w") if args.out else None
    interrupted = False
    try:
        for doc in sweep(args.family, args.max_crossings, args.workers, args.max_length):
            summary.add(doc)
            if out:
                out.write(doc.to_json(separators=(",", ":")) + "\n")
                out.flush()
    except KeyboardInterrupt:
        interrupted = True
    finally:
        if out:
            out.close()
    if args.json:
        print(json.dumps(summary.to_dict()))
    else:
        for key, value in summary.to_dict().items():
            print(f"{key}: {value}")
    if interrupted:
        return 130
    return EXIT_DISCREPANCY if summary.discrepancies else 0


def cmd_chords_svg(args) -> int:
    word = parse_word(args.word)
    cd = ChordDiagram.from_word(word.symbols)
    _, witness = min_removal(cd)
    svg = chord_diagram_svg(cd, witness, labels=word.symbols)
    try:
        with open(args.out, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {args.out}: {cd.n} chords, {len(witness.removed)} removed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivknot", description="Trivializing numbers of knot diagrams."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tr", help="trivializing number of a Gauss code or projection word")
    p.add_argument("--gauss", help='signed Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+"')
    p.add_argument("--word", help='projection word, e.g. "1 2 3 1 2 3"')
    p.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    p.set_defaults(func=cmd_tr)

    p = sub.add_parser("twobridge", help="standard diagram D(a1,...,am)")
    p.add_argument("word", help="comma-separated positive integers, e.g. 2,2,2,1")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_twobridge)

    p = sub.add_parser("pretzel", help="standard diagram P(p1,...,p2n)")
    p.add_argument("word", help="comma-separated positive integers, e.g. 3,2")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_pretzel)

    p = sub.add_parser("sweep", help="verify every word up to a crossing budget")
    p.add_argument("--family", choices=("twobridge", "pretzel"), required=True)
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None, help="cap on the number of boxes")
    p.add_argument("--out", help="newline-delimited JSON output file")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("chords-svg", help="draw the chord diagram and an optimal witness")
    p.add_argument("--word", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_chords_svg)

    for action in sub.choices.values():
        action.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NotAKnot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_KNOT
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (KnotError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
