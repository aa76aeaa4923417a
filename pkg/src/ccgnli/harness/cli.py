"""Command-line entry point: ``ccgnli run`` and ``ccgnli parse``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..logic.syntax import to_text
from .pipeline import PROVERS, Config, data_path, logical_form
from .problems import FORMATS, load_problems
from .report import evaluate


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccgnli", description="Symbolic entailment over CCG logical forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate a corpus of entailment problems")
    run.add_argument("--corpus", default=None, help="corpus file (default: the bundled corpus)")
    run.add_argument("--format", choices=FORMATS, default="bundled-jsonl")
    run.add_argument("--kb", default=None, help="lexical knowledge base (default: bundled)")
    run.add_argument("--no-lexical", action="store_true", help="disable lexical axiom insertion")
    run.add_argument("--binary-labels", action="store_true", help="skip the negative proof; labels yes/unknown")
    run.add_argument("--prover", choices=PROVERS, default="internal")
    run.add_argument("--dump-lf", action="store_true", help="include logical forms in the records")
    run.add_argument("--dump-proof", action="store_true", help="include tableau traces in the records")
    run.add_argument("--budget-seconds", type=float, default=10.0)
    run.add_argument("--budget-steps", type=int, default=10_000)
    run.add_argument("--report", default=None, help="write line-delimited records here")
    run.add_argument("--threshold", type=float, default=0.0, help="minimum accuracy for exit code 0")
    run.add_argument("--workers", type=int, default=1)
    run.add_argument("--timing", action="store_true", help="show per-stage timing (not deterministic)")

    parse = sub.add_parser("parse", help="print the logical form of each sentence")
    parse.add_argument("sentences", nargs="+")
    return parser


def _run(args) -> int:
    corpus = args.corpus or data_path("corpus.jsonl")
    problems = load_problems(corpus, args.format)
    config = Config(kb_path=args.kb, lexical=not args.no_lexical, binary_labels=args.binary_labels,
                    prover=args.prover, budget_steps=args.budget_steps, budget_seconds=args.budget_seconds,
                    threshold=args.threshold, dump_lf=args.dump_lf, dump_proof=args.dump_proof)
    report = evaluate(problems, config, workers=args.workers)
    sys.stdout.write(report.table(timing=args.timing))
    records = report.to_jsonl(dump_lf=args.dump_lf, dump_proof=args.dump_proof, timing=args.timing)
    if args.report:
        Path(args.report).write_text(records, encoding="utf-8")
    elif args.dump_lf or args.dump_proof or args.prover == "export-only":
        sys.stdout.write(records)
    return 0 if report.passed(args.threshold) else 1


def _parse(args) -> int:
    status = 0
    for s in args.sentences:
        try:
            print(f"{s}\t{to_text(logical_form(s))}")
        except Exception as exc:
            print(f"{s}\tERROR {type(exc).__name__}: {exc}")
            status = 1
    return status


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return _run(args) if args.command == "run" else _parse(args)


if __name__ == "__main__":
    sys.exit(main())
