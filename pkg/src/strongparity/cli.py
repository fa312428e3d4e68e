"""Command-line entry point: ``strongparity <command> [options]``.

Exit codes: 0 all assertions passed, 1 finding, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import harness
from .errors import GraphInputError, SppError
from .harness import RunConfig, VerificationReport


def _common(p: argparse.ArgumentParser, max_n_default: int | None = None) -> None:
    p.add_argument("--config", type=Path, help="JSON file with RunConfig fields")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", type=int, default=max_n_default)
    p.add_argument("--edge-cap", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--deterministic", action="store_true", default=None,
                   help="omit timings so identical runs give identical reports")
    p.add_argument("--report", type=Path, help="write the JSON-lines report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongparity", description="Strong parity property tools")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide the strong parity property for graph6 inputs")
    p.add_argument("graphs", nargs="*", help="graph6 strings")
    p.add_argument("--file", type=Path, action="append", default=[], help="graph6 file, one graph per line")
    p.add_argument("--mode", choices=harness.MODES, default="both")
    p.add_argument("--cross-check", action="store_true", default=None,
                   help="also run edge-subset brute force inside the definitional decider")
    _common(p)

    p = sub.add_parser("gen-counterexample", help="build and validate the counterexample graph")
    p.add_argument("--p", type=int, required=True, dest="p")
    p.add_argument("--out", type=Path, help="write graph6 here")
    _common(p)

    p = sub.add_parser("verify-equivalence", help="compare both deciders over a graph source")
    p.add_argument("--source", choices=harness.SOURCES, default="exhaustive-labeled")
    p.add_argument("--min-n", type=int, help="smallest order for exhaustive mode (default: --max-n)")
    p.add_argument("--n", type=int, help="order of random samples (default: --max-n)")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--corpus", type=Path, action="append", default=[])
    _common(p, max_n_default=6)

    p = sub.add_parser("theorem3-suite", help="check 3-edge-connected families exhaustively")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-order", type=int, default=12)
    _common(p)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    base = RunConfig.load(args.config) if args.config else RunConfig()
    data = base.to_dict()
    for key in ("seed", "max_n", "edge_cap", "jobs", "deterministic", "cross_check"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    corpus = [str(c) for c in getattr(args, "corpus", [])]
    if corpus:
        data["corpus"] = corpus
    return RunConfig(**data)


def _emit(report: VerificationReport, dest: Path | None) -> None:
    if dest is None:
        sys.stdout.write(report.to_jsonl())
    else:
        dest.write_text(report.to_jsonl())
        print(json.dumps({"counters": report.counters, "passed": report.passed}))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        cfg = _config(args)
        if args.command == "check":
            lines: list[tuple[str, object]] = harness.load_graph_lines(args.graphs, prefix="arg:")
            for path in args.file:
                with open(path) as fh:
                    lines += harness.load_graph_lines(fh, prefix=f"{path}:")
            if not lines:
                raise GraphInputError("no graphs given")
            report, code = harness.cmd_check(lines, args.mode, cfg)
            _emit(report, args.report)
            return code
        if args.command == "gen-counterexample":
            summary, code = harness.cmd_gen_counterexample(args.p, args.out, cfg)
            print(json.dumps(summary, sort_keys=True))
            return code
        if args.command == "verify-equivalence":
            cfg.max_n = max(cfg.max_n, args.n or 0)
            report, code = harness.cmd_verify_equivalence(
                args.max_n, args.source, cfg.seed, cfg, min_n=args.min_n, samples=args.samples, n=args.n
            )
            _emit(report, args.report)
            return code
        report, code = harness.cmd_theorem3_suite(args.kmax, args.samples, cfg.seed, cfg, args.max_order)
        _emit(report, args.report)
        return code
    except (GraphInputError, SppError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
