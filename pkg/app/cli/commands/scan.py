import argparse
import sys
from pathlib import Path

from app.cli.options import int_list, int_pairs, open_output, run_config, write_records, write_summary
from vtchroma.controllers.scans import ScanController
from vtchroma.core.exceptions import ExitCode, LemmaFalsifiedError
from vtchroma.core.logging import logger
from vtchroma.enums import FamilyKind, OutputFormat
from vtchroma.schemas.runs import FamilySpec


def register_scan(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("scan", parents=parents, help="analyze every member of a graph family")
    parser.add_argument("family", type=FamilyKind, choices=list(FamilyKind))
    parser.add_argument("path", nargs="?", type=Path, default=None, help="graph6 corpus for the file family")
    parser.add_argument("--min-n", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=None)
    parser.add_argument("--gens", type=int_list, default=None, help="single circulant at --max-n")
    parser.add_argument("--no-dedupe", action="store_true", help="keep isomorphic circulants")
    parser.add_argument("--t", type=int_list, default=[])
    parser.add_argument("--k", type=int_list, default=[])
    parser.add_argument("--kneser", type=int_pairs, default=[], help="n:k pairs, e.g. 5:2,7:3")
    parser.add_argument("--cycle", type=int_list, default=[])
    parser.add_argument("--size", type=int_list, default=[])
    parser.set_defaults(handler=scan)


def family_spec(args: argparse.Namespace) -> FamilySpec:
    return FamilySpec(
        kind=args.family,
        n_min=args.min_n,
        n_max=args.max_n,
        gens=args.gens,
        distinct=not args.no_dedupe,
        t_values=args.t,
        k_values=args.k,
        kneser_pairs=args.kneser,
        cycles=args.cycle,
        sizes=args.size,
        path=args.path,
    )


def scan(args: argparse.Namespace) -> int:
    """Exit 1 only when a proved statement fails; conjecture witnesses are logged and summarized."""
    config = run_config(args, family=family_spec(args))
    controller = ScanController(config.budget, workers=config.workers, progress=not args.no_progress)
    records, summary = controller.scan_family(config.family)

    with open_output(config.output_path) as stream:
        write_records(records, config.output_format, stream, summary)
        if config.output_format is OutputFormat.JSON:
            write_summary(summary, stream)
    if config.output_format is OutputFormat.CSV:
        write_summary(summary, sys.stderr)

    if summary.conjecture_violations:
        logger.error(
            f"{summary.family}: {summary.conjecture_violations} conjectured bounds violated, "
            f"witnesses {', '.join(summary.witnesses)}"
        )
    if summary.violations_of_proved:
        failed = [r for r in records if any(c.proved and c.is_failure for c in r.checks.values())]
        raise LemmaFalsifiedError(
            f"{summary.family}: {summary.violations_of_proved} proved bounds",
            witness=failed[0].graph6,
            details=[{"graph6": r.graph6} for r in failed],
        )
    return ExitCode.OK
