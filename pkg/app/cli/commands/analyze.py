import argparse
import sys
from pathlib import Path

from app.cli.options import open_output, run_config, write_records
from vtchroma.algorithms.graph6 import read_graph6_file, read_graph6_lines
from vtchroma.controllers.conjectures import ConjectureController
from vtchroma.core.exceptions import ConjectureViolationError, ExitCode
from vtchroma.core.logging import logger
from vtchroma.models.graph import Graph
from vtchroma.schemas.reports import AnalysisRecord
from vtchroma.schemas.runs import RunConfig


def register_analyze(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "analyze", parents=parents, help="profile graphs and evaluate every applicable bound"
    )
    parser.add_argument("graph6", nargs="*", help="graph6 strings; stdin is read when none and no --file")
    parser.add_argument("--file", type=Path, default=None, help="graph6 file, one graph per line")
    parser.set_defaults(handler=analyze)


def _inputs(config: RunConfig) -> list[Graph]:
    if config.graph6:
        return [g for _, g in read_graph6_lines(config.graph6)]
    if config.input_path is not None:
        return [g for _, g in read_graph6_file(config.input_path)]
    return [g for _, g in read_graph6_lines(sys.stdin)]


def analyze(args: argparse.Namespace) -> int:
    config = run_config(args, input_path=args.file, graph6=args.graph6)
    graphs = _inputs(config)
    controller = ConjectureController(config.budget)
    records: list[AnalysisRecord] = []
    for g in graphs:
        records.append(controller.record(controller.analysis.analyze(g)))

    with open_output(config.output_path) as stream:
        write_records(records, config.output_format, stream)

    violated = [r.graph6 for r in records if any(c.is_failure for c in r.checks.values())]
    if violated:
        raise ConjectureViolationError(
            message=f"{len(violated)} of {len(records)} graphs violate a checked bound",
            details=[{"graph6": g6} for g6 in violated],
        )
    undecided = sum(1 for r in records if r.undecided())
    if undecided:
        logger.warning(f"analyze: {undecided} graphs left undecided by the budget")
        return ExitCode.BUDGET_EXHAUSTED
    return ExitCode.OK
