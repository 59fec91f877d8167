import argparse
import csv
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO

from jinja2 import Environment, FileSystemLoader

from vtchroma.core.config import settings
from vtchroma.enums import CheckName, OutputFormat
from vtchroma.schemas.reports import AnalysisRecord, ScanSummary
from vtchroma.schemas.runs import Budget, RunConfig

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"
templates = Environment(loader=FileSystemLoader(TEMPLATES_DIR), trim_blocks=True, lstrip_blocks=True)

PROFILE_COLUMNS = ["graph6", "n", "delta", "omega", "alpha", "chi", "chi_f", "vertex_transitive", "cluster_class"]


def int_list(text: str) -> list[int]:
    """"2..4" -> [2, 3, 4]; "1,3" -> [1, 3]; mixed forms allowed."""
    out: list[int] = []
    try:
        for piece in text.split(","):
            low, sep, high = piece.strip().partition("..")
            out.extend(range(int(low), int(high) + 1) if sep else [int(low)])
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")
    return out


def int_pairs(text: str) -> list[tuple[int, int]]:
    """"5:2,7:3" -> [(5, 2), (7, 3)]."""
    try:
        return [tuple(int(x) for x in piece.split(":", 1)) for piece in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n:k pairs, got {text!r}")


def common_options() -> argparse.ArgumentParser:
    """Flags shared by every command."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--format", dest="output_format", type=OutputFormat, default=OutputFormat.JSON,
                        choices=list(OutputFormat), help="output format (json is the stable contract)")
    parser.add_argument("--output", type=Path, default=None, help="write records to this file")
    parser.add_argument("--workers", type=int, default=settings.WORKERS, help="worker processes")
    parser.add_argument("--node-limit", type=int, default=None, help="backtracking node budget")
    parser.add_argument("--clique-limit", type=int, default=None, help="clique enumeration budget")
    parser.add_argument("--seed", type=int, default=settings.RANDOM_SEED, help="seed for random corpora")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    return parser


def run_config(args: argparse.Namespace, **source) -> RunConfig:
    """Validated run settings; `source` is at most one of family, input_path or graph6."""
    budget = {}
    if args.node_limit is not None:
        budget["node_limit"] = args.node_limit
    if args.clique_limit is not None:
        budget["clique_limit"] = args.clique_limit
    return RunConfig(
        command=args.command,
        budget=Budget(**budget),
        output_format=args.output_format,
        output_path=args.output,
        workers=args.workers,
        seed=args.seed,
        **source,
    )


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def _record_row(record: AnalysisRecord) -> dict:
    data = record.model_dump(mode="json")
    row = {column: data[column] for column in PROFILE_COLUMNS}
    for name in CheckName:
        check = data["checks"].get(name.value)
        row[f"{name.value}.verdict"] = check["verdict"] if check else ""
        row[f"{name.value}.holds"] = "" if not check or check["holds"] is None else check["holds"]
    return row


def write_records(
    records: list[AnalysisRecord],
    output_format: OutputFormat,
    stream: TextIO,
    summary: Optional[ScanSummary] = None,
) -> None:
    if output_format is OutputFormat.JSON:
        for record in records:
            stream.write(json.dumps(record.model_dump(mode="json"), sort_keys=True) + "\n")
    elif output_format is OutputFormat.CSV:
        columns = PROFILE_COLUMNS + [f"{n.value}.{part}" for n in CheckName for part in ("verdict", "holds")]
        writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(_record_row(record))
    else:
        template = templates.get_template("report.txt.j2")
        stream.write(template.render(records=records, summary=summary))


def write_summary(summary: ScanSummary, stream: TextIO) -> None:
    stream.write(json.dumps({"summary": summary.model_dump(mode="json")}, sort_keys=True) + "\n")
