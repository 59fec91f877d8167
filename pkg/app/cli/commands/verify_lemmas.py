import argparse
import json
from pathlib import Path

from app.cli.options import open_output, run_config
from vtchroma.controllers.lemmas import LemmaController
from vtchroma.core.exceptions import ExitCode, LemmaFalsifiedError
from vtchroma.enums import LemmaSuite


def register_verify_lemmas(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "verify-lemmas", parents=parents, help="run the structural property suites over a corpus"
    )
    parser.add_argument("--random", type=int, default=1000, help="number of random graphs")
    parser.add_argument("--max-n", type=int, default=12, help="largest random graph order")
    parser.add_argument("--file", type=Path, default=None, help="graph6 corpus instead of random graphs")
    parser.add_argument(
        "--suite", type=LemmaSuite, choices=list(LemmaSuite), action="append", default=None,
        help="repeatable; all suites by default",
    )
    parser.add_argument("--haxell-instances", type=int, default=500)
    parser.set_defaults(handler=verify_lemmas)


def verify_lemmas(args: argparse.Namespace) -> int:
    config = run_config(args, input_path=args.file)
    controller = LemmaController(config.budget, seed=config.seed)
    if config.input_path is not None:
        corpus = controller.file_corpus(config.input_path)
    else:
        corpus = controller.random_corpus(args.random, args.max_n) + controller.circulant_corpus(args.max_n)
    results = controller.run(args.suite or list(LemmaSuite), corpus, args.haxell_instances)

    with open_output(config.output_path) as stream:
        for result in results:
            stream.write(json.dumps(result.model_dump(mode="json"), sort_keys=True) + "\n")

    failed = [r for r in results if not r.passed]
    if failed:
        raise LemmaFalsifiedError(
            ", ".join(r.suite.value for r in failed),
            witness=failed[0].witnesses[0] if failed[0].witnesses else None,
            details=[{"suite": r.suite.value, "witnesses": r.witnesses} for r in failed],
        )
    return ExitCode.OK
