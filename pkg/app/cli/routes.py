import argparse

from app.cli.commands.analyze import register_analyze
from app.cli.commands.gen import register_gen
from app.cli.commands.scan import register_scan
from app.cli.commands.verify_lemmas import register_verify_lemmas
from app.cli.options import common_options
from vtchroma.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.PROJECT_NAME, description=settings.PROJECT_DESCRIPTION)
    parser.add_argument("--version", action="version", version=settings.VERSION)
    subparsers = parser.add_subparsers(dest="command", required=True)

    parents = [common_options()]
    register_gen(subparsers, parents)
    register_analyze(subparsers, parents)
    register_scan(subparsers, parents)
    register_verify_lemmas(subparsers, parents)
    return parser
