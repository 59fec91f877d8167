import argparse
import itertools

from app.cli.options import int_list, open_output
from vtchroma.algorithms.graph6 import write_graph6
from vtchroma.controllers.generators import FamilyMember, GeneratorController
from vtchroma.core.exceptions import GraphValidationError
from vtchroma.core.logging import logger
from vtchroma.enums import FamilyKind
from vtchroma.schemas.runs import FamilySpec

FAMILIES = ["catlin", "circulant", "circulants", "kneser", "blowup", "hajos", "line"]


def register_gen(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("gen", parents=parents, help="print graph6 lines for a graph family")
    parser.add_argument("family", choices=FAMILIES)
    parser.add_argument("--t", type=int_list, default=[], help="catlin/line/hajos parameter, e.g. 2..4")
    parser.add_argument("--k", type=int_list, default=[], help="catlin/line/kneser parameter")
    parser.add_argument("--n", type=int_list, default=[], help="circulant or kneser order")
    parser.add_argument("--gens", type=int_list, default=[], help="circulant offsets, e.g. 1,3")
    parser.add_argument("--min-n", type=int, default=3, help="smallest order for circulants")
    parser.add_argument("--max-n", type=int, default=None, help="largest order for circulants")
    parser.add_argument("--no-dedupe", action="store_true", help="keep isomorphic circulants")
    parser.add_argument("--cycle", type=int_list, default=[], help="blowup cycle lengths")
    parser.add_argument("--size", type=int_list, default=[], help="blowup clique sizes")
    parser.set_defaults(handler=gen)


def _members(args: argparse.Namespace) -> list[FamilyMember]:
    generators = GeneratorController()
    family = args.family
    if family == "circulant":
        if not args.n or not args.gens:
            raise GraphValidationError("circulant needs --n and --gens")
        return [generators.circulant(n, args.gens) for n in args.n]
    if family == "line":
        return [generators.line(t, k) for t, k in itertools.product(args.t, args.k)]
    if family == "circulants":
        spec = FamilySpec(kind=FamilyKind.CIRCULANT, n_min=args.min_n, n_max=args.max_n, distinct=not args.no_dedupe)
    elif family == "kneser":
        spec = FamilySpec(kind=FamilyKind.KNESER, kneser_pairs=list(itertools.product(args.n, args.k)))
    else:
        spec = FamilySpec(
            kind=FamilyKind(family),
            t_values=args.t,
            k_values=args.k,
            cycles=args.cycle,
            sizes=args.size,
        )
    return generators.members(spec)


def gen(args: argparse.Namespace) -> int:
    members = _members(args)
    with open_output(args.output) as stream:
        for member in members:
            stream.write(write_graph6(member.graph) + "\n")
    logger.info(f"gen {args.family}: wrote {len(members)} graphs")
    return 0
