#!/usr/bin/env python3
"""
Command-line entry point: rooted lists, powers, linear quotients,
regularity, structure lemmas and the chordal explorer.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

from .chordal_explorer import EXIT_STATUS, ChordalExplorer
from .config import Budgets, load_budgets
from .models.errors import RootedOrderError, SizeLimitError
from .models.schemas import ChooserStrategy, ChordalChooser, GeneratorList, Method
from .tasks.lq_verify import (
    check_colon_propositions,
    has_linear_quotients,
    regularity_report,
    verify_main_theorem,
)
from .tasks.power_gens import min_gens_power, min_gens_power_brute, power_record, power_table
from .tasks.rooted_order import load_chooser, rooted_list_chordal, rooted_list_path, sort_rooted
from .tasks.structure_lemmas import check_structure_lemmas
from .tools.covers import minimal_vertex_covers
from .tools.graphs import load_graph, path
from .tools.monomials import canonical_sort, format_monomial

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROPERTY_FAILURE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports usage errors as exceptions (exit 1)."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_graph_source(parser: argparse.ArgumentParser, allow_graph: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--path", type=int, metavar="N", help="path graph P_N")
    if allow_graph:
        group.add_argument("--graph", type=Path, metavar="FILE", help="graph file (JSON or plain text)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rooted-order", description=__doc__)
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--quiet", action="store_true", help="only warnings on stderr")
    parser.add_argument("--cover-cap", type=int, metavar="N", help="max vertices for cover enumeration")
    parser.add_argument("--product-cap", type=int, metavar="N", help="max multisets per s-fold enumeration")
    parser.add_argument("--output", type=Path, metavar="FILE", help="write the report here instead of stdout")
    parser.add_argument("--timing", action="store_true", help="add elapsed_ms to power records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rooted-list", help="rooted list of a path or chordal graph")
    _add_graph_source(p)
    p.add_argument("--chooser", type=Path, metavar="FILE", help="chooser script (JSON)")
    p.add_argument("--strategy", choices=[ChooserStrategy.CANONICAL.value, ChooserStrategy.LARGEST.value])

    p = sub.add_parser("covers", help="minimal vertex covers, G(J(G))")
    _add_graph_source(p)

    p = sub.add_parser("gens", help="minimal generators of a power of the cover ideal")
    _add_graph_source(p)
    p.add_argument("--power", type=int, required=True, metavar="S")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.PAIRS.value)

    p = sub.add_parser("check-lq", help="linear quotients of a power in rooted order")
    _add_graph_source(p)
    p.add_argument("--power", type=int, required=True, metavar="S")

    p = sub.add_parser("reg", help="regularity formula against the maximal generator degree")
    _add_graph_source(p, allow_graph=False)
    p.add_argument("--power", type=int, required=True, metavar="S")

    p = sub.add_parser("explore", help="search rooted lists of a chordal graph")
    p.add_argument("--graph", type=Path, required=True, metavar="FILE")
    p.add_argument("--max-power", type=int, required=True, metavar="S")
    p.add_argument("--cap", type=int, metavar="K")

    p = sub.add_parser("check-lemmas", help="structure lemmas and colon propositions for paths")
    _add_graph_source(p, allow_graph=False)
    p.add_argument("--power", type=int, required=True, metavar="S")

    p = sub.add_parser("table", help="power generator counts for paths")
    p.add_argument("--max-path", type=int, required=True, metavar="N")
    p.add_argument("--max-power", type=int, required=True, metavar="S")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.PAIRS.value)
    p.add_argument("--csv", type=Path, metavar="FILE", help="also write the table as CSV")
    return parser


def _base_list(args) -> GeneratorList:
    if args.path is not None:
        return rooted_list_path(args.path)
    return rooted_list_chordal(load_graph(args.graph)).model_copy(update={"source": args.graph.stem})


def _cmd_rooted_list(args, budgets: Budgets):
    if args.path is not None and args.chooser is None and args.strategy is None:
        return rooted_list_path(args.path).labels(), EXIT_OK
    graph = path(args.path) if args.path is not None else load_graph(args.graph)
    if args.chooser is not None:
        chooser = load_chooser(args.chooser)
    else:
        chooser = ChordalChooser(strategy=ChooserStrategy(args.strategy or ChooserStrategy.CANONICAL.value))
    return rooted_list_chordal(graph, chooser).labels(), EXIT_OK


def _cmd_covers(args, budgets: Budgets):
    graph = path(args.path) if args.path is not None else load_graph(args.graph)
    covers = minimal_vertex_covers(graph, cap=budgets.cover_cap)
    return [format_monomial(m) for m in canonical_sort(covers)], EXIT_OK


def _cmd_gens(args, budgets: Budgets):
    base = _base_list(args)
    start = time.perf_counter()
    result = min_gens_power(base, args.power, Method(args.method), budgets)
    elapsed = (time.perf_counter() - start) * 1000 if args.timing else None
    record = power_record(result, elapsed).model_dump(mode="json", exclude_none=True)
    return {"monomials": [format_monomial(m) for m in canonical_sort(result.minimal)], "record": record}, EXIT_OK


def _cmd_check_lq(args, budgets: Budgets):
    if args.path is not None:
        report = verify_main_theorem(args.path, args.power, budgets)
    else:
        base = _base_list(args)
        power = min_gens_power_brute(base, args.power, budgets)
        report = has_linear_quotients(sort_rooted(power.minimal, base, args.power), budgets=budgets)
    return report.to_payload(), EXIT_OK if report.verdict else EXIT_PROPERTY_FAILURE


def _cmd_reg(args, budgets: Budgets):
    report = regularity_report(args.path, args.power, budgets)
    return report.model_dump(), EXIT_OK if report.match else EXIT_PROPERTY_FAILURE


def _cmd_explore(args, budgets: Budgets):
    report = ChordalExplorer(budgets).explore(load_graph(args.graph), args.max_power, args.cap)
    return report.to_payload(), EXIT_STATUS[report.summary]


def _cmd_check_lemmas(args, budgets: Budgets):
    structure = check_structure_lemmas(args.path, args.power, budgets)
    propositions = check_colon_propositions(args.path, args.power, budgets)
    payload = {"structure": structure.model_dump(), "colon_propositions": propositions.model_dump()}
    passed = structure.passed and propositions.passed
    return payload, EXIT_OK if passed else EXIT_PROPERTY_FAILURE


def _cmd_table(args, budgets: Budgets):
    df = power_table(range(2, args.max_path + 1), range(1, args.max_power + 1), Method(args.method), budgets, args.timing)
    if args.csv is not None:
        df.to_csv(args.csv, index=False)
    return df.to_json(orient="records", lines=True), EXIT_OK


COMMANDS = {
    "rooted-list": _cmd_rooted_list,
    "covers": _cmd_covers,
    "gens": _cmd_gens,
    "check-lq": _cmd_check_lq,
    "reg": _cmd_reg,
    "explore": _cmd_explore,
    "check-lemmas": _cmd_check_lemmas,
    "table": _cmd_table,
}


def _configure_logging(args) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def _emit(payload, output: Optional[Path]) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(args)
    try:
        budgets = load_budgets(cover_cap=args.cover_cap, product_cap=args.product_cap)
        payload, status = COMMANDS[args.command](args, budgets)
    except SizeLimitError as e:
        logger.warning("budget exceeded: %s", e)
        _emit({"skipped": True, "reason": str(e)}, args.output)
        return EXIT_BUDGET
    except (RootedOrderError, ValueError) as e:
        print(f"❌ {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
