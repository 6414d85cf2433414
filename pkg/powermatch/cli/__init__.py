from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence

from powermatch import __version__
from powermatch.utils.exceptions import (
    CertificationError,
    ContractError,
    DocumentParseError,
    DomainError,
    GroupValidationError,
    InvariantViolationError,
    UsageError,
    VerificationFailed,
)
from powermatch.utils.logger import get_logger

from .commands import cmd_graph, cmd_group, cmd_match, cmd_nt, cmd_verify
from .errors import (
    EXIT_OK,
    certification_error,
    global_error_handler,
    input_error,
    io_error,
    usage_error,
    verification_failed,
)

log = get_logger()

ErrorHandler = Callable[[Exception], int]


class ErrorDispatcher:
    """Routes an exception to the first handler registered for its class."""

    def __init__(self) -> None:
        self.handlers: list[tuple[type[BaseException], ErrorHandler]] = []

    def register_errors_handler(self, handler: ErrorHandler, exception: type[BaseException]) -> None:
        self.handlers.append((exception, handler))

    def dispatch(self, error: Exception) -> int:
        for exception, handler in self.handlers:
            if isinstance(error, exception):
                return handler(error)
        raise error


def register_handlers(dispatcher: ErrorDispatcher) -> None:
    """Register all the CLI's error handlers."""

    dispatcher.register_errors_handler(verification_failed, exception=VerificationFailed)
    dispatcher.register_errors_handler(usage_error, exception=DomainError)
    dispatcher.register_errors_handler(usage_error, exception=UsageError)
    dispatcher.register_errors_handler(io_error, exception=OSError)
    dispatcher.register_errors_handler(input_error, exception=DocumentParseError)
    dispatcher.register_errors_handler(input_error, exception=GroupValidationError)
    dispatcher.register_errors_handler(input_error, exception=ContractError)
    dispatcher.register_errors_handler(certification_error, exception=InvariantViolationError)
    dispatcher.register_errors_handler(certification_error, exception=CertificationError)
    dispatcher.register_errors_handler(
        global_error_handler, exception=Exception
    )  # Should be last among errors handlers


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powermatch",
        description="Matchings in power, enhanced power and commuting graphs of finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p: argparse.ArgumentParser) -> None:
        target = p.add_mutually_exclusive_group()
        target.add_argument("--out", help="output file (default: under DATA_DIR)")
        target.add_argument("--stdout", action="store_true", help="write the document to standard output")

    group = sub.add_parser("group", help="build a group and write its Cayley table")
    group.add_argument(
        "--kind",
        required=True,
        choices=["cyclic", "dihedral", "dicyclic", "elem2", "symmetric", "product", "perm"],
    )
    group.add_argument("--n", type=int, help="cyclic order, polygon size or symmetric degree")
    group.add_argument("--m", type=int, help="dicyclic parameter, order 4m")
    group.add_argument("--k", type=int, help="rank of the elementary abelian 2-group")
    group.add_argument("--a", help="first factor group file")
    group.add_argument("--b", help="second factor group file")
    group.add_argument("--gen", action="append", help="generator in cycle notation, e.g. '(1 2 3)'")
    group.add_argument("--degree", type=int, help="number of points the generators act on")
    outputs(group)
    group.set_defaults(handler=cmd_group)

    graph = sub.add_parser("graph", help="export a graph of a group")
    graph.add_argument("--group", required=True, help="group file")
    graph.add_argument("--kind", required=True, choices=["power", "enhanced", "commuting"])
    graph.add_argument("--format", default="edges", choices=["edges", "dot"])
    graph.add_argument("--strategy", default="cover", choices=["cover", "closure"], help="enhanced graph strategy")
    outputs(graph)
    graph.set_defaults(handler=cmd_graph)

    match = sub.add_parser("match", help="compute a matching")
    match.add_argument("--group", help="group file")
    match.add_argument("--graph", help="graph edge-list file")
    match.add_argument("--graph-kind", default="power", choices=["power", "enhanced", "commuting"])
    match.add_argument(
        "--algo",
        default="blossom",
        choices=["blossom", "brute", "inverse-pairs", "mp2", "rematch"],
    )
    match.add_argument("--matching", help="enhanced power graph matching file for rematch")
    match.add_argument("--certify", action="store_true", help="re-validate and cross-check the result")
    outputs(match)
    match.set_defaults(handler=cmd_match)

    nt = sub.add_parser("nt", help="number theory tables as CSV")
    nt.add_argument("--mode", required=True, choices=["tau-phi-scan", "antichain", "lemma"])
    nt.add_argument("--min", type=int)
    nt.add_argument("--max", type=int)
    nt.add_argument("--n", type=int)
    nt.add_argument("--pmax", type=int)
    nt.add_argument("--amax", type=int)
    nt.add_argument("--out", help="CSV file (default: standard output)")
    nt.set_defaults(handler=cmd_nt)

    verify = sub.add_parser("verify", help="run the theorem checks on the group catalog")
    verify.add_argument("--cap", type=int, help="largest group order in the catalog")
    verify.add_argument("--checks", help="comma-separated check ids (default: all)")
    verify.add_argument("--report", help="report file (default: REPORT_FILE)")
    verify.add_argument("--workers", type=int, help="parallel workers")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parses arguments, runs one subcommand and returns the exit status."""

    args = build_parser().parse_args(argv)
    dispatcher = ErrorDispatcher()
    register_handlers(dispatcher)

    log.debug("Run %s", args.command)
    try:
        args.handler(args)
    except Exception as error:  # pylint: disable=broad-except
        return dispatcher.dispatch(error)
    return EXIT_OK
