from __future__ import annotations

import csv
import io
import os
import sys
from argparse import Namespace
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

from powermatch.config import config
from powermatch.graphs.builders import commuting_graph, enhanced_power_graph, power_graph
from powermatch.graphs.export import dumps_graph, load_graph, to_dot
from powermatch.graphs.graph import GraphKind, SimpleGraph
from powermatch.groups.constructors import (
    direct_product,
    from_permutation_generators,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    make_symmetric,
    parse_cycles,
)
from powermatch.groups.io import dumps_group, load_group
from powermatch.groups.predicates import (
    involutions,
    is_eppo,
    is_nilpotent,
    odd_order_elements,
    odd_part_of_centralizer,
)
from powermatch.groups.table import GroupTable
from powermatch.lab.catalog import default_catalog
from powermatch.lab.checks import CheckId
from powermatch.lab.report import dump_report, format_table
from powermatch.lab.suite import run_suite
from powermatch.matching.blossom import max_matching
from powermatch.matching.brute import brute_force_matching
from powermatch.matching.constructive import (
    augment_involutions,
    inverse_pair_matching,
    rematch_enhanced_to_power,
)
from powermatch.matching.io import dumps_matching, load_matching
from powermatch.matching.matching import Matching, deficiency, is_perfect, verify_matching
from powermatch.number_theory import (
    antichain_rows,
    lemma_table,
    max_divisor_antichain,
    phi,
    scan_tau_phi,
)
from powermatch.utils.exceptions import (
    CertificationError,
    DomainError,
    GuardExceededError,
    UsageError,
    VerificationFailed,
)
from powermatch.utils.logger import get_logger

log = get_logger()

GRAPH_BUILDERS = {
    GraphKind.POWER: power_graph,
    GraphKind.ENHANCED: enhanced_power_graph,
    GraphKind.COMMUTING: commuting_graph,
}


def _emit(args: Namespace, text: str, default_name: str) -> TextIO:
    """
    Writes a document to stdout under --stdout, else to --out or the data
    directory. Returns the stream that summaries should go to.
    """

    if args.stdout:
        sys.stdout.write(text)
        sys.stdout.flush()
        return sys.stderr

    target = Path(args.out or os.path.join(config.DATA_DIR, default_name))
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    log.info("Written %s", target)
    return sys.stdout


def _require(args: Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs {', '.join(missing)}")


def _build_group(args: Namespace) -> GroupTable:
    match args.kind:
        case "cyclic":
            _require(args, "n")
            return make_cyclic(args.n)
        case "dihedral":
            _require(args, "n")
            return make_dihedral(args.n)
        case "dicyclic":
            _require(args, "m")
            return make_dicyclic(args.m)
        case "elem2":
            _require(args, "k")
            return make_elementary_abelian_2(args.k)
        case "symmetric":
            _require(args, "n")
            return make_symmetric(args.n)
        case "product":
            _require(args, "a", "b")
            return direct_product(load_group(args.a), load_group(args.b))
        case "perm":
            if not args.gen:
                raise UsageError("--kind perm needs at least one --gen")
            # shorter generators are padded with fixed points
            return from_permutation_generators([parse_cycles(text, args.degree) for text in args.gen])
    raise UsageError(f"Unknown group kind {args.kind!r}")


def group_summary(g: GroupTable) -> str:
    yes_no = {True: "yes", False: "no"}
    return (
        f"order={g.order} involutions={involutions(g).cardinality} "
        f"odd={odd_order_elements(g).cardinality} "
        f"nilpotent={yes_no[is_nilpotent(g)]} eppo={yes_no[is_eppo(g)]}"
    )


def cmd_group(args: Namespace) -> None:
    g = _build_group(args)
    summary = _emit(args, dumps_group(g), "group.json")
    print(group_summary(g), file=summary)


def cmd_graph(args: Namespace) -> None:
    g = load_group(args.group)
    kind = GraphKind(args.kind)
    if kind is GraphKind.ENHANCED:
        graph = enhanced_power_graph(g, strategy=args.strategy)
    else:
        graph = GRAPH_BUILDERS[kind](g)

    if args.format == "dot":
        text, name = to_dot(graph, name=kind.value), f"{kind.value}.dot"
    else:
        text, name = dumps_graph(graph), f"{kind.value}.json"

    summary = _emit(args, text, name)
    print(f"vertices={graph.n} edges={graph.edge_count}", file=summary)


def _match_inputs(args: Namespace) -> tuple[GroupTable | None, SimpleGraph]:
    if (args.group is None) == (args.graph is None):
        raise UsageError("match needs exactly one of --group or --graph")

    if args.graph is not None:
        if args.algo not in {"blossom", "brute"}:
            raise UsageError(f"--algo {args.algo} needs a --group file")
        return None, load_graph(args.graph)

    g = load_group(args.group)
    kind = GraphKind(args.graph_kind)
    if args.algo in {"inverse-pairs", "mp2", "rematch"} and kind is not GraphKind.POWER:
        raise UsageError(f"--algo {args.algo} produces power graph matchings only")
    return g, GRAPH_BUILDERS[kind](g)


def _certify(args: Namespace, g: GroupTable | None, graph: SimpleGraph, m: Matching, source: Matching | None) -> None:
    if not verify_matching(graph, m):
        raise CertificationError(f"{args.algo} returned an invalid matching")

    if args.algo == "blossom":
        try:
            oracle = brute_force_matching(graph)
        except GuardExceededError as error:
            log.warning("Brute-force cross-check skipped: %s", error.message)
            return
        if oracle.size != m.size:
            raise CertificationError(f"blossom found {m.size} pairs, brute force found {oracle.size}")
        return

    if args.algo == "brute":
        return

    exact = max_matching(graph).size
    if m.size > exact:
        raise CertificationError(f"{args.algo} found {m.size} pairs, above the maximum {exact}")

    if args.algo == "mp2":
        promised = max(0, involutions(g).cardinality - odd_part_of_centralizer(g).cardinality)
        if deficiency(m) != promised:
            raise CertificationError(f"mp2 leaves {deficiency(m)} vertices exposed, promised {promised}")
    elif args.algo == "inverse-pairs" and g.order % 2 and m.size != exact:
        raise CertificationError(f"inverse pairs found {m.size} pairs on an odd-order group, maximum is {exact}")
    elif args.algo == "rematch" and m.size != source.size:
        raise CertificationError(f"rematch changed the size from {source.size} to {m.size}")


def cmd_match(args: Namespace) -> None:
    g, graph = _match_inputs(args)
    source = None

    match args.algo:
        case "blossom":
            m = max_matching(graph)
        case "brute":
            m = brute_force_matching(graph)
        case "inverse-pairs":
            m = inverse_pair_matching(g)
        case "mp2":
            m = augment_involutions(g)
        case "rematch":
            if args.matching is None:
                raise UsageError("--algo rematch needs a --matching file over the enhanced graph")
            source = load_matching(args.matching)
            m = rematch_enhanced_to_power(g, source)
        case _:
            raise UsageError(f"Unknown algorithm {args.algo!r}")

    if args.certify:
        _certify(args, g, graph, m, source)

    summary = _emit(args, dumps_matching(m), "matching.json")
    print(
        f"size={m.size} deficiency={deficiency(m)} perfect={'yes' if is_perfect(m) else 'no'}",
        file=summary,
    )
    if args.certify:
        print("certified", file=summary)


def _write_csv(args: Namespace, header: Sequence[str], rows: Iterable[Sequence]) -> TextIO:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)

    if args.out is None:
        sys.stdout.write(buffer.getvalue())
        sys.stdout.flush()
        return sys.stderr

    target = Path(args.out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(buffer.getvalue(), encoding="utf-8")
    log.info("Written %s", target)
    return sys.stdout


def _flag(value: bool) -> int:
    return int(value)


def cmd_nt(args: Namespace) -> None:
    match args.mode:
        case "tau-phi-scan":
            if args.max is None:
                raise UsageError("--mode tau-phi-scan needs --max")
            start = 1 if args.min is None else args.min
            if start < 1 or args.max < start:
                raise DomainError(f"Bad scan range {start}..{args.max}")
            scan = scan_tau_phi(args.max, start=start)
            rows = ((n, t, f, _flag(ok)) for n, t, f, ok in scan.rows())
            summary = _write_csv(args, ("n", "tau", "phi", "tau_lt_phi"), rows)
            print("failures: " + ",".join(str(n) for n in scan.failures), file=summary)

        case "antichain":
            if args.n is not None:
                start = stop = args.n
            elif args.max is not None:
                start, stop = (1 if args.min is None else args.min), args.max
            else:
                raise UsageError("--mode antichain needs --n or --max")
            if start < 1 or stop < start:
                raise DomainError(f"Bad antichain range {start}..{stop}")

            rows = [
                (n, width, f, _flag(less))
                for n, width, f, less in antichain_rows(start, stop)
            ]
            summary = _write_csv(args, ("n", "antichain", "phi", "alpha_lt_phi"), rows)
            if args.n is not None:
                found = max_divisor_antichain(args.n)
                witness = ",".join(str(d) for d in found.witness)
                print(f"antichain({args.n}) = {found.size} witness {witness} phi={phi(args.n)}", file=summary)

        case "lemma":
            if args.pmax is None or args.amax is None:
                raise UsageError("--mode lemma needs --pmax and --amax")
            table = lemma_table(args.pmax, args.amax)
            rows = (
                (
                    row.p,
                    row.a,
                    row.value,
                    row.bound,
                    row.relation.value,
                    "" if row.doubled_bound is None else row.doubled_bound,
                    "" if row.doubled_relation is None else row.doubled_relation.value,
                    _flag(row.exception),
                    _flag(row.first_equality or row.second_equality),
                )
                for row in table
            )
            header = ("p", "a", "value", "bound", "relation", "doubled_bound", "doubled_relation", "exception", "equality")
            summary = _write_csv(args, header, rows)
            equal = [f"({row.p},{row.a})" for row in table if row.first_equality or row.second_equality]
            print("equality: " + " ".join(equal), file=summary)

        case _:
            raise UsageError(f"Unknown mode {args.mode!r}")


def _parse_checks(text: str | None) -> list[CheckId] | None:
    if text is None:
        return None
    names = [name.strip().upper() for name in text.split(",") if name.strip()]
    unknown = [name for name in names if name not in CheckId.__members__]
    if unknown:
        raise UsageError(f"Unknown check ids: {', '.join(unknown)}")
    return [CheckId(name) for name in names]


def cmd_verify(args: Namespace) -> None:
    checks = _parse_checks(args.checks)
    cap = config.CATALOG_CAP if args.cap is None else args.cap
    workers = config.SUITE_WORKERS if args.workers is None else args.workers

    report = run_suite(default_catalog(cap), checks, workers=workers, cap=cap)
    dump_report(report, args.report or config.REPORT_FILE)
    sys.stdout.write(format_table(report))

    if report.summary.failed:
        failed = ", ".join(f"{r.check_id}/{r.group}" for r in report.failures)
        raise VerificationFailed(f"{report.summary.failed} checks failed: {failed}", report.summary.failed)
