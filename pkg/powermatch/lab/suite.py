from __future__ import annotations

from collections.abc import Iterable, Sequence

from powermatch import __version__
from powermatch.config import config
from powermatch.utils.logger import get_logger
from powermatch.utils.queue import run_jobs

from .catalog import CatalogEntry
from .checks import CheckId, CheckResult, Verdict, run_check
from .profile import GroupProfile
from .report import Report, Summary

log = get_logger()


def _check_entry(entry: CatalogEntry, checks: Sequence[CheckId], cap: int) -> list[CheckResult]:
    profile = GroupProfile(entry)
    return [run_check(check_id, profile, cap=cap) for check_id in checks]


def _crashed(entry: CatalogEntry, checks: Sequence[CheckId], error: Exception) -> list[CheckResult]:
    return [
        CheckResult(
            check_id=check_id,
            group=entry.name,
            expected="no error",
            observed=error.__class__.__name__,
            verdict=Verdict.FAIL,
            detail=str(error),
        )
        for check_id in checks
    ]


def run_suite(
    catalog: Sequence[CatalogEntry],
    checks: Iterable[CheckId | str] | None = None,
    *,
    workers: int | None = None,
    cap: int | None = None,
) -> Report:
    """
    Evaluates every (check, entry) pair. Results are ordered by catalog
    position, then by check declaration order, whatever the worker count.
    """

    cap = config.CATALOG_CAP if cap is None else cap
    workers = config.SUITE_WORKERS if workers is None else workers
    selected = list(CheckId) if checks is None else sorted(
        {CheckId(c) for c in checks}, key=list(CheckId).index
    )

    log.info(
        "Run %d checks on %d groups with %d workers", len(selected), len(catalog), workers
    )

    if workers > 1:
        jobs = [lambda entry=entry: _check_entry(entry, selected, cap) for entry in catalog]
        outcomes = run_jobs(jobs, workers=workers)
    else:
        outcomes = [_check_entry(entry, selected, cap) for entry in catalog]

    results: list[CheckResult] = []
    for entry, outcome in zip(catalog, outcomes):
        if isinstance(outcome, Exception):
            outcome = _crashed(entry, selected, outcome)
        results.extend(outcome)

    report = Report(
        suite_version=__version__,
        catalog_cap=cap,
        results=results,
        summary=Summary.of(results),
    )
    log.info(
        "Suite finished: %d passed, %d failed, %d not applicable",
        report.summary.passed,
        report.summary.failed,
        report.summary.not_applicable,
    )
    return report
