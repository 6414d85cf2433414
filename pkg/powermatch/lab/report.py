from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel

from powermatch.utils.logger import get_logger

from .checks import CheckResult, Verdict

log = get_logger()


class Summary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0

    @classmethod
    def of(cls, results: list[CheckResult]) -> Summary:
        verdicts = [r.verdict for r in results]
        return cls(
            total=len(verdicts),
            passed=verdicts.count(Verdict.PASS),
            failed=verdicts.count(Verdict.FAIL),
            not_applicable=verdicts.count(Verdict.NOT_APPLICABLE),
        )


class Report(BaseModel):
    suite_version: str
    catalog_cap: int
    results: list[CheckResult]
    summary: Summary

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict is Verdict.FAIL]


def dumps_report(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def dump_report(report: Report, path: str | Path) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_report(report), encoding="utf-8")
    log.info("Report with %d results written to %s", report.summary.total, target)


def format_table(report: Report) -> str:
    """Plain-text table of the results followed by the summary line."""

    header = ("check", "group", "verdict", "expected", "observed")
    rows = [
        (r.check_id.value, r.group, r.verdict.value, r.expected, r.observed)
        for r in report.results
    ]
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]

    def line(row: tuple[str, ...]) -> str:
        return "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()

    s = report.summary
    lines = [line(header), line(tuple("-" * w for w in widths))]
    lines += [line(row) for row in rows]
    lines.append(
        f"{s.total} checks: {s.passed} passed, {s.failed} failed, "
        f"{s.not_applicable} not applicable"
    )
    return "\n".join(lines) + "\n"
