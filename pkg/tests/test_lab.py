import json

import pytest

from powermatch.groups import is_cyclic, is_nilpotent, is_two_group
from powermatch.lab import (
    CHECKS,
    CheckId,
    GroupProfile,
    Tag,
    Verdict,
    catalog_entry,
    default_catalog,
    dumps_report,
    format_table,
    run_check,
    run_suite,
)
from powermatch.utils.exceptions import DomainError


def test_catalog_respects_the_cap():
    assert [e.name for e in default_catalog(1)] == ["C1"]
    small = default_catalog(8)
    assert all(e.order <= 8 for e in small)
    assert {"C8", "D4", "Q8", "C2^3", "C2xC4", "S3"} <= {e.name for e in small}
    names = {e.name for e in default_catalog(120)}
    assert {"S3xC7", "S4", "C32", "C2^5"} <= names


def test_catalog_is_deterministic():
    first = [(e.name, e.group.rows) for e in default_catalog(16)]
    second = [(e.name, e.group.rows) for e in default_catalog(16)]
    assert first == second


def test_tags_follow_the_structure():
    for entry in default_catalog(32):
        g = entry.group
        assert (Tag.CYCLIC in entry.tags) == is_cyclic(g), entry.name
        assert (Tag.NILPOTENT in entry.tags) == is_nilpotent(g), entry.name
        assert (Tag.TWO_GROUP in entry.tags) == is_two_group(g), entry.name
        assert (Tag.ODD_ORDER in entry.tags) == bool(g.order % 2), entry.name
    assert Tag.DIHEDRAL in catalog_entry("D5").tags
    assert Tag.PRODUCT in catalog_entry("S3xC7").tags


def test_catalog_entry_lookup():
    assert catalog_entry("Q16").order == 16
    with pytest.raises(DomainError):
        catalog_entry("M11")


def test_profile_numbers():
    profile = GroupProfile(catalog_entry("D4"))
    assert profile.mu == 2
    assert profile.deficiency == 4
    assert profile.involutions.cardinality == 5
    assert profile.centralizing_odd.cardinality == 1


def test_every_check_is_registered():
    assert set(CHECKS) == set(CheckId)


def test_nilpotent_formula_on_c2xc4():
    result = run_check(CheckId.NILP, catalog_entry("C2xC4"))
    assert result.verdict is Verdict.PASS
    assert result.expected == "deficiency = 2"
    assert result.observed == "deficiency = 2"


def test_small_mu_on_d4():
    result = run_check("SMALL_MU", catalog_entry("D4"))
    assert result.verdict is Verdict.PASS
    assert result.observed == "mu = 2"


def test_enhanced_equality_on_c6():
    result = run_check(CheckId.ENH_EQ, catalog_entry("C6"))
    assert result.verdict is Verdict.PASS
    assert result.expected == "mu = mu_e = 3"


def test_odd_order_on_c9():
    result = run_check(CheckId.ODD_ORDER, catalog_entry("C9"))
    assert result.verdict is Verdict.PASS
    assert result.observed == "mu = 4"


def test_checks_outside_their_hypothesis_are_not_applicable():
    assert run_check(CheckId.ODD_ORDER, catalog_entry("C6")).verdict is Verdict.NOT_APPLICABLE
    assert run_check(CheckId.UNIQUE_INV, catalog_entry("S3")).verdict is Verdict.NOT_APPLICABLE
    assert run_check(CheckId.BOUND_8M4, catalog_entry("C2^3")).verdict is Verdict.NOT_APPLICABLE
    # C8 x C3 has order 24, above the cap
    assert run_check(CheckId.EMBED_CP, catalog_entry("C8"), cap=20).verdict is Verdict.NOT_APPLICABLE


def test_embedding_in_a_product_with_a_cyclic_prime():
    result = run_check(CheckId.EMBED_CP, catalog_entry("D4"), cap=64)
    assert result.verdict is Verdict.PASS
    assert result.detail == "s = 4, p = 5"


def test_a_crashing_check_is_recorded_as_a_failure(monkeypatch):
    def boom(profile, cap):
        raise RuntimeError("no luck")

    monkeypatch.setitem(CHECKS, CheckId.CONNECTED, boom)
    result = run_check(CheckId.CONNECTED, catalog_entry("C4"))
    assert result.verdict is Verdict.FAIL
    assert result.observed == "RuntimeError"
    assert result.detail == "no luck"


def test_empty_suite():
    report = run_suite([], cap=8)
    assert report.results == []
    assert report.summary.total == 0
    assert report.failures == []


def test_suite_orders_results_by_group_then_check():
    catalog = default_catalog(4)
    report = run_suite(catalog, ["EPPO_EQ", "ODD_ORDER"], cap=4)
    assert [(r.group, r.check_id) for r in report.results[:2]] == [
        ("C1", CheckId.ODD_ORDER),
        ("C1", CheckId.EPPO_EQ),
    ]
    assert report.summary.total == 2 * len(catalog)


def test_suite_passes_up_to_order_sixteen():
    report = run_suite(default_catalog(16), cap=16)
    assert report.summary.failed == 0, format_table(report)
    assert report.summary.passed > 0
    assert report.summary.total == len(CheckId) * len(default_catalog(16))


@pytest.mark.slow
def test_suite_passes_on_the_full_catalog():
    report = run_suite(default_catalog(64), cap=64)
    assert report.summary.failed == 0, format_table(report)


def test_workers_do_not_change_the_report():
    catalog = default_catalog(12)
    serial = run_suite(catalog, workers=1, cap=12)
    parallel = run_suite(catalog, workers=2, cap=12)
    assert dumps_report(serial) == dumps_report(parallel)


def test_report_document():
    report = run_suite(default_catalog(6), ["ODD_ORDER"], cap=6)
    assert dumps_report(report) == dumps_report(run_suite(default_catalog(6), ["ODD_ORDER"], cap=6))
    doc = json.loads(dumps_report(report))
    assert doc["catalog_cap"] == 6
    assert doc["summary"]["total"] == len(default_catalog(6))
    assert doc["results"][0]["verdict"] == "pass"
    table = format_table(report)
    assert table.splitlines()[0].split() == ["check", "group", "verdict", "expected", "observed"]
    assert table.endswith("not applicable\n")


def test_small_matching_numbers_below_order_twenty():
    small = {e.name for e in default_catalog(19) if GroupProfile(e).mu in (1, 2)}
    assert small == {"C2", "C3", "C4", "C5", "C2^1", "C2^2", "C2^3", "C2^4", "D3", "S3", "D4"}
