"""
Executable theorem checks.

Each check takes a GroupProfile and the catalog cap and returns a
CheckResult. A check whose hypothesis fails for the group returns the
not-applicable verdict with the reason in its detail; an exception raised
while checking is recorded as a failure by `run_check`.
"""

from __future__ import annotations

from collections.abc import Callable
from enum import StrEnum
from functools import cache
from math import factorial

from pydantic import BaseModel

from powermatch.config import config
from powermatch.graphs.builders import c_t_class, connected_components, power_graph
from powermatch.groups.constructors import direct_product, make_cyclic, make_dihedral
from powermatch.groups.predicates import (
    commutes,
    even_order_elements,
    gk_graph,
    is_cyclic,
    is_eppo,
    is_two_group,
    order_spectrum,
)
from powermatch.matching.blossom import max_matching
from powermatch.matching.constructive import (
    augment_involutions,
    inverse_pair_matching,
    normalize_matching,
    rematch_enhanced_to_power,
)
from powermatch.matching.matching import Matching, deficiency, is_perfect, verify_matching
from powermatch.number_theory import is_prime, is_prime_power
from powermatch.utils.logger import get_logger

from .catalog import CatalogEntry
from .profile import GroupProfile

log = get_logger()


class CheckId(StrEnum):
    ODD_ORDER = "ODD_ORDER"
    LOWER_T = "LOWER_T"
    UNIQUE_INV = "UNIQUE_INV"
    MP1 = "MP1"
    CT_COMPONENTS = "CT_COMPONENTS"
    MP2 = "MP2"
    NILP = "NILP"
    BOUND_8M4 = "BOUND_8M4"
    SMALL_MU = "SMALL_MU"
    THREE_INV = "THREE_INV"
    COM_F = "COM_F"
    POW_F = "POW_F"
    EMBED_CP = "EMBED_CP"
    ODD_X_C2 = "ODD_X_C2"
    TWO_GROUP = "TWO_GROUP"
    ENH_EQ = "ENH_EQ"
    EPPO_EQ = "EPPO_EQ"
    CONNECTED = "CONNECTED"
    COMPLETE_CYCLIC = "COMPLETE_CYCLIC"
    EDGE_CHAIN = "EDGE_CHAIN"
    INVOLUTION_RATIO = "INVOLUTION_RATIO"


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class CheckResult(BaseModel):
    check_id: CheckId
    group: str
    expected: str
    observed: str
    verdict: Verdict
    detail: str = ""


CheckFunc = Callable[[GroupProfile, int], CheckResult]
CHECKS: dict[CheckId, CheckFunc] = {}


def check(check_id: CheckId) -> Callable[[CheckFunc], CheckFunc]:
    def register(func: CheckFunc) -> CheckFunc:
        CHECKS[check_id] = func
        return func

    return register


def _verdict(
    check_id: CheckId,
    p: GroupProfile,
    expected: str,
    observed: str,
    ok: bool,
    detail: str = "",
) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        group=p.name,
        expected=expected,
        observed=observed,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        detail=detail,
    )


def _skip(check_id: CheckId, p: GroupProfile, reason: str) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        group=p.name,
        expected="-",
        observed="-",
        verdict=Verdict.NOT_APPLICABLE,
        detail=reason,
    )


def _counts(p: GroupProfile) -> str:
    return (
        f"|G|={p.order} |I|={p.involutions.cardinality} |O|={p.odd_elements.cardinality} "
        f"|O(C_G(I))|={p.centralizing_odd.cardinality}"
    )


@check(CheckId.ODD_ORDER)
def odd_order(p: GroupProfile, _cap: int) -> CheckResult:
    if p.order % 2 == 0:
        return _skip(CheckId.ODD_ORDER, p, "group order is even")

    target = (p.order - 1) // 2
    by_inverses = inverse_pair_matching(p.group).size
    return _verdict(
        CheckId.ODD_ORDER,
        p,
        f"mu = {target}",
        f"mu = {p.mu}",
        p.mu == target and by_inverses == target,
        f"inverse pairs give {by_inverses}",
    )


@check(CheckId.LOWER_T)
def lower_t(p: GroupProfile, _cap: int) -> CheckResult:
    if p.order % 2:
        return _skip(CheckId.LOWER_T, p, "group order is odd")

    roots = p.involutions.cardinality + 1
    bound = 1 + (p.order - roots) // 2
    normalized = normalize_matching(p.group, p.power, Matching.empty(p.order))
    return _verdict(
        CheckId.LOWER_T,
        p,
        f"mu >= {bound}",
        f"mu = {p.mu}",
        p.mu >= bound and normalized.size >= bound,
        f"|T|={roots}; normalising the empty matching gives {normalized.size}",
    )


@check(CheckId.UNIQUE_INV)
def unique_involution(p: GroupProfile, _cap: int) -> CheckResult:
    count = p.involutions.cardinality
    if count != 1:
        return _skip(CheckId.UNIQUE_INV, p, f"group has {count} involutions")

    return _verdict(
        CheckId.UNIQUE_INV,
        p,
        "deficiency = 0",
        f"deficiency = {p.deficiency}",
        p.deficiency == 0,
    )


@check(CheckId.MP1)
def odd_excess_lower(p: GroupProfile, _cap: int) -> CheckResult:
    if p.order % 2:
        return _skip(CheckId.MP1, p, "group order is odd")

    bound = p.involutions.cardinality - p.odd_elements.cardinality
    return _verdict(
        CheckId.MP1,
        p,
        f"deficiency >= {bound}",
        f"deficiency = {p.deficiency}",
        p.deficiency >= bound,
        _counts(p),
    )


@check(CheckId.CT_COMPONENTS)
def ct_components(p: GroupProfile, _cap: int) -> CheckResult:
    if p.order % 2:
        return _skip(CheckId.CT_COMPONENTS, p, "group order is odd")

    partition = connected_components(p.power, even_order_elements(p.group))
    components = {c.mask for c in partition.components}
    classes = {c_t_class(p.group, t).mask for t in p.involutions}
    sizes = sorted(partition.sizes)
    return _verdict(
        CheckId.CT_COMPONENTS,
        p,
        f"{len(classes)} odd components equal to the C_t classes",
        f"{len(components)} components of sizes {sizes}",
        components == classes and all(size % 2 for size in sizes),
    )


@check(CheckId.MP2)
def odd_excess_upper(p: GroupProfile, _cap: int) -> CheckResult:
    if p.order % 2:
        return _skip(CheckId.MP2, p, "group order is odd")

    bound = max(0, p.involutions.cardinality - p.centralizing_odd.cardinality)
    built = augment_involutions(p.group)
    achieved = deficiency(built)
    return _verdict(
        CheckId.MP2,
        p,
        f"deficiency <= {bound}",
        f"deficiency = {p.deficiency}",
        p.deficiency <= bound and achieved == bound and verify_matching(p.power, built),
        f"{_counts(p)}; construction leaves {achieved}",
    )


@check(CheckId.NILP)
def nilpotent_formula(p: GroupProfile, _cap: int) -> CheckResult:
    if not p.nilpotent or p.order % 2:
        return _skip(CheckId.NILP, p, "group is not nilpotent of even order")

    target = max(0, p.involutions.cardinality - p.odd_elements.cardinality)
    return _verdict(
        CheckId.NILP,
        p,
        f"deficiency = {target}",
        f"deficiency = {p.deficiency}",
        p.deficiency == target,
        _counts(p),
    )


@check(CheckId.BOUND_8M4)
def order_bound(p: GroupProfile, _cap: int) -> CheckResult:
    if p.elementary_abelian_2:
        return _skip(CheckId.BOUND_8M4, p, "group is elementary abelian of exponent 2")

    bound = 8 * p.mu + 4
    return _verdict(
        CheckId.BOUND_8M4,
        p,
        f"|G| < {bound}",
        f"|G| = {p.order}",
        p.order < bound,
        f"mu = {p.mu}",
    )


@cache
def _small_mu_spectra() -> dict[str, tuple[int, ...]]:
    return {
        "C3": order_spectrum(make_cyclic(3)),
        "C4": order_spectrum(make_cyclic(4)),
        "C5": order_spectrum(make_cyclic(5)),
        "D3": order_spectrum(make_dihedral(3)),
        "D4": order_spectrum(make_dihedral(4)),
    }


@check(CheckId.SMALL_MU)
def small_mu(p: GroupProfile, _cap: int) -> CheckResult:
    spectra = _small_mu_spectra()
    spectrum = order_spectrum(p.group)
    like = next((name for name, known in spectra.items() if known == spectrum), None)

    if p.mu == 1:
        ok = p.elementary_abelian_2 or like == "C3"
        expected = "elementary abelian 2-group or C3"
    elif p.mu == 2:
        ok = like in {"C4", "C5", "D3", "D4"}
        expected = "one of C4, C5, D3, D4"
    else:
        ok = True
        expected = "no constraint for mu not in {1, 2}"

    return _verdict(
        CheckId.SMALL_MU,
        p,
        expected,
        f"mu = {p.mu}",
        ok,
        f"order spectrum matches {like}" if like else "order spectrum matches no reference group",
    )


def _has_noncommuting_involutions(p: GroupProfile) -> bool:
    invols = p.involutions.indices()
    return any(not commutes(p.group, u, v) for u in invols for v in invols if u < v)


@check(CheckId.THREE_INV)
def three_involutions(p: GroupProfile, _cap: int) -> CheckResult:
    if p.involutions.cardinality != 3 or not _has_noncommuting_involutions(p):
        return _skip(CheckId.THREE_INV, p, "group does not have three involutions with a non-commuting pair")

    return _verdict(
        CheckId.THREE_INV,
        p,
        "|G| = 6 or deficiency = 0",
        f"|G| = {p.order}, deficiency = {p.deficiency}",
        p.order == 6 or p.deficiency == 0,
    )


@check(CheckId.COM_F)
def commuting_threshold(p: GroupProfile, _cap: int) -> CheckResult:
    count = p.involutions.cardinality
    threshold = 2 * count * factorial(count)
    if p.order % 2 or p.order < threshold:
        return _skip(CheckId.COM_F, p, f"needs even order at least {threshold}")

    m = p.commuting_matching
    return _verdict(
        CheckId.COM_F,
        p,
        "commuting graph deficiency = 0",
        f"commuting graph deficiency = {deficiency(m)}",
        is_perfect(m),
        f"F({count}) = {threshold}",
    )


@check(CheckId.POW_F)
def power_threshold(p: GroupProfile, _cap: int) -> CheckResult:
    count = p.involutions.cardinality
    threshold = count * factorial(count)
    invols = p.involutions.indices()
    every_one_moved = all(
        any(not commutes(p.group, u, v) for v in invols) for u in invols
    )
    if p.order % 2 or not every_one_moved or p.order < threshold:
        return _skip(
            CheckId.POW_F,
            p,
            f"needs even order at least {threshold} and no involution commuting with all others",
        )

    return _verdict(
        CheckId.POW_F,
        p,
        "deficiency = 0",
        f"deficiency = {p.deficiency}",
        p.deficiency == 0,
        f"F({count}) = {threshold}",
    )


def _power_product_deficiency(p: GroupProfile, factor: int) -> int:
    product = direct_product(p.group, make_cyclic(factor))
    return deficiency(max_matching(power_graph(product)))


@check(CheckId.EMBED_CP)
def embed_cyclic_prime(p: GroupProfile, cap: int) -> CheckResult:
    if p.order % 2:
        return _skip(CheckId.EMBED_CP, p, "group order is odd")

    s = p.deficiency
    prime = next((q for q in range(s + 1, cap + 1) if q % 2 and is_prime(q)), None)
    if prime is None or p.order * prime > cap:
        log.warning("EMBED_CP on %s skipped: no odd prime above %d fits the cap %d", p.name, s, cap)
        return _skip(CheckId.EMBED_CP, p, f"no odd prime above {s} keeps the product within {cap}")

    observed = _power_product_deficiency(p, prime)
    return _verdict(
        CheckId.EMBED_CP,
        p,
        f"deficiency of G x C{prime} = 0",
        f"deficiency of G x C{prime} = {observed}",
        observed == 0,
        f"s = {s}, p = {prime}",
    )


@check(CheckId.ODD_X_C2)
def odd_times_two(p: GroupProfile, cap: int) -> CheckResult:
    if p.order % 2 == 0:
        return _skip(CheckId.ODD_X_C2, p, "group order is even")
    if 2 * p.order > cap:
        return _skip(CheckId.ODD_X_C2, p, f"G x C2 would exceed the cap {cap}")

    observed = _power_product_deficiency(p, 2)
    return _verdict(
        CheckId.ODD_X_C2,
        p,
        "deficiency of G x C2 = 0",
        f"deficiency of G x C2 = {observed}",
        observed == 0,
    )


@check(CheckId.TWO_GROUP)
def two_group(p: GroupProfile, _cap: int) -> CheckResult:
    if not is_two_group(p.group):
        return _skip(CheckId.TWO_GROUP, p, "group order is not a power of 2")

    unique = p.involutions.cardinality == 1
    perfect = p.deficiency == 0
    return _verdict(
        CheckId.TWO_GROUP,
        p,
        f"perfect = {unique}",
        f"perfect = {perfect}",
        perfect == unique,
        f"|I| = {p.involutions.cardinality}",
    )


@check(CheckId.ENH_EQ)
def enhanced_equality(p: GroupProfile, _cap: int) -> CheckResult:
    mu_e = p.enhanced_matching.size
    rematched = rematch_enhanced_to_power(p.group, p.enhanced_matching)
    return _verdict(
        CheckId.ENH_EQ,
        p,
        f"mu = mu_e = {mu_e}",
        f"mu = {p.mu}",
        p.mu == mu_e and rematched.size == mu_e and verify_matching(p.power, rematched),
        f"rematched size {rematched.size}",
    )


@check(CheckId.EPPO_EQ)
def eppo_equivalence(p: GroupProfile, _cap: int) -> CheckResult:
    same = p.power.same_edges(p.enhanced)
    eppo = is_eppo(p.group)
    gk_null = gk_graph(p.group).is_null
    return _verdict(
        CheckId.EPPO_EQ,
        p,
        "P = P_e, EPPO and null prime graph agree",
        f"P = P_e: {same}, EPPO: {eppo}, null prime graph: {gk_null}",
        same == eppo == gk_null,
    )


@check(CheckId.CONNECTED)
def connected(p: GroupProfile, _cap: int) -> CheckResult:
    ok = p.power.is_connected()
    return _verdict(CheckId.CONNECTED, p, "connected", "connected" if ok else "disconnected", ok)


@check(CheckId.COMPLETE_CYCLIC)
def complete_cyclic(p: GroupProfile, _cap: int) -> CheckResult:
    complete = p.power.is_complete()
    cyclic_prime_power = is_cyclic(p.group) and is_prime_power(p.order)
    return _verdict(
        CheckId.COMPLETE_CYCLIC,
        p,
        f"complete = {cyclic_prime_power}",
        f"complete = {complete}",
        complete == cyclic_prime_power,
    )


@check(CheckId.EDGE_CHAIN)
def edge_chain(p: GroupProfile, _cap: int) -> CheckResult:
    ok = p.power.is_subgraph_of(p.enhanced) and p.enhanced.is_subgraph_of(p.commuting)
    return _verdict(
        CheckId.EDGE_CHAIN,
        p,
        "E(P) <= E(P_e) <= E(Com)",
        f"{p.power.edge_count} <= {p.enhanced.edge_count} <= {p.commuting.edge_count}",
        ok,
    )


@check(CheckId.INVOLUTION_RATIO)
def involution_ratio(p: GroupProfile, _cap: int) -> CheckResult:
    if p.elementary_abelian_2:
        return _skip(CheckId.INVOLUTION_RATIO, p, "group is elementary abelian of exponent 2")

    count = p.involutions.cardinality
    return _verdict(
        CheckId.INVOLUTION_RATIO,
        p,
        f"|I| < {3 * p.order / 4:g}",
        f"|I| = {count}",
        4 * count < 3 * p.order,
    )


def run_check(
    check_id: CheckId | str,
    entry: CatalogEntry | GroupProfile,
    *,
    cap: int | None = None,
) -> CheckResult:
    """Runs one check; an exception becomes a failed result carrying its message."""

    check_id = CheckId(check_id)
    profile = entry if isinstance(entry, GroupProfile) else GroupProfile(entry)
    cap = config.CATALOG_CAP if cap is None else cap

    try:
        result = CHECKS[check_id](profile, cap)
    except Exception as error:  # pylint: disable=broad-except
        log.error("(%s) %s on %s: %s", error.__class__.__name__, check_id, profile.name, error)
        result = CheckResult(
            check_id=check_id,
            group=profile.name,
            expected="no error",
            observed=error.__class__.__name__,
            verdict=Verdict.FAIL,
            detail=str(error),
        )

    log.debug("%s on %s: %s", check_id, profile.name, result.verdict)
    return result
