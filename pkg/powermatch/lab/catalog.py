from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

from powermatch.config import config
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
from powermatch.groups.predicates import (
    is_cyclic,
    is_elementary_abelian_2,
    is_nilpotent,
    is_two_group,
)
from powermatch.groups.table import GroupTable
from powermatch.utils.exceptions import DomainError
from powermatch.utils.logger import get_logger

log = get_logger()


class Tag(StrEnum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"
    ELEMENTARY_ABELIAN_2 = "elementary-abelian-2"
    NILPOTENT = "nilpotent"
    ODD_ORDER = "odd-order"
    TWO_GROUP = "two-group"
    PRODUCT = "product"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: GroupTable = field(repr=False)
    tags: frozenset[Tag]

    @property
    def order(self) -> int:
        return self.group.order


def structural_tags(g: GroupTable) -> set[Tag]:
    """Tags that follow from the group's structure rather than its construction."""

    tags = set()
    if is_cyclic(g):
        tags.add(Tag.CYCLIC)
    if is_elementary_abelian_2(g):
        tags.add(Tag.ELEMENTARY_ABELIAN_2)
    if is_nilpotent(g):
        tags.add(Tag.NILPOTENT)
    if g.order % 2:
        tags.add(Tag.ODD_ORDER)
    if is_two_group(g):
        tags.add(Tag.TWO_GROUP)
    return tags


def make_entry(name: str, group: GroupTable, *kinds: Tag) -> CatalogEntry:
    return CatalogEntry(name=name, group=group, tags=frozenset(structural_tags(group) | set(kinds)))


def _alternating_4() -> GroupTable:
    return from_permutation_generators([parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)])


_DICYCLIC_NAMES = {2: "Q8", 3: "Dic3", 4: "Q16", 5: "Dic5", 6: "Dic6"}


def _recipes() -> list[tuple[str, int, Callable[[], GroupTable], tuple[Tag, ...]]]:
    """(name, order, factory, construction tags) in catalog order."""

    c = make_cyclic
    recipes = []
    recipes += [(f"C{n}", n, lambda n=n: c(n), ()) for n in range(1, 33)]
    recipes += [(f"D{n}", 2 * n, lambda n=n: make_dihedral(n), (Tag.DIHEDRAL,)) for n in range(3, 13)]
    recipes += [
        (name, 4 * m, lambda m=m: make_dicyclic(m), (Tag.DICYCLIC,))
        for m, name in _DICYCLIC_NAMES.items()
    ]
    recipes += [(f"C2^{k}", 2**k, lambda k=k: make_elementary_abelian_2(k), ()) for k in range(1, 6)]

    product = (Tag.PRODUCT,)
    recipes += [
        ("C2xC4", 8, lambda: direct_product(c(2), c(4)), product),
        ("C2xC8", 16, lambda: direct_product(c(2), c(8)), product),
        ("C4xC4", 16, lambda: direct_product(c(4), c(4)), product),
        ("C2xC2xC3", 12, lambda: direct_product(make_elementary_abelian_2(2), c(3)), product),
        ("Q8xC3", 24, lambda: direct_product(make_dicyclic(2), c(3)), product),
        ("S3", 6, lambda: make_symmetric(3), ()),
        ("S4", 24, lambda: make_symmetric(4), ()),
        ("A4", 12, _alternating_4, ()),
        ("S3xC5", 30, lambda: direct_product(make_symmetric(3), c(5)), product),
        ("S3xC7", 42, lambda: direct_product(make_symmetric(3), c(7)), product),
        ("C9xC2", 18, lambda: direct_product(c(9), c(2)), product),
        ("C3xC9", 27, lambda: direct_product(c(3), c(9)), product),
    ]
    return recipes


def default_catalog(cap: int | None = None) -> list[CatalogEntry]:
    """Deterministic list of small groups with order at most cap."""

    cap = config.CATALOG_CAP if cap is None else cap
    log.info("Build group catalog up to order %d", cap)

    catalog = [
        make_entry(name, factory(), *kinds)
        for name, order, factory, kinds in _recipes()
        if order <= cap
    ]
    log.debug("Catalog holds %d groups", len(catalog))
    return catalog


def catalog_entry(name: str) -> CatalogEntry:
    """Builds a single named catalog entry regardless of the catalog cap."""

    for recipe_name, _, factory, kinds in _recipes():
        if recipe_name == name:
            return make_entry(recipe_name, factory(), *kinds)
    raise DomainError(f"No catalog group named {name!r}")
