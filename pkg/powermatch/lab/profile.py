from __future__ import annotations

from functools import cached_property

from powermatch.graphs.builders import commuting_graph, enhanced_power_graph, power_graph
from powermatch.graphs.graph import SimpleGraph
from powermatch.groups.predicates import (
    involutions,
    is_elementary_abelian_2,
    is_nilpotent,
    odd_order_elements,
    odd_part_of_centralizer,
)
from powermatch.groups.table import ElementSet, GroupTable
from powermatch.matching.blossom import max_matching
from powermatch.matching.matching import Matching, deficiency

from .catalog import CatalogEntry


class GroupProfile:
    """Graphs, exact matchings and element counts of one catalog entry, computed on demand."""

    def __init__(self, entry: CatalogEntry) -> None:
        self.entry = entry

    @property
    def name(self) -> str:
        return self.entry.name

    @property
    def group(self) -> GroupTable:
        return self.entry.group

    @property
    def order(self) -> int:
        return self.entry.group.order

    @cached_property
    def power(self) -> SimpleGraph:
        return power_graph(self.group)

    @cached_property
    def enhanced(self) -> SimpleGraph:
        return enhanced_power_graph(self.group)

    @cached_property
    def commuting(self) -> SimpleGraph:
        return commuting_graph(self.group)

    @cached_property
    def power_matching(self) -> Matching:
        return max_matching(self.power)

    @cached_property
    def enhanced_matching(self) -> Matching:
        return max_matching(self.enhanced)

    @cached_property
    def commuting_matching(self) -> Matching:
        return max_matching(self.commuting)

    @property
    def mu(self) -> int:
        """Matching number of the power graph."""

        return self.power_matching.size

    @property
    def deficiency(self) -> int:
        return deficiency(self.power_matching)

    @cached_property
    def involutions(self) -> ElementSet:
        return involutions(self.group)

    @cached_property
    def odd_elements(self) -> ElementSet:
        return odd_order_elements(self.group)

    @cached_property
    def centralizing_odd(self) -> ElementSet:
        return odd_part_of_centralizer(self.group)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.group)

    @cached_property
    def elementary_abelian_2(self) -> bool:
        return is_elementary_abelian_2(self.group)
