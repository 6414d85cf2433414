from __future__ import annotations

from typing import Literal

import numpy as np

from powermatch.groups.predicates import is_cyclic_subset, subgroup_closure
from powermatch.groups.table import ElementSet, GroupTable
from powermatch.utils.bitset import iter_bits, lowest_bit, mask_from_row
from powermatch.utils.exceptions import DomainError
from powermatch.utils.logger import get_logger

from .graph import ComponentPartition, GraphKind, SimpleGraph, reachable

log = get_logger()

EnhancedStrategy = Literal["cover", "closure"]


def power_graph(g: GroupTable) -> SimpleGraph:
    """x ~ y when one of them is a power of the other."""

    adj = [0] * g.order
    for y, cyc in enumerate(g.cyc_masks):
        adj[y] |= cyc
        for x in iter_bits(cyc):
            adj[x] |= 1 << y

    adj = tuple(row & ~(1 << v) for v, row in enumerate(adj))
    log.debug("Power graph on %d vertices", g.order)
    return SimpleGraph(n=g.order, adj=adj, kind=GraphKind.POWER)


def enhanced_power_graph(g: GroupTable, strategy: EnhancedStrategy = "cover") -> SimpleGraph:
    """
    x ~ y when <x, y> is cyclic.

    The "cover" strategy joins all pairs inside each cyclic
    subgroup <z>; "closure" tests every pair by closing {x, y} and is kept
    as a cross-check.
    """

    if strategy == "cover":
        adj = _enhanced_by_cover(g)
    elif strategy == "closure":
        adj = _enhanced_by_closure(g)
    else:
        raise DomainError(f"Unknown enhanced power graph strategy {strategy!r}")

    log.debug("Enhanced power graph on %d vertices (%s)", g.order, strategy)
    return SimpleGraph(n=g.order, adj=adj, kind=GraphKind.ENHANCED)


def _enhanced_by_cover(g: GroupTable) -> tuple[int, ...]:
    # <x, y> is cyclic iff both lie in one cyclic subgroup <z>
    adj = [0] * g.order
    for cyc in set(g.cyc_masks):
        for x in iter_bits(cyc):
            adj[x] |= cyc
    return tuple(row & ~(1 << v) for v, row in enumerate(adj))


def _enhanced_by_closure(g: GroupTable) -> tuple[int, ...]:
    memo: dict[tuple[int, int], bool] = {}
    adj = [0] * g.order

    for x in range(g.order):
        for y in range(x + 1, g.order):
            key = tuple(sorted((g.cyc_masks[x], g.cyc_masks[y])))
            cyclic = memo.get(key)
            if cyclic is None:
                cyclic = is_cyclic_subset(g, subgroup_closure(g, (x, y)))
                memo[key] = cyclic
            if cyclic:
                adj[x] |= 1 << y
                adj[y] |= 1 << x

    log.debug("Closure memo holds %d subgroup pairs", len(memo))
    return tuple(adj)


def commuting_graph(g: GroupTable) -> SimpleGraph:
    together = g.mul == g.mul.T
    np.fill_diagonal(together, False)
    adj = tuple(mask_from_row(row) for row in together)
    return SimpleGraph(n=g.order, adj=adj, kind=GraphKind.COMMUTING)


def induced_subgraph(
    graph: SimpleGraph, mask: ElementSet
) -> tuple[SimpleGraph, tuple[int, ...]]:
    """
    Restricts the graph to the vertices in mask and renumbers them.

    Returns the subgraph and the map from new indices to old ones; vertex i
    of the subgraph is `vertices[i]` of the original.
    """

    if mask.mask >> graph.n:
        raise DomainError(f"Vertex mask reaches beyond the {graph.n} vertices of the graph")

    vertices = mask.indices()
    position = {old: new for new, old in enumerate(vertices)}
    adj = []
    for old in vertices:
        row = 0
        for neighbour in iter_bits(graph.adj[old] & mask.mask):
            row |= 1 << position[neighbour]
        adj.append(row)

    return SimpleGraph(n=len(vertices), adj=tuple(adj), kind=graph.kind), vertices


def connected_components(
    graph: SimpleGraph, mask: ElementSet | None = None
) -> ComponentPartition:
    """Components of the subgraph induced on mask (all vertices by default)."""

    within = (1 << graph.n) - 1 if mask is None else mask.mask
    if within >> graph.n:
        raise DomainError(f"Vertex mask reaches beyond the {graph.n} vertices of the graph")

    component_of = [-1] * graph.n
    components = []
    rest = within
    while rest:
        start = lowest_bit(rest)
        reached = reachable(graph.adj, start, within)
        for v in iter_bits(reached):
            component_of[v] = len(components)
        components.append(ElementSet(reached))
        rest &= ~reached

    return ComponentPartition(component_of=tuple(component_of), components=tuple(components))


def c_t_class(g: GroupTable, t: int) -> ElementSet:
    """C_t: every x whose cyclic subgroup contains the involution t."""

    if not 0 <= t < g.order or g.elt_order[t] != 2:
        raise DomainError(f"Element {t} is not an involution")

    return ElementSet.from_indices(x for x, cyc in enumerate(g.cyc_masks) if cyc >> t & 1)
