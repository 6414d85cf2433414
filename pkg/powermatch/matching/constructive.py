"""
Constructive matchings on group graphs.

These procedures build or repair matchings by explicit rewiring rather than
by search: pairing elements with their inverses, pushing every exposed
vertex into the set of square roots of the identity, pairing surplus
involutions through odd-order centralising elements, and turning a matching
of the enhanced power graph into one of the power graph of the same size.
Each result is checked against its graph before it is returned.
"""

from __future__ import annotations

from math import lcm

from powermatch.graphs.builders import enhanced_power_graph, power_graph
from powermatch.graphs.graph import GraphKind, SimpleGraph
from powermatch.groups.predicates import (
    involutions,
    odd_part_of_centralizer,
    square_roots_of_identity,
    subgroup_closure,
)
from powermatch.groups.table import GroupTable
from powermatch.utils.exceptions import ContractError, DomainError, InvariantViolationError
from powermatch.utils.logger import get_logger

from .matching import Matching, require_valid, verify_matching

log = get_logger()


def inverse_pair_matching(g: GroupTable) -> Matching:
    """Matches every element of order > 2 with its inverse."""

    mate = [int(g.inv[x]) if g.elt_order[x] > 2 else None for x in range(g.order)]
    return Matching(mate=tuple(mate), kind=GraphKind.POWER)


def has_inverse_edges(g: GroupTable, graph: SimpleGraph) -> bool:
    """True when x ~ x^-1 for every element of order > 2."""

    if graph.n != g.order:
        return False
    return all(graph.has_edge(x, int(g.inv[x])) for x in range(g.order) if g.elt_order[x] > 2)


def normalize_matching(g: GroupTable, graph: SimpleGraph, m: Matching) -> Matching:
    """
    Rewires m so that every exposed vertex lies in T = {x : x^2 = 1}, then
    matches the identity to an exposed involution if both are exposed.

    An exposed g0 outside T starts a chain g0, h0 = g0^-1, g1 = mate(h0),
    h1 = g1^-1, ... that stops once some g_k lies in T or h_k is exposed.
    The pairs {h_i, g_(i+1)} are replaced by the inverse pairs {g_i, h_i}.
    """

    if graph.n != g.order:
        raise ContractError(f"Graph has {graph.n} vertices but the group has order {g.order}")
    require_valid(graph, m)
    if not has_inverse_edges(g, graph):
        raise ContractError("Graph does not join every element of order > 2 to its inverse")

    square_roots = square_roots_of_identity(g)
    mate = list(m.mate)
    inv = [int(x) for x in g.inv]

    while True:
        g0 = next(
            (x for x in range(g.order) if mate[x] is None and x not in square_roots),
            None,
        )
        if g0 is None:
            break

        chain = [g0]
        visited = {g0}
        while True:
            h = inv[chain[-1]]
            if h in visited:
                raise InvariantViolationError(f"Inverse chain from {g0} revisits {h}")
            visited.add(h)
            if mate[h] is None:
                closes = True
                break
            following = mate[h]
            if following in visited:
                raise InvariantViolationError(f"Inverse chain from {g0} revisits {following}")
            visited.add(following)
            chain.append(following)
            if following in square_roots:
                closes = False
                break

        # closes: last g has an exposed inverse, so the rewire gains one pair
        # otherwise the last g lies in T and becomes the exposed vertex
        heads = chain if closes else chain[:-1]
        if not closes:
            mate[chain[-1]] = None
        for x in heads:
            h = inv[x]
            mate[x], mate[h] = h, x

        log.debug("Rewired inverse chain of length %d from %d", len(chain), g0)

    identity = g.identity
    if mate[identity] is None:
        exposed = next(
            (t for t in involutions(g) if mate[t] is None and graph.has_edge(identity, t)),
            None,
        )
        if exposed is not None:
            mate[identity], mate[exposed] = exposed, identity

    result = Matching(mate=tuple(mate), kind=graph.kind)
    if not verify_matching(graph, result) or result.size < m.size:
        raise InvariantViolationError("Normalised matching is invalid or smaller than its input")
    return result


def augment_involutions(g: GroupTable) -> Matching:
    """
    Power-graph matching that leaves at most max(0, |I| - |O(C_G(I))|)
    vertices exposed, I being the involutions of an even-order group.

    Starts from the inverse pairs plus the edge from the identity to the
    first involution; each further pair of involutions u, v is absorbed by
    an inverse pair {x, x^-1} of odd-order elements centralising every
    involution.
    """

    if g.order % 2:
        raise DomainError(f"Involution augmentation needs an even-order group, got order {g.order}")

    power = power_graph(g)
    invols = involutions(g).indices()
    centralising = odd_part_of_centralizer(g)

    if len(invols) % 2 == 0 or centralising.cardinality % 2 == 0:
        raise InvariantViolationError(
            f"Expected odd counts of involutions and centralising odd-order elements, "
            f"got {len(invols)} and {centralising.cardinality}"
        )

    mate = list(inverse_pair_matching(g).mate)
    first = invols[0]
    mate[g.identity], mate[first] = first, g.identity

    surplus = invols[1:]
    involution_pairs = list(zip(surplus[0::2], surplus[1::2]))
    odd_pairs = [
        (x, int(g.inv[x]))
        for x in centralising
        if x != g.identity and x < g.inv[x]
    ]
    steps = min(len(involution_pairs), len(odd_pairs))

    rows = g.rows
    for (u, v), (x, xi) in zip(involution_pairs[:steps], odd_pairs[:steps]):
        ux, uxi, vx, vxi = rows[u][x], rows[u][xi], rows[v][x], rows[v][xi]

        for a, b in ((x, xi), (ux, uxi), (vx, vxi)):
            if mate[a] != b:
                raise InvariantViolationError(f"Expected {a} and {b} to be an inverse pair")
            mate[a] = mate[b] = None

        for a, b in ((u, ux), (v, vxi), (uxi, xi), (vx, x)):
            if not power.has_edge(a, b):
                raise InvariantViolationError(f"Rewired pair ({a}, {b}) is not a power-graph edge")
            if mate[a] is not None or mate[b] is not None:
                raise InvariantViolationError(f"Rewired pair ({a}, {b}) reuses a matched vertex")
            mate[a], mate[b] = b, a

    result = Matching(mate=tuple(mate), kind=GraphKind.POWER)
    if not verify_matching(power, result):
        raise InvariantViolationError("Involution augmentation produced an invalid matching")

    log.debug(
        "Augmented %d involution pairs; %d vertices left exposed",
        steps,
        g.order - 2 * result.size,
    )
    return result


def _non_power_pairs(power: SimpleGraph, mate: list[int | None]) -> list[tuple[int, int]]:
    return [
        (v, u)
        for v, u in enumerate(mate)
        if u is not None and v < u and not power.has_edge(v, u)
    ]


def rematch_enhanced_to_power(g: GroupTable, m: Matching) -> Matching:
    """
    Converts a matching of the enhanced power graph into a power-graph
    matching of the same size.

    Each pass takes the non-power pair {g, h} of largest lcm(o(g), o(h)),
    ties going to the smallest pair. With C = <g, h> cyclic and X its
    generators, the pair is rewired through some x in X: to an exposed x
    directly, through x's partner y when x is a power of y, and otherwise
    through a power-graph edge among the partners of X.
    """

    power = power_graph(g)
    enhanced = enhanced_power_graph(g)
    require_valid(enhanced, m, "Input matching")

    orders = g.elt_order
    mate = list(m.mate)
    budget = len(_non_power_pairs(power, mate))

    for _ in range(budget + 1):
        pending = _non_power_pairs(power, mate)
        if not pending:
            break

        a, b = min(pending, key=lambda pair: (-lcm(orders[pair[0]], orders[pair[1]]), pair))
        lo, hi = sorted((a, b), key=lambda x: (orders[x], x))
        closure = subgroup_closure(g, (lo, hi))
        generators = [x for x in closure if orders[x] == closure.cardinality]

        exposed = next((x for x in generators if mate[x] is None), None)
        if exposed is not None:
            mate[hi] = None
            mate[lo], mate[exposed] = exposed, lo
            continue

        partners = [mate[x] for x in generators]
        swapped = False
        for x, y in zip(generators, partners):
            if g.cyclic_subgroup(y).mask & closure.mask == closure.mask:
                # <y> contains C, so h is a power of y
                mate[lo], mate[x] = x, lo
                mate[hi], mate[y] = y, hi
                swapped = True
                break
            if y not in closure:
                raise InvariantViolationError(
                    f"Pair ({x}, {y}) beats the lcm of ({lo}, {hi}) while rewiring"
                )
        if swapped:
            continue

        pick = next(
            (
                (i, j)
                for i in range(len(partners))
                for j in range(i + 1, len(partners))
                if power.has_edge(partners[i], partners[j])
            ),
            None,
        )
        if pick is None:
            raise InvariantViolationError(
                f"No power-graph edge among the partners of the generators of <{lo}, {hi}>"
            )

        i, j = pick
        xi, xj, yi, yj = generators[i], generators[j], partners[i], partners[j]
        mate[lo], mate[xi] = xi, lo
        mate[hi], mate[xj] = xj, hi
        mate[yi], mate[yj] = yj, yi
    else:
        raise InvariantViolationError(f"Rematching did not finish within {budget} passes")

    result = Matching(mate=tuple(mate), kind=GraphKind.POWER)
    if not verify_matching(power, result) or result.size != m.size:
        raise InvariantViolationError("Rematching lost its size or left a non-power pair")
    return result
