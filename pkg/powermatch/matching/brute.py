from __future__ import annotations

from functools import cache

from powermatch.config import config
from powermatch.graphs.graph import SimpleGraph
from powermatch.utils.bitset import full_mask, iter_bits, lowest_bit
from powermatch.utils.exceptions import GuardExceededError

from .matching import Matching


def _check_guard(graph: SimpleGraph, max_vertices: int | None, max_edges: int | None) -> None:
    max_vertices = config.BRUTE_FORCE_MAX_VERTICES if max_vertices is None else max_vertices
    max_edges = config.BRUTE_FORCE_MAX_EDGES if max_edges is None else max_edges
    if graph.n <= max_vertices or graph.edge_count <= max_edges:
        return
    raise GuardExceededError(
        f"Brute force is limited to {max_vertices} vertices or {max_edges} edges, "
        f"got {graph.n} vertices and {graph.edge_count} edges"
    )


def brute_force_matching(
    graph: SimpleGraph,
    *,
    max_vertices: int | None = None,
    max_edges: int | None = None,
) -> Matching:
    """
    Exhaustive maximum matching: the lowest live vertex is either left
    exposed or matched to each live neighbour in turn. Results are memoised
    on the set of live vertices.
    """

    _check_guard(graph, max_vertices, max_edges)
    adj = graph.adj

    @cache
    def best(alive: int) -> tuple[tuple[int, int], ...]:
        # isolated vertices never change the answer
        while alive and not adj[lowest_bit(alive)] & alive:
            alive &= alive - 1
        if not alive:
            return ()

        v = lowest_bit(alive)
        rest = alive & ~(1 << v)
        chosen = best(rest)
        ceiling = alive.bit_count() // 2
        for u in iter_bits(adj[v] & rest):
            if len(chosen) == ceiling:
                break
            candidate = ((v, u),) + best(rest & ~(1 << u))
            if len(candidate) > len(chosen):
                chosen = candidate
        return chosen

    pairs = best(full_mask(graph.n))
    best.cache_clear()
    return Matching.from_pairs(graph.n, pairs, kind=graph.kind)


def brute_force_matching_number(
    graph: SimpleGraph,
    *,
    max_vertices: int | None = None,
    max_edges: int | None = None,
) -> int:
    return brute_force_matching(graph, max_vertices=max_vertices, max_edges=max_edges).size
