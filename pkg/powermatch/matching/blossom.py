"""
Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

The search is deterministic. Vertices and neighbour lists are scanned from
the highest index down: a greedy pass seeds the matching, then every
still-exposed vertex is used as a root. Low indices are the last to be
seeded, which leaves the identity of an odd cyclic group exposed.
Breadth-first search grows an alternating forest, contracting odd cycles
by relabelling their base.
"""

from __future__ import annotations

from collections import deque

from powermatch.graphs.graph import SimpleGraph
from powermatch.utils.bitset import iter_bits
from powermatch.utils.logger import get_logger

from .matching import Matching

log = get_logger()

_FREE = -1


class _BlossomSearch:
    def __init__(self, graph: SimpleGraph) -> None:
        self.n = graph.n
        self.nbrs = [tuple(reversed(list(iter_bits(row)))) for row in graph.adj]
        self.match = [_FREE] * self.n
        self.parent = [_FREE] * self.n
        self.base = list(range(self.n))
        self.used = [False] * self.n
        self.in_blossom = [False] * self.n

    def seed_greedily(self) -> None:
        match = self.match
        for v in reversed(range(self.n)):
            if match[v] != _FREE:
                continue
            for u in self.nbrs[v]:
                if match[u] == _FREE:
                    match[u], match[v] = v, u
                    break

    def lowest_common_base(self, a: int, b: int) -> int:
        match, parent, base = self.match, self.parent, self.base
        on_path = [False] * self.n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == _FREE:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(self, v: int, stem: int, child: int) -> None:
        match, parent, base = self.match, self.parent, self.base
        while base[v] != stem:
            self.in_blossom[base[v]] = True
            self.in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(self, root: int) -> int:
        """Returns the exposed end of an augmenting path from root, or -1."""

        n = self.n
        match, parent, base = self.match, self.parent, self.base
        self.used = used = [False] * n
        self.parent = parent = [_FREE] * n
        self.base = base = list(range(n))

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != _FREE and parent[match[to]] != _FREE):
                    stem = self.lowest_common_base(v, to)
                    self.in_blossom = [False] * n
                    self.mark_path(v, stem, to)
                    self.mark_path(to, stem, v)
                    for i in range(n):
                        if self.in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == _FREE:
                    parent[to] = v
                    if match[to] == _FREE:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return _FREE

    def augment(self, end: int) -> None:
        match, parent = self.match, self.parent
        v = end
        while v != _FREE:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv

    def run(self) -> list[int]:
        self.seed_greedily()
        for root in reversed(range(self.n)):
            if self.match[root] != _FREE:
                continue
            end = self.find_augmenting_path(root)
            if end != _FREE:
                self.augment(end)
        return self.match


def max_matching(graph: SimpleGraph) -> Matching:
    """Maximum-cardinality matching; the mate array is reproducible run to run."""

    match = _BlossomSearch(graph).run()
    result = Matching(
        mate=tuple(None if u == _FREE else u for u in match),
        kind=graph.kind,
    )
    log.debug("Blossom matching of size %d on %d vertices", result.size, graph.n)
    return result
