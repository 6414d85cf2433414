from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import StrEnum

from powermatch.groups.table import ElementSet
from powermatch.utils.bitset import full_mask, iter_bits, lowest_bit
from powermatch.utils.exceptions import ContractError


class GraphKind(StrEnum):
    POWER = "power"
    ENHANCED = "enhanced"
    COMMUTING = "commuting"
    GENERIC = "generic"


@dataclass(frozen=True)
class SimpleGraph:
    """
    Undirected simple graph on vertices 0..n-1.

    `adj[v]` is the bit mask of the neighbours of v. The kind tag is only
    carried for reporting; no algorithm looks at it.
    """

    n: int
    adj: tuple[int, ...]
    kind: GraphKind = GraphKind.GENERIC

    @classmethod
    def empty(cls, n: int, kind: GraphKind = GraphKind.GENERIC) -> SimpleGraph:
        return cls(n=n, adj=(0,) * n, kind=kind)

    @classmethod
    def complete(cls, n: int, kind: GraphKind = GraphKind.GENERIC) -> SimpleGraph:
        everything = full_mask(n)
        return cls(n=n, adj=tuple(everything & ~(1 << v) for v in range(n)), kind=kind)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        kind: GraphKind = GraphKind.GENERIC,
    ) -> SimpleGraph:
        """Builds a graph from an edge list; loops and out-of-range ends are rejected."""

        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"Edge ({u}, {v}) has an end outside 0..{n - 1}")
            if u == v:
                raise ContractError(f"Self-loop on vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n=n, adj=tuple(adj), kind=kind)

    def validate(self) -> None:
        """Raises ContractError unless adjacency is symmetric and loop-free."""

        if len(self.adj) != self.n:
            raise ContractError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        outside = ~full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row & outside:
                raise ContractError(f"Vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ContractError(f"Self-loop on vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ContractError(f"Edge ({v}, {u}) is not symmetric")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> ElementSet:
        return ElementSet(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""

        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def is_connected(self) -> bool:
        """The empty graph counts as connected."""

        if self.n == 0:
            return True
        return reachable(self.adj, 0, full_mask(self.n)) == full_mask(self.n)

    def is_subgraph_of(self, other: SimpleGraph) -> bool:
        """Edge-set inclusion on the same vertex set."""

        if self.n != other.n:
            return False
        return all(mine & ~theirs == 0 for mine, theirs in zip(self.adj, other.adj))

    def same_edges(self, other: SimpleGraph) -> bool:
        return self.n == other.n and self.adj == other.adj


@dataclass(frozen=True)
class ComponentPartition:
    """
    Connected components restricted to a vertex mask.

    `component_of[v]` is the component id of v, or -1 when v lies outside the
    mask. Components are numbered by their lowest vertex.
    """

    component_of: tuple[int, ...]
    components: tuple[ElementSet, ...]

    def __len__(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.cardinality for c in self.components)


def reachable(adj: tuple[int, ...] | list[int], start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        v = lowest_bit(frontier)
        frontier &= frontier - 1
        fresh = adj[v] & within & ~seen
        seen |= fresh
        frontier |= fresh
    return seen
