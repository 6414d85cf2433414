from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from powermatch.graphs.graph import GraphKind, SimpleGraph
from powermatch.utils.exceptions import ContractError


@dataclass(frozen=True)
class Matching:
    """
    A matching stored as a mate array: `mate[v]` is the partner of v or None.

    `kind` names the graph the matching was built on; it travels into the
    exported document and is not used for validation.
    """

    mate: tuple[int | None, ...]
    kind: GraphKind = GraphKind.GENERIC

    @classmethod
    def empty(cls, n: int, kind: GraphKind = GraphKind.GENERIC) -> Matching:
        return cls(mate=(None,) * n, kind=kind)

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        kind: GraphKind = GraphKind.GENERIC,
    ) -> Matching:
        mate: list[int | None] = [None] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ContractError(f"Pair ({u}, {v}) is not an edge on 0..{n - 1}")
            if mate[u] is not None or mate[v] is not None:
                raise ContractError(f"Pair ({u}, {v}) shares a vertex with another pair")
            mate[u], mate[v] = v, u
        return cls(mate=tuple(mate), kind=kind)

    @classmethod
    def from_mate(cls, mate: Sequence[int | None], kind: GraphKind = GraphKind.GENERIC) -> Matching:
        return cls(mate=tuple(mate), kind=kind)

    @property
    def n(self) -> int:
        return len(self.mate)

    @property
    def size(self) -> int:
        return sum(1 for v, u in enumerate(self.mate) if u is not None and v < u)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched pairs (u, v) with u < v, sorted."""

        return [(v, u) for v, u in enumerate(self.mate) if u is not None and v < u]

    def unmatched(self) -> list[int]:
        return [v for v, u in enumerate(self.mate) if u is None]

    def __len__(self) -> int:
        return self.size


def verify_matching(graph: SimpleGraph, m: Matching) -> bool:
    """
    True when the mate array is a symmetric partial involution without fixed
    points and every matched pair is an edge of the graph.
    """

    if m.n != graph.n:
        return False

    for v, u in enumerate(m.mate):
        if u is None:
            continue
        if not 0 <= u < graph.n or u == v:
            return False
        if m.mate[u] != v:
            return False
        if not graph.has_edge(v, u):
            return False
    return True


def deficiency(m: Matching) -> int:
    """Number of vertices the matching leaves uncovered."""

    return m.n - 2 * m.size


def is_perfect(m: Matching) -> bool:
    return deficiency(m) == 0


def require_valid(graph: SimpleGraph, m: Matching, what: str = "Matching") -> None:
    if not verify_matching(graph, m):
        raise ContractError(f"{what} is not a valid matching of the {graph.kind} graph")
