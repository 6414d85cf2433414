from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from powermatch.utils.bitset import iter_bits, mask_of
from powermatch.utils.exceptions import GroupValidationError
from powermatch.utils.logger import get_logger

log = get_logger()


@dataclass(frozen=True)
class ElementSet:
    """A set of group elements stored as a bit mask over element indices."""

    mask: int = 0

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> ElementSet:
        return cls(mask_of(indices))

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        """Element indices in ascending order."""

        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask | other.mask)

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"ElementSet({list(self.indices())})"


@dataclass(frozen=True)
class GkGraph:
    """Gruenberg-Kegel (prime) graph: prime divisors of |G| joined when G has an element of order pq."""

    primes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def is_null(self) -> bool:
        return not self.edges


class GroupTable:
    """
    A finite group stored as a dense Cayley table over indices 0..n-1.

    Row g, column h of `mul` holds the index of gh. Element orders,
    inverses and the membership masks of the cyclic subgroups <g> are
    computed once on construction; the instance is immutable afterwards.
    """

    def __init__(
        self,
        mul: Sequence[Sequence[int]] | np.ndarray,
        labels: Sequence[str] | None = None,
        *,
        validate: bool = True,
    ) -> None:
        table = np.array(mul, dtype=np.int64)

        if validate:
            identity = _validate_table(table)
        else:
            identity = _find_identity(table)
            if identity is None:
                raise GroupValidationError("Cayley table has no identity element")

        n = table.shape[0]
        if labels is not None and len(labels) != n:
            raise GroupValidationError(
                f"Expected {n} labels, got {len(labels)}"
            )

        table.flags.writeable = False
        self.mul = table
        self.order = n
        self.identity = identity
        self.labels = tuple(labels) if labels is not None else None

        inverse = np.argmax(table == identity, axis=1)
        inverse.flags.writeable = False
        self.inv = inverse

        self._rows = table.tolist()
        self.cyc_masks, self.elt_order = self._cyclic_data()

    def _cyclic_data(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        rows = self._rows
        identity = self.identity
        masks = []
        orders = []

        for g in range(self.order):
            mask = 1 << identity
            power = g
            k = 1
            while power != identity:
                mask |= 1 << power
                power = rows[power][g]
                k += 1
                if k > self.order:
                    raise GroupValidationError(
                        f"Element {g} never reaches the identity"
                    )
            masks.append(mask)
            orders.append(k)

        return tuple(masks), tuple(orders)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"

    @property
    def rows(self) -> list[list[int]]:
        """Cayley table as nested lists for scalar lookups."""

        return self._rows

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(x)
        return self.labels[x]

    def cyclic_subgroup(self, x: int) -> ElementSet:
        """Membership set of <x>."""

        return ElementSet(self.cyc_masks[x])

    @cached_property
    def all_elements(self) -> ElementSet:
        return ElementSet((1 << self.order) - 1)


def _find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    arange = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], arange) and np.array_equal(table[:, e], arange):
            return e
    return None


def _validate_table(table: np.ndarray) -> int:
    """Checks the group axioms and returns the identity index."""

    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise GroupValidationError(
            f"Cayley table must be a non-empty square array, got shape {table.shape}"
        )

    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        row, col = np.argwhere((table < 0) | (table >= n))[0]
        raise GroupValidationError(
            f"Entry mul[{row}][{col}] = {table[row, col]} is out of range 0..{n - 1}"
        )

    identity = _find_identity(table)
    if identity is None:
        raise GroupValidationError("Cayley table has no identity element")

    hits = (table == identity) & (table.T == identity)
    missing = np.flatnonzero(~hits.any(axis=1))
    if missing.size:
        raise GroupValidationError(f"Element {missing[0]} has no inverse")

    for a in range(n):
        left = table[table[a]]  # [b, c] -> (ab)c
        right = table[a][table]  # [b, c] -> a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            raise GroupValidationError(
                f"Associativity fails for ({a}, {b}, {c})"
            )

    log.debug("Validated Cayley table of order %d", n)
    return identity
