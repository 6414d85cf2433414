from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

import numpy as np

from powermatch.number_theory import is_prime_power, prime_divisors
from powermatch.utils.bitset import mask_from_row

from .table import ElementSet, GkGraph, GroupTable


def involutions(g: GroupTable) -> ElementSet:
    """I(G): elements of order exactly 2."""

    return ElementSet.from_indices(x for x in range(g.order) if g.elt_order[x] == 2)


def odd_order_elements(g: GroupTable) -> ElementSet:
    """O(G): elements of odd order, the identity included."""

    return ElementSet.from_indices(x for x in range(g.order) if g.elt_order[x] % 2)


def even_order_elements(g: GroupTable) -> ElementSet:
    return ElementSet.from_indices(x for x in range(g.order) if g.elt_order[x] % 2 == 0)


def square_roots_of_identity(g: GroupTable) -> ElementSet:
    """T: the identity together with the involutions."""

    return involutions(g) | ElementSet(1 << g.identity)


def commutes(g: GroupTable, x: int, y: int) -> bool:
    return g.rows[x][y] == g.rows[y][x]


def centralizer_of_set(g: GroupTable, s: ElementSet | Iterable[int]) -> ElementSet:
    """C_G(S): elements commuting with every element of s; all of G for empty s."""

    members = list(s)
    if not members:
        return g.all_elements

    cols = g.mul[:, members]  # x s
    rows = g.mul[members, :].T  # s x
    return ElementSet(mask_from_row((cols == rows).all(axis=1)))


def is_abelian(g: GroupTable) -> bool:
    return bool(np.array_equal(g.mul, g.mul.T))


def is_cyclic(g: GroupTable) -> bool:
    return g.order in g.elt_order


def order_spectrum(g: GroupTable) -> tuple[int, ...]:
    """Sorted multiset of element orders."""

    return tuple(sorted(g.elt_order))


def subgroup_closure(g: GroupTable, seed: ElementSet | Iterable[int]) -> ElementSet:
    """Smallest subgroup containing seed; the empty seed gives {1}."""

    gens = list(seed)
    rows = g.rows
    mask = 1 << g.identity
    found = [g.identity]

    # in a finite group, right multiplication by the generators reaches every word
    for x in found:
        for s in gens:
            y = rows[x][s]
            if not mask >> y & 1:
                mask |= 1 << y
                found.append(y)

    return ElementSet(mask)


def is_cyclic_subset(g: GroupTable, members: ElementSet) -> bool:
    """True when the subgroup given by `members` is generated by one of its elements."""

    size = members.cardinality
    return any(g.elt_order[x] == size for x in members)


def commutator_subgroup_with(g: GroupTable, h: ElementSet) -> ElementSet:
    """[H, G]: subgroup generated by x^-1 y^-1 x y for x in H, y in G."""

    xs = np.array(h.indices(), dtype=np.int64)
    left = g.mul[g.inv[xs]][:, g.inv]  # x^-1 y^-1
    right = g.mul[xs, :]  # x y
    values = np.unique(g.mul[left, right])
    return subgroup_closure(g, (int(v) for v in values))


def lower_central_series(g: GroupTable) -> list[ElementSet]:
    """G = g_1 >= g_2 >= ... until the series stabilizes."""

    series = [g.all_elements]
    while True:
        following = commutator_subgroup_with(g, series[-1])
        if following == series[-1]:
            return series
        series.append(following)


def is_nilpotent(g: GroupTable) -> bool:
    return lower_central_series(g)[-1].cardinality == 1


def is_eppo(g: GroupTable) -> bool:
    """Every element has prime power order (order 1 counts)."""

    return all(is_prime_power(k) for k in set(g.elt_order))


def gk_graph(g: GroupTable) -> GkGraph:
    edges = set()
    for k in set(g.elt_order):
        edges.update(combinations(prime_divisors(k), 2))

    return GkGraph(primes=prime_divisors(g.order), edges=frozenset(edges))


def is_elementary_abelian_2(g: GroupTable) -> bool:
    """Non-trivial group whose non-identity elements are all involutions."""

    return g.order > 1 and all(k <= 2 for k in g.elt_order)


def is_two_group(g: GroupTable) -> bool:
    return g.order > 1 and g.order & (g.order - 1) == 0


def odd_part_of_centralizer(g: GroupTable) -> ElementSet:
    """O(C_G(S)) for S = I(G): odd-order elements commuting with every involution."""

    return centralizer_of_set(g, involutions(g)) & odd_order_elements(g)
