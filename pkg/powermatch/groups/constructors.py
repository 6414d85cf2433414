"""
Group constructors with canonical element orders.

Index conventions (identity is always index 0):

* cyclic C_n: index i is z^i.
* dihedral D_n: index i < n is r^i, index n + i is s r^i.
* dicyclic Dic_m: index f * 2m + i is a^i x^f with a of order 2m, x^2 = a^m.
* elementary abelian (C_2)^k: index i is the bit vector of i, product is XOR.
* symmetric S_n: permutations of 0..n-1 in lexicographic order.
* direct product A x B: index x * |B| + y is (x, y).
* permutation closure: breadth-first discovery order from the identity.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from itertools import permutations

import numpy as np

from powermatch.config import config
from powermatch.utils.exceptions import DomainError, GroupSizeError
from powermatch.utils.logger import get_logger

from .table import GroupTable

log = get_logger()

Permutation = tuple[int, ...]

# degree ** degree must fit in int64 for the vectorized composition lookup
_MAX_CODED_DEGREE = 15


def _check_cap(order: int, cap: int | None, what: str) -> None:
    cap = config.GROUP_ORDER_CAP if cap is None else cap
    if order > cap:
        raise GroupSizeError(f"{what} has order {order}, exceeding the cap {cap}")


def make_cyclic(n: int, *, cap: int | None = None) -> GroupTable:
    if n < 1:
        raise DomainError(f"Cyclic group needs n >= 1, got {n}")
    _check_cap(n, cap, f"C{n}")

    arange = np.arange(n)
    mul = np.add.outer(arange, arange) % n
    labels = ["1", "z"] + [f"z^{i}" for i in range(2, n)]
    return GroupTable(mul, labels[:n], validate=False)


def make_dihedral(n: int, *, cap: int | None = None) -> GroupTable:
    """Symmetry group of the regular n-gon, order 2n."""

    if n < 3:
        raise DomainError(f"Dihedral group needs n >= 3, got {n}")
    _check_cap(2 * n, cap, f"D{n}")

    index = np.arange(2 * n)
    flip, rot = np.divmod(index, n)
    # (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
    sign = np.where(flip == 1, -1, 1)
    new_flip = np.add.outer(flip, flip) % 2
    new_rot = (rot[:, None] * sign[None, :] + rot[None, :]) % n
    mul = new_flip * n + new_rot

    labels = [_rotation_label("r", i) for i in range(n)]
    labels += [f"s {_rotation_label('r', i)}" if i else "s" for i in range(n)]
    return GroupTable(mul, labels, validate=False)


def make_dicyclic(m: int, *, cap: int | None = None) -> GroupTable:
    """
    Dicyclic group of order 4m with a unique involution a^m; generalized
    quaternion when m is a power of 2.
    """

    if m < 2:
        raise DomainError(f"Dicyclic group needs m >= 2, got {m}")
    _check_cap(4 * m, cap, f"Dic{m}")

    half = 2 * m
    index = np.arange(2 * half)
    flip, power = np.divmod(index, half)
    # x a^j = a^-j x and x^2 = a^m
    sign = np.where(flip == 1, -1, 1)
    exponent = power[:, None] + sign[:, None] * power[None, :]
    carries = np.add.outer(flip, flip)
    exponent = exponent + np.where(carries == 2, m, 0)
    mul = (carries % 2) * half + exponent % half

    labels = [_rotation_label("a", i) for i in range(half)]
    labels += [f"{_rotation_label('a', i)} x" if i else "x" for i in range(half)]
    return GroupTable(mul, labels, validate=False)


def make_elementary_abelian_2(k: int, *, cap: int | None = None) -> GroupTable:
    if k < 1:
        raise DomainError(f"Elementary abelian 2-group needs k >= 1, got {k}")
    _check_cap(2**k, cap, f"C2^{k}")

    arange = np.arange(2**k)
    mul = np.bitwise_xor.outer(arange, arange)
    labels = [format(i, f"0{k}b") for i in range(2**k)]
    return GroupTable(mul, labels, validate=False)


def make_symmetric(n: int, *, cap: int | None = None) -> GroupTable:
    if not 1 <= n <= 8:
        raise DomainError(f"Symmetric group degree must be in 1..8, got {n}")
    order = 1
    for i in range(2, n + 1):
        order *= i
    _check_cap(order, cap, f"S{n}")

    perms = list(permutations(range(n)))
    return _permutation_group(perms)


def direct_product(a: GroupTable, b: GroupTable, *, cap: int | None = None) -> GroupTable:
    """Componentwise product; o((x, y)) = lcm(o(x), o(y))."""

    na, nb = a.order, b.order
    _check_cap(na * nb, cap, "Direct product")

    mul = a.mul[:, None, :, None] * nb + b.mul[None, :, None, :]
    mul = mul.reshape(na * nb, na * nb)

    labels = [f"({a.label(x)}, {b.label(y)})" for x in range(na) for y in range(nb)]
    group = GroupTable(mul, labels, validate=False)
    log.debug("Built direct product of orders %d and %d", na, nb)
    return group


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p q)(i) = p(q(i))."""

    return tuple(p[i] for i in q)


def from_permutation_generators(
    gens: Sequence[Sequence[int]], *, cap: int | None = None
) -> GroupTable:
    """
    Closes 0-based permutations (array form) under composition by breadth
    first search; the identity comes first, then elements in discovery order.
    """

    cap = config.GROUP_ORDER_CAP if cap is None else cap
    degree = max((len(g) for g in gens), default=0)

    padded = []
    for gen in gens:
        if sorted(gen) != list(range(len(gen))):
            raise DomainError(f"{tuple(gen)} is not a permutation of 0..{len(gen) - 1}")
        padded.append(tuple(gen) + tuple(range(len(gen), degree)))

    identity = tuple(range(degree))
    elements = [identity]
    seen = {identity: 0}
    head = 0
    while head < len(elements):
        current = elements[head]
        head += 1
        for gen in padded:
            product = compose(current, gen)
            if product in seen:
                continue
            if len(elements) >= cap:
                raise GroupSizeError(
                    f"Permutation closure exceeds the cap {cap}"
                )
            seen[product] = len(elements)
            elements.append(product)

    log.debug("Closed %d generators into a group of order %d", len(gens), len(elements))
    return _permutation_group(elements)


def _permutation_group(perms: list[Permutation]) -> GroupTable:
    """Cayley table of a closed list of permutations in the given order."""

    count = len(perms)
    degree = len(perms[0])
    if degree == 0:
        return GroupTable([[0]], ["()"], validate=False)

    mul = np.empty((count, count), dtype=np.int64)

    if degree > _MAX_CODED_DEGREE:
        index = {p: i for i, p in enumerate(perms)}
        for i, p in enumerate(perms):
            mul[i] = [index[compose(p, q)] for q in perms]
    else:
        table = np.array(perms, dtype=np.int64)
        weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        codes = table @ weights
        by_code = np.argsort(codes)
        sorted_codes = codes[by_code]
        for i in range(count):
            composed = table[i][table]  # row j holds perms[i] o perms[j]
            mul[i] = by_code[np.searchsorted(sorted_codes, composed @ weights)]

    labels = [format_cycles(p) for p in perms]
    return GroupTable(mul, labels, validate=False)


def format_cycles(perm: Permutation) -> str:
    """Cycle notation on points 1..n, fixed points omitted; identity is '()'."""

    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = perm[point]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """
    Parses cycle notation on points 1..n, e.g. '(1 2)(3 4)', into a 0-based
    array-form permutation.
    """

    if _CYCLE.sub("", text).strip():
        raise DomainError(f"Malformed cycle notation: {text!r}")

    cycles = []
    for body in _CYCLE.findall(text):
        points = body.replace(",", " ").split()
        try:
            cycles.append([int(p) for p in points])
        except ValueError as error:
            raise DomainError(f"Malformed cycle notation: {text!r}") from error

    flat = [p for cycle in cycles for p in cycle]
    if any(p < 1 for p in flat) or len(flat) != len(set(flat)):
        raise DomainError(f"Cycles must use distinct positive points: {text!r}")

    size = max(flat, default=0)
    if degree is not None:
        size = max(size, degree)

    image = list(range(size))
    for cycle in cycles:
        for point, target in zip(cycle, cycle[1:] + cycle[:1]):
            image[point - 1] = target - 1
    return tuple(image)


def _rotation_label(symbol: str, i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return symbol
    return f"{symbol}^{i}"
