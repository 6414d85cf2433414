"""
Arithmetic functions and divisor-lattice antichains.

Covers the divisor count tau and Euler's totient phi, the comparison
tau(n) < phi(n), the prime-power gap lemma behind it, and maximum
antichains in the divisor lattice, which give the independence number
of the power graph of a cyclic group.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from math import prod
from typing import TYPE_CHECKING

import numpy as np

from powermatch.config import config
from powermatch.utils.bitset import iter_bits
from powermatch.utils.exceptions import DomainError, GuardExceededError
from powermatch.utils.logger import get_logger

if TYPE_CHECKING:
    from powermatch.graphs.graph import SimpleGraph

log = get_logger()

# Values of n <= 30 where tau(n) >= phi(n); none exist above 30.
TAU_PHI_FAILURES = (1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30)


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization n = prod(p ** a) with ascending distinct primes."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors (r)."""

        return len(self.pairs)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity (m)."""

        return sum(a for _, a in self.pairs)


def _wheel():
    yield 2
    yield 3
    d = 5
    while True:
        yield d
        yield d + 2
        d += 6


def factorize(n: int) -> Factorization:
    """Trial division over a 2-3 wheel."""

    if n < 1:
        raise DomainError(f"Cannot factorize {n}: expected a positive integer")

    pairs = []
    rest = n
    for d in _wheel():
        if d * d > rest:
            break
        if rest % d == 0:
            a = 0
            while rest % d == 0:
                rest //= d
                a += 1
            pairs.append((d, a))
    if rest > 1:
        pairs.append((rest, 1))

    return Factorization(n=n, pairs=tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).pairs == ((n, 1),)


def is_prime_power(n: int) -> bool:
    """True for 1 and for p^k; the identity's order 1 counts."""

    return factorize(n).omega <= 1


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def big_omega(n: int) -> int:
    return factorize(n).big_omega


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order."""

    result = [1]
    for p, a in factorize(n).pairs:
        result = [d * p**k for d in result for k in range(a + 1)]
    return sorted(result)


def tau(n: int) -> int:
    """Number of divisors: prod(a_i + 1)."""

    return prod(a + 1 for _, a in factorize(n).pairs)


def phi(n: int) -> int:
    """Euler's totient: prod(p_i^(a_i - 1) * (p_i - 1))."""

    return prod(p ** (a - 1) * (p - 1) for p, a in factorize(n).pairs)


def tau_less_than_phi(n: int) -> bool:
    return tau(n) < phi(n)


def tau_phi_table(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Sieves tau and phi for 0..limit. Index 0 is unused and holds 0.
    """

    if limit < 1:
        raise DomainError(f"Scan limit must be positive, got {limit}")

    taus = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        taus[d::d] += 1

    phis = np.arange(limit + 1, dtype=np.int64)
    composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if composite[p]:
            continue
        composite[p * p :: p] = True
        phis[p::p] -= phis[p::p] // p

    return taus, phis


@dataclass(frozen=True)
class TauPhiScan:
    start: int
    limit: int
    taus: np.ndarray
    phis: np.ndarray

    @property
    def failures(self) -> tuple[int, ...]:
        """All n in the scanned range with tau(n) >= phi(n)."""

        window = np.arange(self.limit + 1) >= self.start
        bad = np.flatnonzero(window & (self.taus >= self.phis))
        return tuple(int(n) for n in bad if n >= 1)

    def rows(self):
        """Yields (n, tau, phi, tau < phi) for the scanned range."""

        for n in range(max(self.start, 1), self.limit + 1):
            t, f = int(self.taus[n]), int(self.phis[n])
            yield n, t, f, t < f


def scan_tau_phi(limit: int, start: int = 1) -> TauPhiScan:
    log.info("Scan tau/phi for n in %d..%d", start, limit)
    taus, phis = tau_phi_table(limit)
    return TauPhiScan(start=start, limit=limit, taus=taus, phis=phis)


class Relation(StrEnum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def compare(cls, left: int, right: int) -> Relation:
        if left < right:
            return cls.LESS
        if left == right:
            return cls.EQUAL
        return cls.GREATER


@dataclass(frozen=True)
class LemmaGap:
    """
    Evidence for the prime-power gap p^(a-1)(p-1) against a+1 and,
    for odd p, against 2(a+1).
    """

    p: int
    a: int
    value: int
    bound: int
    relation: Relation
    exception: bool
    doubled_bound: int | None
    doubled_relation: Relation | None

    @property
    def first_equality(self) -> bool:
        return self.relation is Relation.EQUAL

    @property
    def second_equality(self) -> bool:
        return self.doubled_relation is Relation.EQUAL

    @property
    def holds(self) -> bool:
        """Both inequalities hold wherever they apply."""

        if not self.exception and self.relation is Relation.LESS:
            return False
        return self.doubled_relation is not Relation.LESS


def lemma_gap(p: int, a: int) -> LemmaGap:
    if not is_prime(p):
        raise DomainError(f"{p} is not a prime")
    if a < 1:
        raise DomainError(f"Exponent must be positive, got {a}")

    value = p ** (a - 1) * (p - 1)
    doubled = p != 2 and (p, a) != (3, 1)

    return LemmaGap(
        p=p,
        a=a,
        value=value,
        bound=a + 1,
        relation=Relation.compare(value, a + 1),
        exception=(p, a) in {(2, 1), (2, 2)},
        doubled_bound=2 * (a + 1) if doubled else None,
        doubled_relation=Relation.compare(value, 2 * (a + 1)) if doubled else None,
    )


def lemma_table(pmax: int, amax: int) -> list[LemmaGap]:
    """Lemma evidence for all primes p <= pmax and 1 <= a <= amax."""

    if pmax < 2 or amax < 1:
        raise DomainError(f"Empty lemma range: pmax={pmax}, amax={amax}")

    return [
        lemma_gap(p, a)
        for p in range(2, pmax + 1)
        if is_prime(p)
        for a in range(1, amax + 1)
    ]


@dataclass(frozen=True)
class Antichain:
    size: int
    witness: tuple[int, ...]


def _chain_cover_width(members: list[int], above: list[list[int]]) -> int:
    """
    Width of a sub-poset by Dilworth: |P| minus a maximum matching in the
    strict comparability bipartite graph (Kuhn's augmenting paths).
    """

    inside = set(members)
    owner: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in above[u]:
            if v not in inside or v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = u
                return True
        return False

    matched = sum(augment(u, set()) for u in members)
    return len(members) - matched


def max_divisor_antichain(n: int, *, cap: int | None = None) -> Antichain:
    """
    Largest set of divisors of n pairwise incomparable under divisibility.
    The witness is the lexicographically smallest such set.
    """

    cap = config.ANTICHAIN_DIVISOR_CAP if cap is None else cap
    divs = divisors(n)
    k = len(divs)
    if k > cap:
        raise GuardExceededError(
            f"{n} has {k} divisors, antichain search is capped at {cap}"
        )

    above = [[j for j in range(i + 1, k) if divs[j] % divs[i] == 0] for i in range(k)]
    comparable = [0] * k
    for i in range(k):
        for j in above[i]:
            comparable[i] |= 1 << j
            comparable[j] |= 1 << i

    size = _chain_cover_width(list(range(k)), above)

    chosen: list[int] = []
    blocked = 0
    for i in range(k):
        if len(chosen) == size:
            break
        if blocked >> i & 1:
            continue
        after = blocked | comparable[i]
        rest = [j for j in range(i + 1, k) if not after >> j & 1]
        if len(chosen) + 1 + _chain_cover_width(rest, above) >= size:
            chosen.append(i)
            blocked = after | 1 << i

    return Antichain(size=size, witness=tuple(divs[i] for i in chosen))


def dtk_antichain_size(n: int) -> int:
    """Size of the middle layer: divisors d with Omega(d) = floor(Omega(n) / 2)."""

    fact = factorize(n)
    layer = fact.big_omega // 2

    # coefficients of prod(1 + x + ... + x^a)
    counts = [1]
    for _, a in fact.pairs:
        grown = [0] * (len(counts) + a)
        for degree, count in enumerate(counts):
            for extra in range(a + 1):
                grown[degree + extra] += count
        counts = grown

    return counts[layer]


def independence_number_small(graph: SimpleGraph, *, guard: int | None = None) -> int:
    """
    Exact independence number by branching on the closed neighbourhood
    of a minimum-degree vertex.
    """

    guard = config.INDEPENDENCE_GUARD if guard is None else guard
    if graph.n > guard:
        raise GuardExceededError(
            f"Independence search is limited to {guard} vertices, got {graph.n}"
        )

    adj = graph.adj
    best = 0

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return

        pivot = min(
            iter_bits(candidates),
            key=lambda u: (adj[u] & candidates).bit_count(),
        )
        for u in iter_bits(adj[pivot] & candidates | 1 << pivot):
            search(candidates & ~adj[u] & ~(1 << u), size + 1)

    search((1 << graph.n) - 1, 0)
    return best


def antichain_rows(start: int, stop: int, *, guard: int | None = None):
    """
    Yields (n, antichain, phi, antichain < phi) for start <= n <= stop.
    The antichain size equals the independence number of P(C_n).
    """

    for n in range(start, stop + 1):
        width = max_divisor_antichain(n, cap=guard).size
        f = phi(n)
        yield n, width, f, width < f

