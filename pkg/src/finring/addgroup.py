"""Finite abelian-group helpers shared by canonicalization and enumeration.

Groups show up in two guises here: as the additive structure of an existing
ring (given by its addition table) and as the standard model of an invariant
type, which lays out Z_{m1} x ... x Z_{mk} in mixed-radix index order with
the first factor most significant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Table = tuple[tuple[int, ...], ...]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def additive_orders(add: Sequence[Sequence[int]]) -> list[int]:
    """Order of each element in the group described by `add` (index 0 is zero)."""
    n = len(add)
    orders = []
    for x in range(n):
        cur = x
        k = 1
        while cur != 0:
            cur = add[cur][x]
            k += 1
        orders.append(k)
    return orders


def _scalar(add: Sequence[Sequence[int]], c: int, x: int) -> int:
    acc = 0
    for _ in range(c):
        acc = add[acc][x]
    return acc


def additive_type(add: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant cyclic decomposition: prime-power orders, sorted descending.

    Works from the subgroup sizes |{x : p^i x = 0}|, which determine the
    number of cyclic factors of each order p^i.
    """
    n = len(add)
    typ: list[int] = []
    for p in prime_factors(n):
        pmul = [_scalar(add, p, x) for x in range(n)]
        sizes = [1]
        action = list(range(n))
        while True:
            action = [pmul[v] for v in action]
            killed = sum(1 for x in range(n) if action[x] == 0)
            if killed == sizes[-1]:
                break
            sizes.append(killed)
        ranks = []
        for i in range(1, len(sizes)):
            q, r = sizes[i] // sizes[i - 1], 0
            while q > 1:
                q //= p
                r += 1
            ranks.append(r)
        for i, r in enumerate(ranks):
            exact = r - (ranks[i + 1] if i + 1 < len(ranks) else 0)
            typ.extend([p ** (i + 1)] * exact)
    typ.sort(reverse=True)
    return tuple(typ)


def iter_basis_perms(add: Sequence[Sequence[int]], typ: tuple[int, ...]) -> Iterator[list[int]]:
    """Yield one index permutation per ordered decomposition basis matching `typ`.

    A yielded permutation maps the standard mixed-radix index of a coordinate
    tuple to the group element carrying it; the set of all of them is a torsor
    under the automorphism group, which is what certificate minimization and
    isomorphism search iterate over.  Generators are tried in ascending index
    order within each cyclic order.
    """
    if not typ:
        yield [0]
        return
    orders = additive_orders(add)
    pools = {m: [x for x in range(len(add)) if orders[x] == m] for m in set(typ)}
    multiples: dict[int, list[int]] = {}

    def mults(b: int, m: int) -> list[int]:
        cached = multiples.get(b)
        if cached is None:
            cached = [0]
            cur = 0
            for _ in range(m - 1):
                cur = add[cur][b]
                cached.append(cur)
            multiples[b] = cached
        return cached

    def rec(i: int, sums: list[int]) -> Iterator[list[int]]:
        if i == len(typ):
            yield sums
            return
        m = typ[i]
        for b in pools[m]:
            new = [add[s][t] for s in sums for t in mults(b, m)]
            if len(set(new)) == len(new):
                yield from rec(i + 1, new)

    yield from rec(0, [0])


@dataclass(frozen=True)
class StdGroup:
    """Standard model of an abelian type with precomputed lookup tables."""

    typ: tuple[int, ...]
    order: int
    add: Table
    digits: tuple[tuple[int, ...], ...]
    gens: tuple[int, ...]
    smul: Table  # smul[c][x] = c*x for 0 <= c <= max(typ)

    def annihilated_by(self, d: int) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if self.smul[d][x] == 0)

    def scalar(self, c: int, x: int) -> int:
        orders = self.typ
        digs = self.digits[x]
        coords = tuple(c * digs[i] % orders[i] for i in range(len(orders)))
        return self._index_of(coords)

    def _index_of(self, coords: tuple[int, ...]) -> int:
        idx = 0
        for m, c in zip(self.typ, coords):
            idx = idx * m + c
        return idx


@lru_cache(maxsize=None)
def std_group(typ: tuple[int, ...]) -> StdGroup:
    """Build (and memoize) the standard group for an abelian type."""
    order = math.prod(typ)
    digits = tuple(itertools.product(*(range(m) for m in typ)))
    index_of = {d: i for i, d in enumerate(digits)}
    k = len(typ)
    add = tuple(
        tuple(
            index_of[tuple((a[i] + b[i]) % typ[i] for i in range(k))]
            for b in digits
        )
        for a in digits
    )
    gens = tuple(
        index_of[tuple(1 if j == i else 0 for j in range(k))] for i in range(k)
    )
    top = max(typ) if typ else 0
    smul = tuple(
        tuple(
            index_of[tuple(c * d[i] % typ[i] for i in range(k))] for d in digits
        )
        for c in range(top + 1)
    )
    return StdGroup(typ, order, add, digits, gens, smul)


@lru_cache(maxsize=None)
def automorphism_perms(typ: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of the standard group, as index permutations."""
    group = std_group(typ)
    return tuple(tuple(p) for p in iter_basis_perms(group.add, typ))
