"""Structural invariants of finite rings.

Zero divisors, units, the ideal lattice, the radical, subdirect
irreducibility, direct-sum decomposition, and isomorphism testing via
additive-basis relabeling.  Everything here is a pure function of the
Cayley tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import addgroup, rings
from .errors import NoIdentity, OrderCapExceeded
from .rings import FiniteRing

DEFAULT_STRUCTURAL_CAP = 64


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members


def make_ideal(ring: FiniteRing, members) -> Ideal:
    """Validate a member collection as a two-sided ideal of `ring`."""
    return Ideal(ring, rings.ideal_members(ring, members))


def zero_divisors(ring: FiniteRing) -> set[int]:
    """Nonzero x annihilating some nonzero y on at least one side."""
    n = ring.order
    mul = ring.mul
    out = set()
    for x in range(1, n):
        for y in range(1, n):
            if mul[x][y] == 0 or mul[y][x] == 0:
                out.add(x)
                break
    return out


def has_identity(ring: FiniteRing) -> int | None:
    """The two-sided identity element, if the ring has one."""
    n = ring.order
    for e in range(n):
        if all(ring.mul[e][x] == x == ring.mul[x][e] for x in range(n)):
            return e
    return None


def units(ring: FiniteRing) -> set[int]:
    """Invertible elements; only defined when the ring has an identity."""
    e = has_identity(ring)
    if e is None:
        raise NoIdentity("units are only defined for rings with identity")
    n = ring.order
    out = set()
    for x in range(n):
        if any(ring.mul[x][y] == e and ring.mul[y][x] == e for y in range(n)):
            out.add(x)
    return out


def idempotents(ring: FiniteRing) -> set[int]:
    return {x for x in range(ring.order) if ring.mul[x][x] == x}


def nilpotent_elements(ring: FiniteRing) -> set[int]:
    out = set()
    for x in range(ring.order):
        seen = set()
        cur = x
        while cur not in seen:
            if cur == 0:
                out.add(x)
                break
            seen.add(cur)
            cur = ring.mul[cur][x]
    return out


def is_commutative(ring: FiniteRing) -> bool:
    n = ring.order
    return all(ring.mul[x][y] == ring.mul[y][x] for x in range(n) for y in range(n))


def _ideal_closure(ring: FiniteRing, seed: set[int]) -> frozenset[int]:
    """Smallest two-sided ideal containing `seed`."""
    neg = [row.index(0) for row in ring.add]
    members = {0} | set(seed)
    frontier = list(members)
    while frontier:
        fresh = set()
        for a in frontier:
            if neg[a] not in members:
                fresh.add(neg[a])
            for b in members:
                for c in (ring.add[a][b], ring.add[b][a]):
                    if c not in members:
                        fresh.add(c)
            for r in range(ring.order):
                for c in (ring.mul[r][a], ring.mul[a][r]):
                    if c not in members:
                        fresh.add(c)
        members |= fresh
        frontier = list(fresh)
    return frozenset(members)


def _additive_span(ring: FiniteRing, seed: frozenset[int]) -> frozenset[int]:
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in members:
                c = ring.add[a][b]
                if c not in members:
                    fresh.add(c)
        members |= fresh
        frontier = list(fresh)
    return frozenset(members)


def _check_cap(ring: FiniteRing, cap: int, what: str) -> None:
    if ring.order > cap:
        raise OrderCapExceeded(f"{what} is capped at order {cap}, got {ring.order}")


def ideals(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> list[Ideal]:
    """All two-sided ideals: join-closure of the principal ideals.

    Every ideal is the join of the principal ideals of its elements, so
    closing the principal ones under pairwise join (additive span of the
    union; multiplicative closure is inherited) is exhaustive.
    """
    _check_cap(ring, cap, "ideal enumeration")
    found = {frozenset({0})}
    for x in range(1, ring.order):
        found.add(_ideal_closure(ring, {x}))
    worklist = list(found)
    while worklist:
        nxt = []
        for a in worklist:
            for b in list(found):
                join = _additive_span(ring, a | b)
                if join not in found:
                    found.add(join)
                    nxt.append(join)
        worklist = nxt
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [Ideal(ring, tuple(sorted(s))) for s in ordered]


def _ideal_is_nilpotent(ring: FiniteRing, members: tuple[int, ...]) -> bool:
    current = set(members)
    for _ in range(len(members) + 1):
        if current == {0}:
            return True
        current = {ring.mul[a][b] for a in current for b in members}
    return current == {0}


def jacobson_radical(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> Ideal:
    """Largest nilpotent two-sided ideal (the radical of a finite ring).

    Computed as the join of all nilpotent ideals, which sidesteps
    quasi-regularity for rings without identity.
    """
    _check_cap(ring, cap, "radical computation")
    acc: frozenset[int] = frozenset({0})
    for ideal in ideals(ring, cap=cap):
        if _ideal_is_nilpotent(ring, ideal.members):
            acc = _additive_span(ring, acc | frozenset(ideal.members))
    return Ideal(ring, tuple(sorted(acc)))


def is_nilpotent_ring(ring: FiniteRing) -> int | None:
    """Least n with every n-fold product zero, or None if there is none."""
    n = ring.order
    current = set(range(n))
    power = 1
    while current != {0}:
        if power > n + 1:
            return None
        current = {ring.mul[a][b] for a in current for b in range(n)}
        power += 1
    return power


def is_subdirectly_irreducible(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> bool:
    """True iff the intersection of all nonzero ideals is nonzero.

    It suffices to intersect the nonzero principal ideals, since every
    nonzero ideal contains one.
    """
    _check_cap(ring, cap, "subdirect irreducibility")
    meet: set[int] | None = None
    for x in range(1, ring.order):
        principal = _ideal_closure(ring, {x})
        meet = set(principal) if meet is None else meet & principal
        if meet == {0}:
            return False
    return meet is not None and len(meet) > 1


def is_field(ring: FiniteRing) -> bool:
    """Has identity, commutative, and every nonzero element invertible."""
    if has_identity(ring) is None or not is_commutative(ring):
        return False
    invertible = units(ring)
    return all(x in invertible for x in range(1, ring.order))


def is_local(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> bool:
    """True iff the quotient by the radical is a field (identity required)."""
    if has_identity(ring) is None:
        raise NoIdentity("locality is only defined for rings with identity")
    radical = jacobson_radical(ring, cap=cap)
    return is_field(rings.quotient(ring, radical))


def _restrict(ring: FiniteRing, members: tuple[int, ...]) -> FiniteRing:
    index_of = {x: i for i, x in enumerate(members)}
    add = tuple(tuple(index_of[ring.add[a][b]] for b in members) for a in members)
    mul = tuple(tuple(index_of[ring.mul[a][b]] for b in members) for a in members)
    return rings.make_ring(add, mul)


def decompose(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> list[Ideal]:
    """A finest splitting of the ring into direct summand ideals.

    Greedily splits components against complementary ideal pairs; a singleton
    result means the ring is indecomposable.  Components come back sorted by
    (size, certificate) so the output is deterministic.
    """
    _check_cap(ring, cap, "decomposition")
    all_ideals = [frozenset(i.members) for i in ideals(ring, cap=cap)]
    components = [frozenset(range(ring.order))]
    done = False
    while not done:
        done = True
        for ci, comp in enumerate(components):
            inside = [s for s in all_ideals if len(s) > 1 and s < comp]
            split = None
            for left in inside:
                for right in inside:
                    if len(left) * len(right) != len(comp) or left & right != {0}:
                        continue
                    sums = {ring.add[a][b] for a in left for b in right}
                    if len(sums) == len(comp) and sums == comp:
                        split = (left, right)
                        break
                if split:
                    break
            if split:
                components[ci: ci + 1] = [split[0], split[1]]
                done = False
                break
    def sort_key(s: frozenset[int]):
        members = tuple(sorted(s))
        return (len(s), ring_canonical_certificate(_restrict(ring, members)), members)
    components.sort(key=sort_key)
    return [Ideal(ring, tuple(sorted(s))) for s in components]


@dataclass(frozen=True)
class RingHom:
    """Index map between two rings, used as an isomorphism witness."""

    source: FiniteRing
    target: FiniteRing
    images: tuple[int, ...]

    def preserves_structure(self) -> bool:
        n = self.source.order
        img = self.images
        for x in range(n):
            for y in range(n):
                if img[self.source.add[x][y]] != self.target.add[img[x]][img[y]]:
                    return False
                if img[self.source.mul[x][y]] != self.target.mul[img[x]][img[y]]:
                    return False
        return True

    @property
    def is_isomorphism(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self.images)) == self.source.order
            and self.preserves_structure()
        )


def _std_mul(ring: FiniteRing, perm: list[int]) -> tuple[int, ...]:
    n = ring.order
    inv = [0] * n
    for i, e in enumerate(perm):
        inv[e] = i
    mul = ring.mul
    return tuple(inv[mul[px][py]] for px in perm for py in perm)


def ring_isomorphic(
    r: FiniteRing, s: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP
) -> RingHom | None:
    """Search for an isomorphism by backtracking over additive bases of `s`.

    Both rings are viewed in the standard coordinates of their common
    additive type; `r` is pinned to one basis and every basis of `s` is
    tried against it.
    """
    _check_cap(r, cap, "isomorphism search")
    _check_cap(s, cap, "isomorphism search")
    if r.order != s.order:
        return None
    typ = addgroup.additive_type(r.add)
    if typ != addgroup.additive_type(s.add):
        return None
    n = r.order
    perm_r = next(addgroup.iter_basis_perms(r.add, typ))
    target = _std_mul(r, perm_r)
    inv_r = [0] * n
    for i, e in enumerate(perm_r):
        inv_r[e] = i
    mul_s = s.mul
    for perm_s in addgroup.iter_basis_perms(s.add, typ):
        inv_s = [0] * n
        for i, e in enumerate(perm_s):
            inv_s[e] = i
        pos = 0
        ok = True
        for px in perm_s:
            row = mul_s[px]
            for py in perm_s:
                if inv_s[row[py]] != target[pos]:
                    ok = False
                    break
                pos += 1
            if not ok:
                break
        if ok:
            hom = RingHom(r, s, tuple(perm_s[inv_r[x]] for x in range(n)))
            assert hom.is_isomorphism
            return hom
    return None


def ring_canonical_certificate(
    ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP
) -> bytes:
    """Byte string equal for two rings exactly when they are isomorphic.

    The additive group is put in the standard layout of its invariant type
    and the multiplication table is minimized lexicographically over every
    decomposition basis (equivalently, over the additive automorphisms).
    """
    _check_cap(ring, cap, "certificate computation")
    typ = addgroup.additive_type(ring.add)
    best: tuple[int, ...] | None = None
    for perm in addgroup.iter_basis_perms(ring.add, typ):
        cand = _std_mul(ring, perm)
        if best is None or cand < best:
            best = cand
    assert best is not None
    header = f"FR1;n={ring.order};t={','.join(map(str, typ))};".encode()
    return header + bytes(best)


@dataclass(frozen=True)
class StructureReport:
    """Fixed-shape summary of one ring, serializable as key: value lines."""

    label: str | None
    order: int
    characteristic: int
    has_identity: int | None
    is_commutative: bool
    is_field: bool
    is_local: bool
    is_nilpotent: int | None
    is_subdirectly_irreducible: bool
    is_decomposable: bool
    zero_divisor_count: int
    jacobson_radical: Ideal

    def to_text(self) -> str:
        def flag(v: bool) -> str:
            return "true" if v else "false"

        def opt(v: int | None) -> str:
            return "none" if v is None else str(v)

        lines = [
            f"label: {self.label if self.label is not None else '-'}",
            f"order: {self.order}",
            f"characteristic: {self.characteristic}",
            f"has_identity: {opt(self.has_identity)}",
            f"is_commutative: {flag(self.is_commutative)}",
            f"is_field: {flag(self.is_field)}",
            f"is_local: {flag(self.is_local)}",
            f"is_nilpotent: {opt(self.is_nilpotent)}",
            f"is_subdirectly_irreducible: {flag(self.is_subdirectly_irreducible)}",
            f"is_decomposable: {flag(self.is_decomposable)}",
            f"zero_divisor_count: {self.zero_divisor_count}",
            f"jacobson_radical: {' '.join(str(m) for m in self.jacobson_radical.members)}",
        ]
        return "\n".join(lines) + "\n"


def structure_report(ring: FiniteRing, *, cap: int = DEFAULT_STRUCTURAL_CAP) -> StructureReport:
    """Compute the full invariant summary for one ring."""
    identity = has_identity(ring)
    local = is_local(ring, cap=cap) if identity is not None else False
    return StructureReport(
        label=ring.label,
        order=ring.order,
        characteristic=rings.characteristic(ring),
        has_identity=identity,
        is_commutative=is_commutative(ring),
        is_field=is_field(ring),
        is_local=local,
        is_nilpotent=is_nilpotent_ring(ring),
        is_subdirectly_irreducible=is_subdirectly_irreducible(ring, cap=cap),
        is_decomposable=len(decompose(ring, cap=cap)) > 1,
        zero_divisor_count=len(zero_divisors(ring)),
        jacobson_radical=jacobson_radical(ring, cap=cap),
    )
