"""Exhaustive classification of finite rings of a given order, up to isomorphism.

Strategy per prime-power order: for every abelian type of the additive
group, scan the generator-product structure constants (each constrained to
the subgroup its bilinear extension needs), filtering by associativity on
generator triples as soon as the involved products are fixed.  Survivors are
deduplicated by additive-automorphism orbits and each class is re-emitted
from its canonical certificate, which makes the output independent of scan
partitioning and worker count.  Composite orders are assembled from the
prime-power parts, since a finite ring is the direct sum of its primary
components.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import addgroup, freealg, graphs, rings, structure
from .errors import FormatError, OrderCapExceeded
from .rings import FiniteRing
from .structure import StructureReport

DEFAULT_ENUMERATION_CAP = 9
ENUMERATION_HARD_MAX = 16
SCAN_BUDGET = 1 << 30


@dataclass(frozen=True)
class GeneratorPresentation:
    """A candidate multiplication: products of the additive generators."""

    additive_type: tuple[int, ...]
    products: tuple[int, ...]  # row-major k*k element indices


@dataclass(frozen=True)
class AtlasEntry:
    ring: FiniteRing
    certificate: bytes
    report: StructureReport
    graph_certificate: bytes


def _partitions(total: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []
    top = total if largest is None else min(total, largest)
    for first in range(top, 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return out


def _check_enum_cap(n: int, cap: int) -> None:
    limit = min(cap, ENUMERATION_HARD_MAX)
    if n > limit:
        raise OrderCapExceeded(
            f"enumeration of order {n} exceeds the cap of {limit}"
            + (f" (hard max {ENUMERATION_HARD_MAX})" if cap > ENUMERATION_HARD_MAX else "")
        )


def abelian_group_types(n: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All abelian groups of order n as descending prime-power order tuples."""
    if n < 1:
        raise ValueError("order must be at least 1")
    _check_enum_cap(n, cap)
    per_prime = []
    m = n
    for p in addgroup.prime_factors(n):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        per_prime.append([tuple(p ** part for part in parts) for parts in _partitions(e)])
    types = [()]
    for options in per_prime:
        types = [base + extra for base in types for extra in options]
    canon = [tuple(sorted(t, reverse=True)) for t in types]
    canon.sort(reverse=True)
    return canon


def _scan_positions(k: int) -> list[tuple[int, int]]:
    positions = []
    for t in range(k):
        for j in range(t, k):
            positions.append((t, j))
        for i in range(t + 1, k):
            positions.append((i, t))
    return positions


def _schedule(k: int, positions: list[tuple[int, int]]) -> list[list[tuple[int, int, int]]]:
    # Constraint (i, j, kk) touches row i and column kk of the product table;
    # it fires at the first position where both are fully assigned.
    index = {pos: t for t, pos in enumerate(positions)}
    plan: list[list[tuple[int, int, int]]] = [[] for _ in positions]
    for i in range(k):
        for j in range(k):
            for kk in range(k):
                needed = {(i, t) for t in range(k)} | {(t, kk) for t in range(k)}
                plan[max(index[pos] for pos in needed)].append((i, j, kk))
    return plan


def _scan_tensors(typ: tuple[int, ...], first_vals: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Associative structure-constant assignments with the first product
    restricted to `first_vals`, in lexicographic scan order."""
    import numpy as np

    group = addgroup.std_group(typ)
    k = len(typ)
    if k == 0:
        return [()]
    positions = _scan_positions(k)
    index = {pos: t for t, pos in enumerate(positions)}
    plan = _schedule(k, positions)
    allowed = [
        group.annihilated_by(math.gcd(typ[i], typ[j])) for (i, j) in positions
    ]
    allowed[0] = tuple(v for v in allowed[0] if v in set(first_vals))
    add_np = np.array(group.add, dtype=np.int32)
    smul_np = np.array(group.smul, dtype=np.int32)
    dig_np = np.array(group.digits, dtype=np.int32).reshape(group.order, k)

    frontier = np.zeros((1, 0), dtype=np.int32)
    for t, _pos in enumerate(positions):
        vals = np.array(allowed[t], dtype=np.int32)
        if len(vals) == 0:
            return []
        rows = len(frontier)
        ext = np.empty((rows * len(vals), t + 1), dtype=np.int32)
        ext[:, :t] = np.repeat(frontier, len(vals), axis=0)
        ext[:, t] = np.tile(vals, rows)
        frontier = ext
        for (i, j, kk) in plan[t]:
            p_ij = frontier[:, index[(i, j)]]
            p_jk = frontier[:, index[(j, kk)]]
            left = np.zeros(len(frontier), dtype=np.int32)
            right = np.zeros(len(frontier), dtype=np.int32)
            for tt in range(k):
                left = add_np[left, smul_np[dig_np[p_ij, tt], frontier[:, index[(tt, kk)]]]]
                right = add_np[right, smul_np[dig_np[p_jk, tt], frontier[:, index[(i, tt)]]]]
            frontier = frontier[left == right]
            if len(frontier) == 0:
                return []
    order_cols = [index[(i, j)] for i in range(k) for j in range(k)]
    return [tuple(int(v) for v in row) for row in frontier[:, order_cols]]


def _tensor_table(group: addgroup.StdGroup, products: tuple[int, ...]) -> rings.Table:
    n = group.order
    k = len(group.typ)
    rows = []
    for x in range(n):
        dx = group.digits[x]
        row = []
        for y in range(n):
            dy = group.digits[y]
            acc = 0
            for i in range(k):
                ci = dx[i]
                if not ci:
                    continue
                for j in range(k):
                    cj = dy[j]
                    if not cj:
                        continue
                    g = math.gcd(group.typ[i], group.typ[j])
                    acc = group.add[acc][group.smul[ci * cj % g][products[i * k + j]]]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def _chunk_certificates(job: tuple[tuple[int, ...], tuple[int, ...]]) -> list[bytes]:
    """Worker body: scan one chunk and return the certificates of the classes
    first seen inside it (orbit-deduplicated locally)."""
    typ, first_vals = job
    group = addgroup.std_group(typ)
    autos = addgroup.automorphism_perms(typ)
    inverses = []
    for phi in autos:
        inv = [0] * group.order
        for i, e in enumerate(phi):
            inv[e] = i
        inverses.append(inv)
    gens = group.gens
    k = len(typ)
    seen: set[tuple[int, ...]] = set()
    certs: list[bytes] = []
    for products in _scan_tensors(typ, first_vals):
        if products in seen:
            continue
        presentation = GeneratorPresentation(typ, products)
        table = _tensor_table(group, presentation.products)
        ring = rings.make_ring(group.add, table)
        certs.append(structure.ring_canonical_certificate(ring))
        for phi, inv in zip(autos, inverses):
            orbit = tuple(
                phi[table[inv[gens[i]]][inv[gens[j]]]]
                for i in range(k)
                for j in range(k)
            )
            seen.add(orbit)
    return certs


def _canonical_ring(cert: bytes) -> FiniteRing:
    """Rebuild the canonical representative ring encoded by a certificate."""
    header, _, body = cert.partition(b";t=")
    if not header.startswith(b"FR1;n="):
        raise FormatError("bad ring certificate header")
    n = int(header[len(b"FR1;n="):])
    tpart, _, table_bytes = body.partition(b";")
    typ = tuple(int(v) for v in tpart.split(b",")) if tpart else ()
    group = addgroup.std_group(typ)
    if group.order != n or len(table_bytes) != n * n:
        raise FormatError("ring certificate does not match its header")
    mul = tuple(
        tuple(table_bytes[x * n + y] for y in range(n)) for x in range(n)
    )
    return rings.make_ring(group.add, mul)


def _prime_power_certs(q: int, cap: int, workers: int) -> list[bytes]:
    jobs = []
    for typ in abelian_group_types(q, cap=cap):
        group = addgroup.std_group(typ)
        positions = _scan_positions(len(typ))
        space = 1
        for (i, j) in positions:
            space *= len(group.annihilated_by(math.gcd(typ[i], typ[j])))
        if space > SCAN_BUDGET:
            raise OrderCapExceeded(
                f"additive type {typ} needs a scan over {space} structure-constant "
                f"tuples, beyond the supported budget"
            )
        if len(typ) == 0:
            jobs.append((typ, ()))
            continue
        first_allowed = group.annihilated_by(math.gcd(typ[0], typ[0]))
        for v in first_allowed:
            jobs.append((typ, (v,)))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_certificates, jobs))
    else:
        results = [_chunk_certificates(job) for job in jobs]
    merged: set[bytes] = set()
    for chunk in results:
        merged.update(chunk)
    return sorted(merged)


def make_entry(ring: FiniteRing, *, certificate: bytes | None = None) -> AtlasEntry:
    """Wrap a ring with its certificate, structure report, and graph certificate."""
    cert = certificate if certificate is not None else structure.ring_canonical_certificate(ring)
    report = structure.structure_report(ring)
    graph = graphs.zero_divisor_graph(ring)
    return AtlasEntry(ring, cert, report, graphs.canonical_form(graph))


def enumerate_rings(
    n: int, *, cap: int = DEFAULT_ENUMERATION_CAP, workers: int = 1
) -> list[AtlasEntry]:
    """One canonical representative per isomorphism class of rings of order n.

    Entries come back sorted by certificate and labeled R<n>_<index>; the
    result is byte-for-byte independent of the worker count.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    _check_enum_cap(n, cap)
    parts = []
    m = n
    for p in addgroup.prime_factors(n):
        q = 1
        while m % p == 0:
            m //= p
            q *= p
        parts.append(q)
    parts.sort(reverse=True)
    if not parts:
        parts = [1]
    per_part: list[list[FiniteRing]] = []
    for q in parts:
        certs = _prime_power_certs(q, cap, workers) if q > 1 else [
            structure.ring_canonical_certificate(rings.zn(1))
        ]
        per_part.append([_canonical_ring(c) for c in certs])
    combos = per_part[0]
    for other in per_part[1:]:
        combos = [rings.direct_sum(a, b) for a in combos for b in other]
    keyed = sorted(
        (structure.ring_canonical_certificate(ring), ring) for ring in combos
    )
    entries = []
    for i, (cert, ring) in enumerate(keyed):
        labeled = replace(ring, label=f"R{n}_{i}")
        entries.append(make_entry(labeled, certificate=cert))
    return entries


def rings_with_graph(
    n_max: int,
    graph: graphs.SimpleGraph,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int = 1,
    provider=None,
) -> list[AtlasEntry]:
    """Atlas entries of order 1..n_max whose zero-divisor graph matches `graph`.

    `provider` may supply the per-order entry lists (e.g. a cache); it
    defaults to enumerate_rings.
    """
    _check_enum_cap(n_max, cap)
    target = graphs.canonical_form(graph)
    get = provider or (lambda m: enumerate_rings(m, cap=cap, workers=workers))
    out = []
    for m in range(1, n_max + 1):
        out.extend(e for e in get(m) if e.graph_certificate == target)
    return out


def graph_determinacy_report(
    entries: list[AtlasEntry],
    identities: list[freealg.NcPoly] | None = None,
    *,
    budget: int = freealg.DEFAULT_EVAL_BUDGET,
) -> list[tuple[AtlasEntry, AtlasEntry]]:
    """Pairs with the same graph certificate but different ring certificate.

    Entries failing any polynomial in `identities` are dropped first; an
    empty result means the surviving family is determined by its graphs.
    """
    kept = [
        e
        for e in entries
        if all(
            freealg.satisfies_identity(e.ring, p, budget=budget).ok
            for p in (identities or [])
        )
    ]
    by_graph: dict[bytes, list[AtlasEntry]] = {}
    for e in kept:
        by_graph.setdefault(e.graph_certificate, []).append(e)
    collisions = []
    for gcert in sorted(by_graph):
        group = sorted(by_graph[gcert], key=lambda e: e.certificate)
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                if a.certificate != b.certificate:
                    collisions.append((a, b))
    return collisions


# --- atlas file format ---------------------------------------------------------
#
#   atlas v1
#   order <n>
#   count <k>
#   <k certificate lines, lowercase hex>
#   <blank line, then k ringtab blocks separated by blank lines>


def save_atlas(entries: list[AtlasEntry], path) -> None:
    orders = {e.ring.order for e in entries}
    if len(orders) > 1:
        raise ValueError("an atlas file holds entries of a single order")
    order = orders.pop() if orders else 0
    lines = ["atlas v1", f"order {order}", f"count {len(entries)}"]
    lines.extend(e.certificate.hex() for e in entries)
    blocks = [rings.format_ringtab(e.ring) for e in entries]
    text = "\n".join(lines) + "\n"
    if blocks:
        text += "\n" + "\n".join(blocks)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_atlas(path) -> list[AtlasEntry]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = text.splitlines()
    if not lines or lines[0] != "atlas v1":
        raise FormatError("missing 'atlas v1' magic line")
    try:
        order = int(lines[1].split()[1])
        count = int(lines[2].split()[1])
    except (IndexError, ValueError):
        raise FormatError("bad atlas header") from None
    certs = []
    for i in range(count):
        try:
            certs.append(bytes.fromhex(lines[3 + i]))
        except (IndexError, ValueError):
            raise FormatError(f"bad certificate line {3 + i + 1}") from None
    body = "\n".join(lines[3 + count :])
    blocks = [b for b in body.split("\n\n") if b.strip()]
    if len(blocks) != count:
        raise FormatError(f"expected {count} ringtab blocks, found {len(blocks)}")
    entries = []
    for cert, block in zip(certs, blocks):
        ring = rings.parse_ringtab(block)
        if ring.order != order:
            raise FormatError(f"entry order {ring.order} does not match header {order}")
        recomputed = structure.ring_canonical_certificate(ring)
        if recomputed != cert:
            raise FormatError("stored certificate does not match its ring")
        entries.append(make_entry(ring, certificate=cert))
    return entries
