"""Finite associative rings as dense Cayley tables.

Elements are the indices 0..n-1 and index 0 is always the additive identity;
the whole structure lives in two n x n tables.  That keeps every operation a
pair of lookups, makes rings hashable and freely shareable, and puts rings
with and without unity, commutative or not, on the same footing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import addgroup
from .errors import AxiomViolation, FormatError, NotAnIdeal, NotPrime, OrderCapExceeded

DEFAULT_ORDER_CAP = 256

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteRing:
    order: int
    add: Table
    mul: Table
    label: str | None = None
    element_names: tuple[str, ...] | None = None

    def element_name(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def neg(self, x: int) -> int:
        return self.add[x].index(0)

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order}, label={self.label!r})"


def _as_table(raw: Sequence[Sequence[int]], n: int, which: str) -> Table:
    if len(raw) != n:
        raise AxiomViolation("table-shape", (len(raw), n), f"{which} table must be {n}x{n}")
    rows = []
    for i, row in enumerate(raw):
        row = tuple(row)
        if len(row) != n:
            raise AxiomViolation("table-shape", (i, len(row)), f"{which} row {i} has wrong length")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise AxiomViolation("entry-range", (i, j), f"{which}[{i}][{j}] = {v!r} not in [0, {n})")
        rows.append(row)
    return tuple(rows)


def _check_triples(n: int, add: Table, mul: Table) -> None:
    rng = range(n)
    for x in rng:
        add_x, mul_x = add[x], mul[x]
        for y in rng:
            a_xy = add_x[y]
            m_xy = mul_x[y]
            add_axy, mul_mxy = add[a_xy], mul[m_xy]
            add_y, mul_y = add[y], mul[y]
            mul_axy = mul[a_xy]
            for z in rng:
                if add_axy[z] != add_x[add_y[z]]:
                    raise AxiomViolation("add-associative", (x, y, z))
                if mul_mxy[z] != mul_x[mul_y[z]]:
                    raise AxiomViolation("mul-associative", (x, y, z))
                if mul_x[add_y[z]] != add[m_xy][mul_x[z]]:
                    raise AxiomViolation("left-distributive", (x, y, z))
                if mul_axy[z] != add[mul_x[z]][mul_y[z]]:
                    raise AxiomViolation("right-distributive", (x, y, z))


def _check_triples_fast(n: int, add: Table, mul: Table) -> None:
    # Vectorized version of the four cubic laws; chunked over the first axis
    # to bound transient memory at the 256 cap.
    import numpy as np

    a = np.array(add, dtype=np.int32)
    m = np.array(mul, dtype=np.int32)

    def report(axiom: str, x0: int, mismatch: "np.ndarray") -> None:
        bad = np.argwhere(mismatch)
        if len(bad):
            i, y, z = (int(v) for v in bad[0])
            raise AxiomViolation(axiom, (x0 + i, y, z))

    step = max(1, (1 << 22) // (n * n))
    for x0 in range(0, n, step):
        xs = np.arange(x0, min(n, x0 + step))
        report("add-associative", x0, a[a[xs], :] != a[xs][:, a])
        report("mul-associative", x0, m[m[xs], :] != m[xs][:, m])
        report("left-distributive", x0, m[xs][:, a] != a[m[xs][:, :, None], m[xs][:, None, :]])
        report("right-distributive", x0, m[a[xs], :] != a[m[xs][:, None, :], m[None, :, :]])


def _check_axioms(n: int, add: Table, mul: Table) -> None:
    rng = range(n)
    for x in rng:
        if add[0][x] != x:
            raise AxiomViolation("zero-identity", (x,))
    for x in rng:
        row = add[x]
        for y in rng:
            if row[y] != add[y][x]:
                raise AxiomViolation("add-commutative", (x, y))
        if 0 not in row:
            raise AxiomViolation("add-inverse", (x,))
    if n >= 32:
        _check_triples_fast(n, add, mul)
    else:
        _check_triples(n, add, mul)


def make_ring(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    label: str | None = None,
    element_names: Sequence[str] | None = None,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteRing:
    """Validate a pair of Cayley tables and wrap them as a ring.

    Every axiom is checked eagerly; the first failure raises AxiomViolation
    naming the axiom and a witness tuple.
    """
    n = len(add)
    if n == 0:
        raise AxiomViolation("table-shape", (0,), "a ring needs at least the zero element")
    if n > order_cap:
        raise OrderCapExceeded(f"order {n} exceeds the cap of {order_cap}")
    add_t = _as_table(add, n, "add")
    mul_t = _as_table(mul, n, "mul")
    _check_axioms(n, add_t, mul_t)
    names = None
    if element_names is not None:
        names = tuple(element_names)
        if len(names) != n:
            raise ValueError(f"expected {n} element names, got {len(names)}")
    return FiniteRing(n, add_t, mul_t, label, names)


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
        raise NotPrime(f"{p} is not prime")


def zn(n: int) -> FiniteRing:
    """Residue-class ring modulo n; n = 1 gives the zero ring."""
    if n < 1:
        raise ValueError("order must be at least 1")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return make_ring(add, mul, label=f"Z{n}", element_names=tuple(str(i) for i in range(n)))


def _poly_mul_mod(p: int, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(p: int, a: list[int], m: list[int]) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        factor = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a.pop()
    return a


def _is_irreducible(p: int, poly: list[int]) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            div = []
            t = idx
            for _ in range(d):
                div.append(t % p)
                t //= p
            div.append(1)
            rem = _poly_rem(p, poly, div)
            if not any(rem):
                return False
    return True


def _least_irreducible(p: int, k: int) -> list[int]:
    # Candidates are monic of degree k; ties broken by comparing coefficient
    # tuples low-degree-first, so the constant term is scanned slowest.
    for idx in range(p ** k):
        coeffs = [idx // p ** (k - 1 - i) % p for i in range(k)]
        poly = coeffs + [1]
        if _is_irreducible(p, poly):
            return poly
    raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")


def _poly_name(digits: Sequence[int], var: str = "x") -> str:
    parts = []
    for d in range(len(digits) - 1, -1, -1):
        c = digits[d]
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            power = var if d == 1 else f"{var}^{d}"
            parts.append(power if c == 1 else f"{c}{power}")
    return "+".join(parts) if parts else "0"


def gf(p: int, k: int = 1, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Galois field of order p^k, built on the least monic irreducible polynomial.

    Element i encodes the polynomial whose coefficient of x^j is the j-th
    base-p digit of i, so 0..p-1 is the prime subfield.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    q = p ** k
    if q > order_cap:
        raise OrderCapExceeded(f"order {q} exceeds the cap of {order_cap}")
    modulus = _least_irreducible(p, k)

    def digits(i: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(i % p)
            i //= p
        return out

    def index(ds: Sequence[int]) -> int:
        idx = 0
        for c in reversed(list(ds) + [0] * (k - len(ds))):
            idx = idx * p + c
        return idx

    add = tuple(
        tuple(index([(a + b) % p for a, b in zip(digits(i), digits(j))]) for j in range(q))
        for i in range(q)
    )
    mul_rows = []
    for i in range(q):
        row = []
        for j in range(q):
            prod = _poly_rem(p, _poly_mul_mod(p, digits(i), digits(j)), modulus)
            row.append(index(prod))
        mul_rows.append(tuple(row))
    names = tuple(_poly_name(digits(i)) for i in range(q))
    return make_ring(add, tuple(mul_rows), label=f"GF({q})", element_names=names)


def n0(p: int, n: int = 1) -> FiniteRing:
    """Null ring on a cyclic group of order p^n: every product is zero."""
    _require_prime(p)
    if n < 1:
        raise ValueError("exponent must be at least 1")
    q = p ** n
    add = tuple(tuple((i + j) % q for j in range(q)) for i in range(q))
    mul = tuple(tuple(0 for _ in range(q)) for _ in range(q))
    names = ("0",) + tuple("a" if i == 1 else f"{i}a" for i in range(1, q))
    return make_ring(add, mul, label=f"N0_{q}", element_names=names)


def np2(p: int) -> FiniteRing:
    """Cyclic ring of order p^2 generated by a with a*a = p*a."""
    _require_prime(p)
    q = p * p
    add = tuple(tuple((i + j) % q for j in range(q)) for i in range(q))
    mul = tuple(tuple(i * j * p % q for j in range(q)) for i in range(q))
    names = ("0",) + tuple("a" if i == 1 else f"{i}a" for i in range(1, q))
    return make_ring(add, mul, label=f"N{q}", element_names=names)


def npp(p: int) -> FiniteRing:
    """Strictly upper-triangular 3x3 matrices over GF(p) with equal superdiagonal.

    An element is a pair (a, b): superdiagonal a (twice) and corner b, so
    (a, b)(c, d) = (0, a*c); characteristic p, cube zero.
    """
    _require_prime(p)
    q = p * p
    pairs = [(i // p, i % p) for i in range(q)]
    idx = lambda a, b: a * p + b
    add = tuple(
        tuple(idx((a1 + a2) % p, (b1 + b2) % p) for (a2, b2) in pairs)
        for (a1, b1) in pairs
    )
    mul = tuple(
        tuple(idx(0, a1 * a2 % p) for (a2, _) in pairs) for (a1, _) in pairs
    )
    names = tuple(f"({a},{b})" for a, b in pairs)
    return make_ring(add, mul, label=f"N{p},{p}", element_names=names)


def ap(p: int) -> FiniteRing:
    """Row ring: 2x2 matrices with both nonzero entries in the first row.

    (x, y)(u, v) = (x*u, x*v); the element (1, 0) is a left identity.
    """
    _require_prime(p)
    q = p * p
    pairs = [(i // p, i % p) for i in range(q)]
    idx = lambda a, b: a * p + b
    add = tuple(
        tuple(idx((x1 + x2) % p, (y1 + y2) % p) for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    mul = tuple(
        tuple(idx(x1 * x2 % p, x1 * y2 % p) for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    names = tuple(f"({x},{y})" for x, y in pairs)
    return make_ring(add, mul, label=f"A{p}", element_names=names)


def ap0(p: int) -> FiniteRing:
    """Column ring: the transpose-side twin of ap(p), with a right identity.

    (x, y)(u, v) = (x*u, y*u); the element (1, 0) is a right identity.
    """
    _require_prime(p)
    q = p * p
    pairs = [(i // p, i % p) for i in range(q)]
    idx = lambda a, b: a * p + b
    add = tuple(
        tuple(idx((x1 + x2) % p, (y1 + y2) % p) for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    mul = tuple(
        tuple(idx(x1 * x2 % p, y1 * x2 % p) for (x2, y2) in pairs)
        for (x1, y1) in pairs
    )
    names = tuple(f"({x},{y})" for x, y in pairs)
    return make_ring(add, mul, label=f"A{p}^0", element_names=names)


def zpx_mod_x2(p: int) -> FiniteRing:
    """Truncated polynomial ring Z_p[x]/(x^2); local with radical (x)."""
    _require_prime(p)
    q = p * p
    pairs = [(i % p, i // p) for i in range(q)]  # (constant, x-coefficient)
    idx = lambda c0, c1: c0 + c1 * p
    add = tuple(
        tuple(idx((a0 + b0) % p, (a1 + b1) % p) for (b0, b1) in pairs)
        for (a0, a1) in pairs
    )
    mul = tuple(
        tuple(idx(a0 * b0 % p, (a0 * b1 + a1 * b0) % p) for (b0, b1) in pairs)
        for (a0, a1) in pairs
    )
    names = tuple(_poly_name(pair) for pair in pairs)
    return make_ring(add, mul, label=f"Z{p}[x]/(x^2)", element_names=names)


def direct_sum(r: FiniteRing, s: FiniteRing, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Componentwise ring structure on the product of the two index sets."""
    n = r.order * s.order
    if n > order_cap:
        raise OrderCapExceeded(f"combined order {n} exceeds the cap of {order_cap}")
    so = s.order
    pairs = [(i // so, i % so) for i in range(n)]
    add = tuple(
        tuple(r.add[a1][a2] * so + s.add[b1][b2] for (a2, b2) in pairs)
        for (a1, b1) in pairs
    )
    mul = tuple(
        tuple(r.mul[a1][a2] * so + s.mul[b1][b2] for (a2, b2) in pairs)
        for (a1, b1) in pairs
    )
    label = f"{r.label}+{s.label}" if r.label and s.label else None
    names = tuple(f"({r.element_name(a)},{s.element_name(b)})" for a, b in pairs)
    return make_ring(add, mul, label=label, element_names=names, order_cap=order_cap)


def matrix_ring(r: FiniteRing, k: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Ring of k x k matrices over r, with entries packed base |r| row-major."""
    if k < 1:
        raise ValueError("matrix dimension must be at least 1")
    n = r.order ** (k * k)
    if n > order_cap:
        raise OrderCapExceeded(f"order {n} exceeds the cap of {order_cap}")
    ro = r.order
    cells = k * k

    def entries(i: int) -> list[int]:
        out = []
        for _ in range(cells):
            out.append(i % ro)
            i //= ro
        return out

    def index(es: Sequence[int]) -> int:
        idx = 0
        for e in reversed(es):
            idx = idx * ro + e
        return idx

    mats = [entries(i) for i in range(n)]
    add = tuple(
        tuple(index([r.add[x][y] for x, y in zip(a, b)]) for b in mats) for a in mats
    )
    mul_rows = []
    for a in mats:
        row = []
        for b in mats:
            prod = []
            for i in range(k):
                for j in range(k):
                    acc = 0
                    for l in range(k):
                        acc = r.add[acc][r.mul[a[i * k + l]][b[l * k + j]]]
                    prod.append(acc)
            row.append(index(prod))
        mul_rows.append(tuple(row))
    label = f"M{k}({r.label})" if r.label else None
    return make_ring(add, tuple(mul_rows), label=label, order_cap=order_cap)


def ideal_members(ring: FiniteRing, ideal: object) -> tuple[int, ...]:
    """Normalize and validate a two-sided ideal given as a member collection.

    Accepts anything with `.members` (and optionally `.ring`) or a plain
    iterable of element indices; raises NotAnIdeal when the set is not a
    two-sided ideal of `ring`.
    """
    owner = getattr(ideal, "ring", None)
    if owner is not None and owner is not ring and owner != ring:
        raise NotAnIdeal("ideal belongs to a different ring")
    raw = getattr(ideal, "members", ideal)
    members = sorted(set(raw))
    if any(not isinstance(x, int) or not 0 <= x < ring.order for x in members):
        raise NotAnIdeal(f"members out of range for order {ring.order}")
    inside = set(members)
    if 0 not in inside:
        raise NotAnIdeal("an ideal must contain 0")
    for a in members:
        for b in members:
            if ring.add[a][b] not in inside:
                raise NotAnIdeal(f"not closed under addition: {a} + {b}")
        for r in range(ring.order):
            if ring.mul[r][a] not in inside:
                raise NotAnIdeal(f"not closed under left multiplication: {r} * {a}")
            if ring.mul[a][r] not in inside:
                raise NotAnIdeal(f"not closed under right multiplication: {a} * {r}")
    return tuple(members)


def quotient(ring: FiniteRing, ideal: object) -> FiniteRing:
    """Coset ring modulo a two-sided ideal; coset reps are least indices."""
    members = ideal_members(ring, ideal)
    n = ring.order
    coset_rep = [-1] * n
    for x in range(n):
        if coset_rep[x] >= 0:
            continue
        coset = sorted(ring.add[x][m] for m in members)
        rep = coset[0]
        for y in coset:
            coset_rep[y] = rep
    reps = sorted(set(coset_rep))
    index_of = {rep: i for i, rep in enumerate(reps)}
    add = tuple(
        tuple(index_of[coset_rep[ring.add[a][b]]] for b in reps) for a in reps
    )
    mul = tuple(
        tuple(index_of[coset_rep[ring.mul[a][b]]] for b in reps) for a in reps
    )
    names = tuple(f"[{ring.element_name(rep)}]" for rep in reps)
    return make_ring(add, mul, element_names=names)


class GeneratedSubring(NamedTuple):
    ring: FiniteRing
    embedding: tuple[int, ...]  # new index -> index in the ambient ring


def subring_generated(ring: FiniteRing, gens: Iterable[int]) -> GeneratedSubring:
    """Closure of `gens` under +, -, and *, reindexed from 0 with an embedding."""
    neg = [row.index(0) for row in ring.add]
    members = {0} | set(gens)
    while True:
        new = set()
        for a in members:
            if neg[a] not in members:
                new.add(neg[a])
            for b in members:
                for c in (ring.add[a][b], ring.mul[a][b]):
                    if c not in members:
                        new.add(c)
        if not new:
            break
        members |= new
    emb = tuple(sorted(members))
    index_of = {x: i for i, x in enumerate(emb)}
    add = tuple(tuple(index_of[ring.add[a][b]] for b in emb) for a in emb)
    mul = tuple(tuple(index_of[ring.mul[a][b]] for b in emb) for a in emb)
    names = tuple(ring.element_name(x) for x in emb)
    sub = make_ring(add, mul, element_names=names)
    return GeneratedSubring(sub, emb)


def characteristic(ring: FiniteRing) -> int:
    """Least m >= 1 with m*x = 0 for every x: the additive exponent."""
    return math.lcm(*addgroup.additive_orders(ring.add))


# --- ringtab text format -----------------------------------------------------
#
#   ringtab 1
#   order <n>
#   label <text>        (optional)
#   add
#   <n rows of n integers>
#   mul
#   <n rows of n integers>
#
# Lines whose first non-blank character is '#' are comments.


def format_ringtab(ring: FiniteRing) -> str:
    lines = ["ringtab 1", f"order {ring.order}"]
    if ring.label is not None:
        lines.append(f"label {ring.label}")
    lines.append("add")
    lines.extend(" ".join(str(v) for v in row) for row in ring.add)
    lines.append("mul")
    lines.extend(" ".join(str(v) for v in row) for row in ring.mul)
    return "\n".join(lines) + "\n"


def parse_ringtab(text: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError("unexpected end of ringtab input")
        line = lines[pos]
        pos += 1
        return line

    if take() != "ringtab 1":
        raise FormatError("missing 'ringtab 1' magic line")
    order_line = take()
    if not order_line.startswith("order "):
        raise FormatError("expected 'order <n>' line")
    try:
        n = int(order_line.split(None, 1)[1])
    except (IndexError, ValueError):
        raise FormatError("bad order line") from None
    label = None
    section = take()
    if section.startswith("label "):
        label = section.split(None, 1)[1]
        section = take()

    def read_table(header: str, got: str) -> list[list[int]]:
        if got != header:
            raise FormatError(f"expected '{header}' section, found {got!r}")
        rows = []
        for _ in range(n):
            try:
                rows.append([int(tok) for tok in take().split()])
            except ValueError:
                raise FormatError(f"non-integer entry in {header} table") from None
        return rows

    add = read_table("add", section)
    mul = read_table("mul", take())
    if pos != len(lines):
        raise FormatError(f"trailing content after mul table: {lines[pos]!r}")
    return make_ring(add, mul, label=label, order_cap=order_cap)


def write_ringtab(ring: FiniteRing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_ringtab(ring))


def read_ringtab(path, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ringtab(fh.read(), order_cap=order_cap)
