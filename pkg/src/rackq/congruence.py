"""Equivalence relations on finite racks: classification, quotients,
homomorphisms and kernels.

A relation is stored as a Partition of {0..n-1} in restricted-growth
form (blocks numbered by first appearance).  A partition respects an
operation * when a ~ c and b ~ d imply a*b ~ c*d; it is a full rack
congruence when it respects both the primary and the inverse operation,
and a half congruence when it respects exactly one of them.  Quotients
exist exactly for full congruences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .tables import Table, inverse_table, validate

# Partition enumeration is Bell-number growth (Bell(8) = 4140, Bell(9) = 21147).
MAX_CONGRUENCE_ORDER = 8


class CongruenceClass(Enum):
    """Which of the two rack operations a relation respects.

    RIGHT_ONLY and LEFT_ONLY are the half congruences: the relation
    respects only the primary (resp. only the inverse) operation.
    """

    BOTH = "Both"
    RIGHT_ONLY = "RightOnly"
    LEFT_ONLY = "LeftOnly"
    NEITHER = "Neither"


class NotACongruenceError(ValueError):
    """Raised when a quotient is requested for a non-congruence; carries
    the classification so callers can tell a half congruence apart from
    a relation respecting neither operation."""

    def __init__(self, classification: CongruenceClass):
        super().__init__(f"not a full rack congruence: {classification.value}")
        self.classification = classification


def _rgs(labels) -> tuple[int, ...]:
    """Relabel block indices by first appearance."""
    seen: dict = {}
    out = []
    for v in labels:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """Partition of {0..n-1}, normalised to a restricted growth string."""

    block_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.block_of) == 0:
            raise ValueError("partition of the empty set")
        object.__setattr__(self, "block_of", _rgs(self.block_of))

    @classmethod
    def from_blocks(cls, blocks, order: int | None = None) -> "Partition":
        """Build from an iterable of blocks of indices; blocks must be
        disjoint and cover {0..order-1}."""
        blocks = [sorted(b) for b in blocks]
        elements = [x for b in blocks for x in b]
        if order is None:
            order = len(elements)
        if sorted(elements) != list(range(order)):
            raise ValueError(f"blocks do not partition 0..{order - 1}: {blocks}")
        labels = [0] * order
        for i, b in enumerate(blocks):
            for x in b:
                labels[x] = i
        return cls(tuple(labels))

    @property
    def order(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1

    def together(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Members of each block, in block order (ascending inside)."""
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(b) for b in out)


def partitions(n: int):
    """All partitions of {0..n-1}, in restricted-growth-string order."""
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield Partition(tuple(a))
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def parse_partition(literal: str, order: int) -> Partition:
    """Parse the CLI literal, e.g. "0,2|1,3"."""
    try:
        blocks = [[int(tok) for tok in part.split(",")] for part in literal.split("|")]
    except ValueError:
        raise ValueError(f"malformed partition literal: {literal!r}")
    return Partition.from_blocks(blocks, order)


def format_partition(p: Partition) -> str:
    return "|".join(",".join(str(x) for x in b) for b in p.blocks())


# ---------------------------------------------------------------------------
# congruence classification and quotients

def _respects(rows, blk) -> bool:
    # Naive quadruple sweep; fine at the supported orders.
    n = len(rows)
    for a in range(n):
        for c in range(n):
            if blk[a] != blk[c]:
                continue
            for b in range(n):
                for d in range(n):
                    if blk[b] != blk[d]:
                        continue
                    if blk[rows[a][b]] != blk[rows[c][d]]:
                        return False
    return True


def classify_relation(r: Table, p: Partition) -> CongruenceClass:
    """Test the congruence condition for both rack operations, exhaustively
    over quadruples a ~ c, b ~ d."""
    if p.order != r.order:
        raise ValueError(f"partition order {p.order} != rack order {r.order}")
    if not validate(r).is_rack:
        raise ValueError("not a rack")
    right = _respects(r.rows, p.block_of)
    left = _respects(inverse_table(r).rows, p.block_of)
    if right and left:
        return CongruenceClass.BOTH
    if right:
        return CongruenceClass.RIGHT_ONLY
    if left:
        return CongruenceClass.LEFT_ONLY
    return CongruenceClass.NEITHER


def try_induced_table(m: Table, p: Partition):
    """Attempt [x] * [y] = [x*y] on blocks.

    Returns (table, None) when well defined, else (None, (a, b, c, d))
    with a ~ c, b ~ d but a*b and c*d in different blocks.
    """
    blk = p.block_of
    k = p.num_blocks
    cell = [[None] * k for _ in range(k)]
    setter = [[None] * k for _ in range(k)]
    for x in range(m.order):
        for y in range(m.order):
            v = blk[m.rows[x][y]]
            bx, by = blk[x], blk[y]
            if cell[bx][by] is None:
                cell[bx][by] = v
                setter[bx][by] = (x, y)
            elif cell[bx][by] != v:
                a, b = setter[bx][by]
                return None, (a, b, x, y)
    return Table(tuple(tuple(row) for row in cell)), None


@dataclass(frozen=True)
class QuotientRack:
    """Quotient table on blocks, plus the block membership for reporting."""

    table: Table
    blocks: tuple[tuple[int, ...], ...]


def quotient(r: Table, p: Partition) -> QuotientRack:
    """Quotient rack by a full congruence; block index = growth-string label.

    Raises NotACongruenceError carrying the classification when p respects
    at most one operation.
    """
    cls = classify_relation(r, p)
    if cls is not CongruenceClass.BOTH:
        raise NotACongruenceError(cls)
    table, conflict = try_induced_table(r, p)
    assert conflict is None
    return QuotientRack(table, p.blocks())


def enumerate_congruences(r: Table) -> list[tuple[Partition, CongruenceClass]]:
    """Every partition of the elements with its classification, in
    restricted-growth-string order."""
    if r.order > MAX_CONGRUENCE_ORDER:
        raise ValueError(
            f"order {r.order} > {MAX_CONGRUENCE_ORDER}: partition count is Bell-number growth"
        )
    return [(p, classify_relation(r, p)) for p in partitions(r.order)]


def congruences_report(r: Table) -> list[dict]:
    """JSON-ready report: [{"blocks": [[..]], "class": "Both"}, ...]."""
    return [
        {"blocks": [list(b) for b in p.blocks()], "class": cls.value}
        for p, cls in enumerate_congruences(r)
    ]


def no_half_congruences(r: Table) -> bool:
    """True iff no partition of r is a half congruence (the finite-rack
    guarantee: on a finite rack, respecting the primary operation already
    forces respecting the inverse one)."""
    return all(
        cls in (CongruenceClass.BOTH, CongruenceClass.NEITHER)
        for _, cls in enumerate_congruences(r)
    )


# ---------------------------------------------------------------------------
# subracks and homomorphisms

def is_subrack(r: Table, subset) -> bool:
    """Closure of a nonempty subset under both rack operations."""
    sub = set(subset)
    if not sub:
        raise ValueError("subrack test requires a nonempty subset")
    if any(not 0 <= x < r.order for x in sub):
        raise ValueError("subset contains out-of-range indices")
    inv = inverse_table(r)
    return all(
        r.rows[x][y] in sub and inv.rows[x][y] in sub for x in sub for y in sub
    )


@dataclass(frozen=True)
class FiniteMap:
    """Function between index sets, as an image array."""

    domain_order: int
    codomain_order: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.domain_order:
            raise ValueError("image length != domain order")
        if any(not 0 <= v < self.codomain_order for v in self.image):
            raise ValueError("image entry outside codomain")

    def __call__(self, x: int) -> int:
        return self.image[x]


def all_maps(domain_order: int, codomain_order: int):
    """Every function between the index sets (codomain_order ** domain_order)."""
    for image in itertools.product(range(codomain_order), repeat=domain_order):
        yield FiniteMap(domain_order, codomain_order, image)


def is_homomorphism(f: FiniteMap, r: Table, s: Table) -> bool:
    """Whether f respects the primary operation on all pairs.

    When it does, it must respect the inverse operation too; that is
    asserted rather than returned, since a violation would mean the
    tables are inconsistent.
    """
    if f.domain_order != r.order or f.codomain_order != s.order:
        raise ValueError("map dimensions do not match the tables")
    phi = f.image
    holds = all(
        phi[r.rows[x][y]] == s.rows[phi[x]][phi[y]]
        for x in range(r.order)
        for y in range(r.order)
    )
    if holds:
        r_inv, s_inv = inverse_table(r), inverse_table(s)
        assert all(
            phi[r_inv.rows[x][y]] == s_inv.rows[phi[x]][phi[y]]
            for x in range(r.order)
            for y in range(r.order)
        ), "homomorphism fails to respect the inverse operation"
    return holds


def find_homomorphisms(r: Table, s: Table) -> list[FiniteMap]:
    """Exhaustive homomorphism search (use only for small domain orders)."""
    return [f for f in all_maps(r.order, s.order) if is_homomorphism(f, r, s)]


def kernel_partition(f: FiniteMap, r: Table, s: Table) -> Partition:
    """Partition of the domain into fibres of f; always a full congruence."""
    if not is_homomorphism(f, r, s):
        raise ValueError("kernel requires a homomorphism")
    return Partition(f.image)


def first_isomorphism_check(f: FiniteMap, r: Table, s: Table) -> bool:
    """Check that the quotient by the kernel of f is isomorphic to the
    image of f, via the induced map on blocks."""
    ker = kernel_partition(f, r, s)
    q = quotient(r, ker)
    image = sorted(set(f.image))
    assert is_subrack(s, image)
    pos = {e: i for i, e in enumerate(image)}
    img_rows = tuple(tuple(pos[s.rows[a][b]] for b in image) for a in image)
    # induced map: block of x -> position of f(x); well defined by kernel
    psi = [None] * q.table.order
    for x in range(r.order):
        b = ker.block_of[x]
        v = pos[f.image[x]]
        assert psi[b] in (None, v)
        psi[b] = v
    if sorted(psi) != list(range(len(image))):
        return False
    k = q.table.order
    return all(
        psi[q.table.rows[i][j]] == img_rows[psi[i]][psi[j]]
        for i in range(k)
        for j in range(k)
    )
