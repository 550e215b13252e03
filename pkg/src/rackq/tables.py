"""Finite magmas, racks and quandles as operation tables.

A magma of order n is stored as an n x n table of element indices: the
entry at (row x, column y) is x * y, read as "y acting on x".  Column y
of the table is then the symmetry map S_y : x -> x * y, and the magma is
right invertible exactly when every column is a permutation.

A rack is a right-invertible, right self-distributive magma; a quandle
is an idempotent rack.  All values here are immutable and all functions
are pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

Perm = tuple[int, ...]

# Column-tuple search visits up to (n!)^n candidates before pruning; the
# pruned search does n = 5 in about a second, n = 6 is out of reach.
MAX_ENUM_ORDER = 5

PRIMARY = "primary"
INVERSE = "inverse"


class RackParseError(ValueError):
    """Malformed ``.rack`` text, with 1-based line/column of the offender."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Table:
    """Operation table of a finite magma on {0..n-1}.

    Structural well-formedness (square shape, entries in range) is
    enforced at construction; it is distinct from any axiom holding.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("table must have positive order")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {x} has {len(row)} entries, expected {n}")
            for y, e in enumerate(row):
                if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
                    raise ValueError(
                        f"entry {e!r} at row {x}, column {y} out of range 0..{n - 1}"
                    )

    @property
    def order(self) -> int:
        return len(self.rows)

    def op(self, x: int, y: int) -> int:
        """x * y."""
        return self.rows[x][y]

    def column(self, y: int) -> Perm:
        """The map S_y : x -> x * y as an image tuple."""
        return tuple(row[y] for row in self.rows)


@dataclass(frozen=True)
class AxiomReport:
    """Exhaustive truth values of the three magma axioms."""

    idempotent: bool
    right_invertible: bool
    right_self_distributive: bool
    is_rack: bool
    is_quandle: bool

    def __post_init__(self):
        assert self.is_rack == (self.right_invertible and self.right_self_distributive)
        assert self.is_quandle == (self.is_rack and self.idempotent)


# ---------------------------------------------------------------------------
# permutation helpers

def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation x -> p[q[x]] (apply q first)."""
    return tuple(p[q[x]] for x in range(len(p)))


def perm_order(p: Perm) -> int:
    """Least k >= 1 with p^k the identity (lcm of cycle lengths)."""
    seen = [False] * len(p)
    result = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        result = math.lcm(result, length)
    return result


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


# ---------------------------------------------------------------------------
# axioms

def validate(m: Table) -> AxiomReport:
    """Check idempotence, right invertibility and right self-distributivity.

    Each flag is the exhaustive truth value over all pairs (triples for
    distributivity).  Right invertibility holds iff every column of the
    table is a permutation.
    """
    n = m.order
    rows = m.rows
    idem = all(rows[x][x] == x for x in range(n))
    rinv = all(is_permutation(m.column(y)) for y in range(n))
    rsd = True
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[rows[x][z]][rows[y][z]]:
                    rsd = False
                    break
            if not rsd:
                break
        if not rsd:
            break
    rack = rinv and rsd
    return AxiomReport(idem, rinv, rsd, rack, rack and idem)


def _require_rack(m: Table) -> None:
    report = validate(m)
    if not report.is_rack:
        raise ValueError(
            "not a rack (right_invertible=%s, right_self_distributive=%s)"
            % (report.right_invertible, report.right_self_distributive)
        )


def inverse_table(m: Table) -> Table:
    """Table of the right-inverse operation.

    Entry (x, y) is the image of x under the inverse of column-permutation
    S_y, so that (x *' y) * y = x and (x * y) *' y = x on all pairs.
    """
    n = m.order
    inv_cols = []
    for y in range(n):
        col = m.column(y)
        if not is_permutation(col):
            raise ValueError(f"column {y} is not a permutation; not right invertible")
        inv_cols.append(invert_perm(col))
    return Table(tuple(tuple(inv_cols[y][x] for y in range(n)) for x in range(n)))


def exponent(r: Table) -> int:
    """Least k >= 1 with S_y^k the identity for every y.

    Finite for any finite rack (each symmetry lies in the symmetric group,
    so k <= n! always works).
    """
    _require_rack(r)
    return math.lcm(*(perm_order(r.column(y)) for y in range(r.order)))


def mutually_distributive(r: Table) -> bool:
    """Whether the primary and inverse operations distribute over each other.

    Tests (x*y) *' z = (x *' z) * (y *' z) and (x *' y) * z =
    (x * z) *' (y * z) over all triples, with *' from inverse_table.
    """
    _require_rack(r)
    n = r.order
    t = r.rows
    u = inverse_table(r).rows
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if u[t[x][y]][z] != t[u[x][z]][u[y][z]]:
                    return False
                if t[u[x][y]][z] != u[t[x][z]][t[y][z]]:
                    return False
    return True


# ---------------------------------------------------------------------------
# enumeration

def relabel(m: Table, p: Perm) -> Table:
    """Isomorphic copy of m under the relabelling x -> p[x]."""
    n = m.order
    q = invert_perm(p)
    return Table(tuple(tuple(p[m.rows[q[x]][q[y]]] for y in range(n)) for x in range(n)))


def canonical_form(m: Table) -> Table:
    """Lexicographically least table among all simultaneous relabellings."""
    best = None
    for p in itertools.permutations(range(m.order)):
        rows = relabel(m, p).rows
        if best is None or rows < best:
            best = rows
    return Table(best)


def enumerate_racks(n: int, quandles_only: bool = False, up_to_iso: bool = False) -> list[Table]:
    """All racks (or quandles) of order n, as operation tables.

    Searches over n-tuples of column permutations, so right invertibility
    is built in, and prunes by partial right self-distributivity.  The
    space is roughly (n!)^n, hence the hard bound n <= MAX_ENUM_ORDER.
    With up_to_iso, keeps one table per isomorphism class: the
    lexicographically least relabelling.  Output is sorted by table rows,
    so the result order is deterministic.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"order {n} outside supported range 1..{MAX_ENUM_ORDER}")
    perms = list(itertools.permutations(range(n)))
    cols: list[Perm | None] = [None] * n
    found: list[tuple[tuple[int, ...], ...]] = []

    def consistent(k: int) -> bool:
        # Right self-distributivity in column form: S_{S_z(y)} . S_z = S_z . S_y.
        # Check every (y, z) pair whose three involved columns are assigned
        # and involve the newly assigned index k.
        for y in range(k + 1):
            sy = cols[y]
            for z in range(k + 1):
                sz = cols[z]
                w = sz[y]
                if w > k:
                    continue
                if k not in (y, z, w):
                    continue
                sw = cols[w]
                if any(sw[sz[x]] != sz[sy[x]] for x in range(n)):
                    return False
        return True

    def search(k: int) -> None:
        if k == n:
            found.append(tuple(tuple(cols[y][x] for y in range(n)) for x in range(n)))
            return
        for p in perms:
            if quandles_only and p[k] != k:
                continue
            cols[k] = p
            if consistent(k):
                search(k + 1)
        cols[k] = None

    search(0)
    tables = [Table(rows) for rows in found]
    if up_to_iso:
        tables = list({canonical_form(t).rows: canonical_form(t) for t in tables}.values())
    return sorted(tables, key=lambda t: t.rows)


# ---------------------------------------------------------------------------
# example families

def trivial(n: int) -> Table:
    """The trivial quandle: x * y = x."""
    return Table(tuple((x,) * n for x in range(n)))


def constant_action(p: Perm) -> Table:
    """Constant action rack of a bijection: x * y = p[x] for every y."""
    if not is_permutation(p):
        raise ValueError("constant action requires a permutation")
    n = len(p)
    return Table(tuple((p[x],) * n for x in range(n)))


def dihedral(n: int) -> Table:
    """Dihedral quandle on Z_n: x * y = (2y - x) mod n."""
    return Table(tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n)))


def double_op(x: int, y: int) -> int:
    """x -> 2x on the integers; a one-sided inverse to halve_op, not invertible."""
    return 2 * x


def halve_op(x: int, y: int) -> int:
    """x -> floor(x/2) on the integers; undoes double_op but not conversely."""
    return x // 2


# ---------------------------------------------------------------------------
# .rack text format

def parse_rack(text: str) -> Table:
    """Parse the ``.rack`` format: order on the first data line, then one
    row of 0-based entries per line; '#' starts a comment line."""
    order = None
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise RackParseError(f"line {lineno}: expected order, got {line!r}", lineno)
            if order <= 0:
                raise RackParseError(f"line {lineno}: order must be positive", lineno)
            continue
        if len(rows) == order:
            raise RackParseError(f"line {lineno}: more than {order} rows", lineno)
        tokens = line.split()
        if len(tokens) != order:
            raise RackParseError(
                f"line {lineno}: expected {order} entries, got {len(tokens)}", lineno
            )
        entries = []
        for colno, tok in enumerate(tokens, start=1):
            try:
                e = int(tok)
            except ValueError:
                raise RackParseError(
                    f"line {lineno}, column {colno}: not an integer: {tok!r}",
                    lineno, colno,
                )
            if not 0 <= e < order:
                raise RackParseError(
                    f"line {lineno}, column {colno}: entry out of range 0..{order - 1}: {e}",
                    lineno, colno,
                )
            entries.append(e)
        rows.append(tuple(entries))
    if order is None:
        raise RackParseError("empty input")
    if len(rows) != order:
        raise RackParseError(f"expected {order} rows, got {len(rows)}")
    return Table(tuple(rows))


def format_rack(m: Table) -> str:
    lines = [str(m.order)]
    lines.extend(" ".join(str(e) for e in row) for row in m.rows)
    return "\n".join(lines) + "\n"
