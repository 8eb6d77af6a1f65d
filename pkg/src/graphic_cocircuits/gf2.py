"""Dense GF(2) matrices with rows packed into Python ints.

Bit ``j`` of a row word is the entry in column ``j``.  Python ints give
word-parallel XOR for free, which is all elimination needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FormatError, RankDeficient


@dataclass(frozen=True)
class Gf2Matrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row word has bits outside the column range")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> Gf2Matrix:
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for line in entries:
            if len(line) != ncols:
                raise ValueError("ragged matrix")
            word = 0
            for j, x in enumerate(line):
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not a bit")
                if x:
                    word |= 1 << j
            rows.append(word)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> Gf2Matrix:
        """Build from column words (bit ``i`` of a column word is row ``i``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            c = col
            while c:
                low = c & -c
                rows[low.bit_length() - 1] |= 1 << j
                c ^= low
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Gf2Matrix:
        return cls(nrows, ncols, (0,) * nrows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> int:
        word = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                word |= 1 << i
        return word

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= bit
                r ^= low
        return cols

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(self.ncols, self.nrows, tuple(self.columns()))

    def select_columns(self, idx: Sequence[int]) -> Gf2Matrix:
        cols = self.columns()
        return Gf2Matrix.from_columns([cols[j] for j in idx], self.nrows)

    def hstack(self, other: Gf2Matrix) -> Gf2Matrix:
        if other.nrows != self.nrows:
            raise ValueError("row counts differ")
        rows = tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows))
        return Gf2Matrix(self.nrows, self.ncols + other.ncols, rows)

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in line) for line in self.to_lists())


def vector_rank(vectors: Iterable[int]) -> int:
    """Rank of a collection of bit vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def rank(m: Gf2Matrix) -> int:
    return vector_rank(m.rows)


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row echelon form; zero rows are moved to the bottom."""
    work = list(m.rows)
    pivots: list[int] = []
    r = 0
    for col in range(m.ncols):
        if r == len(work):
            break
        bit = 1 << col
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return Gf2Matrix(m.nrows, m.ncols, tuple(work)), pivots


def standard_form(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Return ``([I | D], perm)`` where column ``k`` of the result is column
    ``perm[k]`` of ``m`` after row reduction.

    Pivot columns go first in increasing order, the rest keep their relative
    order.  The input is never permuted in place.
    """
    reduced, pivots = rref(m)
    if len(pivots) != m.nrows:
        raise RankDeficient(f"rank {len(pivots)} < {m.nrows} rows")
    pivot_set = set(pivots)
    perm = pivots + [j for j in range(m.ncols) if j not in pivot_set]
    return reduced.select_columns(perm), perm


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for k, j in enumerate(perm):
        inv[j] = k
    return inv


# ---------------------------------------------------------------- text format


def parse_matrix(text: str) -> tuple[Gf2Matrix, list[str] | None]:
    """Parse ``<rows> <cols>`` followed by 0/1 rows, with an optional
    ``#labels a b c`` line in front."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    labels = None
    if lines and lines[0].startswith("#labels"):
        labels = lines[0].split()[1:]
        lines = lines[1:]
    if not lines:
        raise FormatError("missing '<rows> <cols>' header")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise FormatError(f"bad header line {lines[0]!r}")
    nrows, ncols = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != nrows:
        raise FormatError(f"header says {nrows} rows, found {len(body)}")
    entries = []
    for ln in body:
        if len(ln) != ncols or set(ln) - {"0", "1"}:
            raise FormatError(f"bad matrix row {ln!r}")
        entries.append([int(ch) for ch in ln])
    if labels is not None:
        if len(labels) != ncols:
            raise FormatError(f"{len(labels)} labels for {ncols} columns")
        if len(set(labels)) != len(labels):
            raise FormatError("duplicate column labels")
    return Gf2Matrix.from_lists(entries, ncols), labels


def format_matrix(m: Gf2Matrix, labels: Sequence[str] | None = None) -> str:
    out = []
    if labels is not None:
        out.append("#labels " + " ".join(labels))
    out.append(f"{m.nrows} {m.ncols}")
    out.extend("".join(str(x) for x in line) for line in m.to_lists())
    return "\n".join(out) + "\n"
