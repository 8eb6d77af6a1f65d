"""Binary (matrix-defined) and circuit-defined matroids.

Element subsets are handled internally as int bitmasks over ground-set
positions; labels only appear at the API boundary.  Circuits of a binary
matroid are the minimal nonzero supports of the null space of its
representation, cocircuits those of the row space.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import AxiomViolation, BoundExceeded, PreconditionError, UnknownLabel
from .gf2 import Gf2Matrix, rref, standard_form, vector_rank

DEFAULT_BOUND = 20


# ------------------------------------------------------------- mask helpers


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _span_supports(basis: Sequence[int]) -> list[int]:
    """All nonzero vectors in the span of ``basis`` (Gray-code walk)."""
    out = []
    v = 0
    for i in range(1, 1 << len(basis)):
        v ^= basis[(i & -i).bit_length() - 1]
        out.append(v)
    return out


def minimal_supports(vectors: Iterable[int]) -> list[int]:
    """Inclusion-minimal nonzero masks, sorted by (size, mask)."""
    ordered = sorted({v for v in vectors if v}, key=lambda v: (popcount(v), v))
    kept: list[int] = []
    for v in ordered:
        if not any(c & v == c for c in kept):
            kept.append(v)
    return kept


def _kernel_basis(cols: Sequence[int]) -> tuple[int, list[int]]:
    """Rank of ``cols`` and a basis of their dependencies (as element masks)."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, col in enumerate(cols):
        v, combo = col, 1 << j
        while v:
            top = v.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        if v:
            pivots[v.bit_length() - 1] = (v, combo)
        else:
            kernel.append(combo)
    return len(pivots), kernel


def _row_space_basis(cols: Sequence[int], nrows: int) -> list[int]:
    """Nonzero rows of the reduced matrix whose columns are ``cols``."""
    m = Gf2Matrix.from_columns(list(cols), nrows)
    reduced, pivots = rref(m)
    return [r for r in reduced.rows[: len(pivots)]]


def _check_bound(what: str, n: int, bound: int | None) -> None:
    if bound is not None and n > bound:
        raise BoundExceeded(what, n, bound)


# ---------------------------------------------------------- shared structure


@dataclass
class _Struct:
    """Label-free view of a matroid used by isomorphism and minor search."""

    n: int
    rank: int
    circuits: list[int]
    cocircuits: list[int]

    @cached_property
    def signature(self) -> tuple:
        return (
            self.n,
            self.rank,
            tuple(sorted(popcount(c) for c in self.circuits)),
            tuple(sorted(popcount(c) for c in self.cocircuits)),
        )

    @cached_property
    def circuit_lists(self) -> list[list[int]]:
        return [bits(c) for c in self.circuits]

    @cached_property
    def cocircuit_lists(self) -> list[list[int]]:
        return [bits(c) for c in self.cocircuits]

    @cached_property
    def pair_invariant(self) -> list[list[int]]:
        # one 16-bit counter per (kind, size) packed into a single int
        n = self.n
        pair = [[0] * n for _ in range(n)]
        for offset, family in ((0, self.circuit_lists), (n + 1, self.cocircuit_lists)):
            for members in family:
                w = 1 << (16 * (len(members) + offset))
                for a, b in combinations(members, 2):
                    pair[a][b] += w
                    pair[b][a] += w
        return pair


def _struct_from_columns(cols: Sequence[int], nrows: int) -> _Struct:
    rank, kernel = _kernel_basis(cols)
    circuits = minimal_supports(_span_supports(kernel))
    cocircuits = minimal_supports(_span_supports(_row_space_basis(cols, nrows)))
    return _Struct(len(cols), rank, circuits, cocircuits)


def _element_colors(structs: Sequence[_Struct]) -> list[list[int]]:
    """Colour refinement over circuit/cocircuit incidence, shared naming."""
    colors = []
    for s in structs:
        c = []
        for e in range(s.n):
            bit = 1 << e
            c.append(
                (
                    tuple(sorted(popcount(x) for x in s.circuits if x & bit)),
                    tuple(sorted(popcount(x) for x in s.cocircuits if x & bit)),
                )
            )
        colors.append(c)
    colors = _rename(colors)
    for _ in range(3):
        refined = []
        for s, col in zip(structs, colors):
            acc: list[list] = [[] for _ in range(s.n)]
            for tag, family in ((0, s.circuit_lists), (1, s.cocircuit_lists)):
                for members in family:
                    shape = (tag, tuple(sorted(col[m] for m in members)))
                    for m in members:
                        acc[m].append(shape)
            refined.append([(col[e], tuple(sorted(acc[e]))) for e in range(s.n)])
        refined = _rename(refined)
        if all(len(set(r)) == len(set(c)) for r, c in zip(refined, colors)):
            return refined
        colors = refined
    return colors


def _rename(colorings: list[list]) -> list[list[int]]:
    names: dict = {}
    for key in sorted({k for c in colorings for k in c}):
        names[key] = len(names)
    return [[names[k] for k in c] for c in colorings]


def _find_iso(a: _Struct, b: _Struct) -> list[int] | None:
    """Bijection ``m`` (a-index -> b-index) carrying circuits onto circuits."""
    if a.signature != b.signature:
        return None
    n = a.n
    if n == 0:
        return []
    col_a, col_b = _element_colors([a, b])
    if Counter(col_a) != Counter(col_b):
        return None
    pa, pb = a.pair_invariant, b.pair_invariant
    class_size = Counter(col_a)

    order: list[int] = []
    left = set(range(n))
    while left:
        if not order:
            x = min(left, key=lambda e: (class_size[col_a[e]], e))
        else:
            x = min(
                left,
                key=lambda e: (-sum(1 for o in order if pa[e][o]), class_size[col_a[e]], e),
            )
        order.append(x)
        left.discard(x)
    pos = {x: k for k, x in enumerate(order)}

    checks: list[list[list[int]]] = [[] for _ in range(n)]
    for members in a.circuit_lists:
        checks[max(pos[m] for m in members)].append(members)
    co_checks: list[list[list[int]]] = [[] for _ in range(n)]
    for members in a.cocircuit_lists:
        co_checks[max(pos[m] for m in members)].append(members)
    b_circ = set(b.circuits)
    b_cocirc = set(b.cocircuits)
    cands: dict[int, list[int]] = {}
    for e in range(n):
        cands.setdefault(col_b[e], []).append(e)

    m = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        row_a = pa[x]
        for y in cands.get(col_a[x], ()):
            if used[y]:
                continue
            row_b = pb[y]
            if any(row_a[order[j]] != row_b[m[order[j]]] for j in range(k)):
                continue
            m[x] = y
            if all(sum(1 << m[i] for i in c) in b_circ for c in checks[k]) and all(
                sum(1 << m[i] for i in c) in b_cocirc for c in co_checks[k]
            ):
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
            m[x] = -1
        return False

    return m if extend(0) else None


# ------------------------------------------------------------ matroid types


@dataclass(frozen=True)
class BinaryMatroid:
    """Vector matroid over GF(2): one labelled column per element."""

    elements: tuple[str, ...]
    rep: Gf2Matrix

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("element labels must be unique")
        if len(self.elements) != self.rep.ncols:
            raise ValueError(f"{len(self.elements)} labels for {self.rep.ncols} columns")

    @classmethod
    def from_matrix(cls, m: Gf2Matrix, labels: Sequence[str] | None = None) -> BinaryMatroid:
        if labels is None:
            labels = [f"e{j + 1}" for j in range(m.ncols)]
        return cls(tuple(labels), m)

    @classmethod
    def from_columns(cls, labels: Sequence[str], cols: Sequence[int], nrows: int) -> BinaryMatroid:
        return cls(tuple(labels), Gf2Matrix.from_columns(list(cols), nrows))

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def cols(self) -> list[int]:
        return self.rep.columns()

    @cached_property
    def rank(self) -> int:
        return vector_rank(self.cols)

    @property
    def size(self) -> int:
        return len(self.elements)

    def mask(self, labels: Iterable[str]) -> int:
        out = 0
        for e in labels:
            if e not in self.index:
                raise UnknownLabel(e)
            out |= 1 << self.index[e]
        return out

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def rank_mask(self, mask: int) -> int:
        cols = self.cols
        return vector_rank(cols[i] for i in bits(mask))

    @cached_property
    def circuit_masks(self) -> list[int]:
        _, kernel = _kernel_basis(self.cols)
        return minimal_supports(_span_supports(kernel))

    @cached_property
    def cocircuit_masks(self) -> list[int]:
        return minimal_supports(_span_supports(_row_space_basis(self.cols, self.rep.nrows)))

    @cached_property
    def struct(self) -> _Struct:
        return _Struct(self.size, self.rank, self.circuit_masks, self.cocircuit_masks)

    def is_loop(self, e: str) -> bool:
        if e not in self.index:
            raise UnknownLabel(e)
        return self.cols[self.index[e]] == 0

    def is_coloop(self, e: str) -> bool:
        if e not in self.index:
            raise UnknownLabel(e)
        full = (1 << self.size) - 1
        return self.rank_mask(full & ~(1 << self.index[e])) < self.rank


@dataclass(frozen=True)
class CircuitMatroid:
    """Matroid given by its circuit family; no representation assumed."""

    elements: tuple[str, ...]
    circuits: tuple[frozenset, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("element labels must be unique")
        idx = {e: i for i, e in enumerate(self.elements)}
        fam = []
        for c in self.circuits:
            c = frozenset(c)
            for e in c:
                if e not in idx:
                    raise UnknownLabel(e)
            fam.append(c)
        key = lambda c: (len(c), sorted(idx[e] for e in c))  # noqa: E731
        uniq = sorted(set(fam), key=key)
        object.__setattr__(self, "circuits", tuple(uniq))

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def mask(self, labels: Iterable[str]) -> int:
        out = 0
        for e in labels:
            if e not in self.index:
                raise UnknownLabel(e)
            out |= 1 << self.index[e]
        return out

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    @cached_property
    def circuit_masks(self) -> list[int]:
        return sorted((self.mask(c) for c in self.circuits), key=lambda v: (popcount(v), v))

    def independent_mask(self, mask: int) -> bool:
        return not any(c & mask == c for c in self.circuit_masks)

    def rank_mask(self, mask: int) -> int:
        # greedy is exact for matroids
        chosen = 0
        for i in bits(mask):
            if self.independent_mask(chosen | (1 << i)):
                chosen |= 1 << i
        return popcount(chosen)

    @cached_property
    def rank(self) -> int:
        return self.rank_mask((1 << self.size) - 1)

    @cached_property
    def cocircuit_masks(self) -> list[int]:
        # minimal X with r(E - X) < r(E), by increasing size
        n, full, r = self.size, (1 << self.size) - 1, self.rank
        found: list[int] = []
        for k in range(1, n + 1):
            for combo in combinations(range(n), k):
                x = sum(1 << i for i in combo)
                if any(c & x == c for c in found):
                    continue
                if self.rank_mask(full & ~x) < r:
                    found.append(x)
        return sorted(found, key=lambda v: (popcount(v), v))

    @cached_property
    def struct(self) -> _Struct:
        return _Struct(self.size, self.rank, self.circuit_masks, self.cocircuit_masks)


Matroid = Union[BinaryMatroid, CircuitMatroid]


# --------------------------------------------------------------- operations


def rank_subset(M: Matroid, A: Iterable[str]) -> int:
    return M.rank_mask(M.mask(A))


def _sorted_family(M: Matroid, masks: Iterable[int]) -> list[tuple[str, ...]]:
    return [M.labels(m) for m in sorted(masks, key=lambda m: bits(m))]


def circuits(M: Matroid, bound: int | None = DEFAULT_BOUND) -> list[tuple[str, ...]]:
    """Circuits as label tuples in ground-set order; family sorted lexicographically
    by element positions.  A CircuitMatroid returns its stored family."""
    _check_bound("circuits", M.size, bound)
    return _sorted_family(M, M.circuit_masks)


def cocircuits(M: Matroid, bound: int | None = DEFAULT_BOUND) -> list[tuple[str, ...]]:
    _check_bound("cocircuits", M.size, bound)
    return _sorted_family(M, M.cocircuit_masks)


def dual(M: BinaryMatroid) -> BinaryMatroid:
    n = M.size
    reduced, pivots = rref(M.rep)
    r = len(pivots)
    if r == 0:
        return BinaryMatroid(M.elements, Gf2Matrix.identity(n))
    top = Gf2Matrix(r, n, reduced.rows[:r])
    std, perm = standard_form(top)
    k = n - r
    permuted = [std.rows[i] >> r for i in range(r)] + [1 << j for j in range(k)]
    cols = [0] * n
    for pos, orig in enumerate(perm):
        cols[orig] = permuted[pos]
    return BinaryMatroid(M.elements, Gf2Matrix.from_columns(cols, k))


def _compress(word: int, drop: Sequence[int]) -> int:
    for p in sorted(drop, reverse=True):
        low = word & ((1 << p) - 1)
        word = ((word >> (p + 1)) << p) | low
    return word


def _project(cols: Sequence[int], contract_idx: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduce every column modulo the span of the contracted columns.

    Returns the reduced columns (still indexed like ``cols``) and the row
    positions that became redundant."""
    basis: dict[int, int] = {}
    for j in contract_idx:
        v = cols[j]
        for p in sorted(basis, reverse=True):
            if v >> p & 1:
                v ^= basis[p]
        if v:
            basis[v.bit_length() - 1] = v
    order = sorted(basis, reverse=True)
    out = []
    for v in cols:
        for p in order:
            if v >> p & 1:
                v ^= basis[p]
        out.append(v)
    return out, order


def delete(M: Matroid, T: Iterable[str]) -> Matroid:
    tmask = M.mask(T)
    keep = [e for i, e in enumerate(M.elements) if not tmask >> i & 1]
    if isinstance(M, BinaryMatroid):
        idx = [M.index[e] for e in keep]
        return BinaryMatroid(tuple(keep), M.rep.select_columns(idx))
    fam = [c for c in M.circuits if not (c & set(M.labels(tmask)))]
    return CircuitMatroid(tuple(keep), tuple(fam))


def contract(M: Matroid, T: Iterable[str]) -> Matroid:
    tmask = M.mask(T)
    tidx = bits(tmask)
    keep_idx = [i for i in range(M.size) if not tmask >> i & 1]
    keep = tuple(M.elements[i] for i in keep_idx)
    if isinstance(M, BinaryMatroid):
        reduced, dropped = _project(M.cols, tidx)
        cols = [_compress(reduced[i], dropped) for i in keep_idx]
        return BinaryMatroid.from_columns(keep, cols, M.rep.nrows - len(dropped))
    tl = set(M.labels(tmask))
    pieces = [frozenset(c - tl) for c in M.circuits]
    pieces = [p for p in pieces if p]
    minimal = [p for p in pieces if not any(q < p for q in pieces)]
    return CircuitMatroid(keep, tuple(minimal))


def is_isomorphic(M: Matroid, N: Matroid, bound: int | None = DEFAULT_BOUND) -> dict[str, str] | None:
    """Label bijection E(M) -> E(N) preserving circuits, or None."""
    _check_bound("is_isomorphic", max(M.size, N.size), bound)
    if M.size != N.size:
        return None
    a, b = M.struct, N.struct
    if set(M.elements) == set(N.elements):
        # try the identity first: cheap and the common case for identity checks
        ident = [N.index[e] for e in M.elements]
        circ_b = set(b.circuits)
        if a.signature == b.signature and all(
            sum(1 << ident[i] for i in c) in circ_b for c in a.circuit_lists
        ):
            return {e: e for e in M.elements}
    m = _find_iso(a, b)
    if m is None:
        return None
    return {M.elements[i]: N.elements[m[i]] for i in range(M.size)}


@dataclass(frozen=True)
class MinorWitness:
    """``delete(contract(M, contracted), deleted)`` is isomorphic to N via ``mapping``."""

    deleted: tuple[str, ...]
    contracted: tuple[str, ...]
    mapping: dict = field(compare=False)


def _parallel_classes(cols: Sequence[int], idx: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i in idx:
        if cols[i]:
            groups.setdefault(cols[i], []).append(i)
    return [g for g in groups.values() if len(g) > 1]


def has_minor(M: BinaryMatroid, N: Matroid, bound: int | None = DEFAULT_BOUND) -> MinorWitness | None:
    """Search for S, T with M/T\\S isomorphic to N.

    Contract sets T are independent of size r(M)-r(N) and are tried before
    delete sets; both run in lexicographic order of ground-set positions, so
    the first witness found is the least one in that order.
    """
    _check_bound("has_minor", M.size, bound)
    if not isinstance(M, BinaryMatroid):
        return _has_minor_circuits(M, N)
    target = N.struct
    n = M.size
    t = M.rank - target.rank
    s = (n - M.rank) - (target.n - target.rank)
    if target.n > n or t < 0 or s < 0:
        return None
    want_sizes = target.signature[2]
    target_loopless = all(popcount(c) > 1 for c in target.circuits)
    target_simple = all(popcount(c) > 2 for c in target.circuits)
    nrows = M.rep.nrows
    cols = M.cols

    for T in combinations(range(n), t):
        if vector_rank(cols[i] for i in T) < t:
            continue
        tmask = sum(1 << i for i in T)
        reduced, dropped = _project(cols, T)
        rest = [i for i in range(n) if not tmask >> i & 1]
        proj = {i: _compress(reduced[i], dropped) for i in rest}
        prow = nrows - len(dropped)
        _, kernel = _kernel_basis([proj[i] for i in rest])
        local = minimal_supports(_span_supports(kernel))
        circ = [sum(1 << rest[j] for j in bits(c)) for c in local]
        sizes = [popcount(c) for c in circ]

        forced = 0
        if target_loopless:
            forced = sum(1 << i for i in rest if proj[i] == 0)
            if popcount(forced) > s:
                continue
        classes = _parallel_classes(proj, rest) if target_simple else []

        free = [i for i in rest if not forced >> i & 1]
        need = s - popcount(forced)
        for extra in combinations(free, need):
            smask = forced | sum(1 << i for i in extra)
            if classes and any(sum(1 for i in g if not smask >> i & 1) > 1 for g in classes):
                continue
            kept_sizes = sorted(sz for c, sz in zip(circ, sizes) if not c & smask)
            if tuple(kept_sizes) != want_sizes:
                continue
            keep = [i for i in rest if not smask >> i & 1]
            cand = _struct_from_columns([proj[i] for i in keep], prow)
            m = _find_iso(cand, target)
            if m is None:
                continue
            mapping = {M.elements[keep[j]]: N.elements[m[j]] for j in range(len(keep))}
            return MinorWitness(M.labels(smask), M.labels(tmask), mapping)
    return None


def _has_minor_circuits(M: CircuitMatroid, N: Matroid) -> MinorWitness | None:
    target = N.struct
    n = M.size
    t = M.rank - target.rank
    s = (n - M.rank) - (target.n - target.rank)
    if target.n > n or t < 0 or s < 0:
        return None
    for T in combinations(range(n), t):
        tmask = sum(1 << i for i in T)
        if not M.independent_mask(tmask):
            continue
        minor_t = contract(M, M.labels(tmask))
        for S in combinations(minor_t.elements, s):
            cand = delete(minor_t, S)
            m = _find_iso(cand.struct, target)
            if m is not None:
                mapping = {cand.elements[j]: N.elements[m[j]] for j in range(cand.size)}
                return MinorWitness(tuple(sorted(S, key=M.index.get)), M.labels(tmask), mapping)
    return None


# -------------------------------------------------------------- connectivity


@dataclass(frozen=True)
class Separation:
    sideX: tuple[str, ...]
    sideY: tuple[str, ...]
    order: int


def _lambda_scan(M: Matroid, bound: int | None):
    """Yield (X mask, Y mask, r(X)+r(Y)-r(M)) over bipartitions with element 0 in X."""
    n = M.size
    _check_bound("separation search", n, bound)
    if n < 2:
        return
    full = (1 << n) - 1
    r = M.rank
    for rest in range(0, 1 << (n - 1)):
        x = 1 | (rest << 1)
        if x == full:
            continue
        y = full & ~x
        yield x, y, M.rank_mask(x) + M.rank_mask(y) - r


def _insert(basis: tuple[int, ...], v: int) -> tuple[int, ...]:
    # xor basis kept in decreasing order of leading bit
    for b in basis:
        v = min(v, v ^ b)
    if not v:
        return basis
    return tuple(sorted(basis + (v,), reverse=True))


def first_separation(M: BinaryMatroid, k: int) -> tuple[int, int] | None:
    """First (X, Y) masks with r(X)+r(Y)-r(M) <= k-1 and both sides of size
    >= k, element 0 in X, ordered by |X| then lexicographically.

    Elements are assigned to X or Y one at a time while both xor bases grow;
    r(X')+r(Y') only increases, so a partial assignment reaching r(M)+k is cut."""
    n, r, cols = M.size, M.rank, M.cols
    if k < 1 or n < 2 * k:
        return None
    best = None
    stack = [(1, 1, _insert((), cols[0]), (), 1)]
    while stack:
        i, x, bx, by, sx = stack.pop()
        if len(bx) + len(by) - r >= k or (best is not None and sx > best[0]):
            continue
        if i == n:
            if sx >= k and n - sx >= k:
                key = (sx, bits(x))
                if best is None or key < best:
                    best = key
            continue
        stack.append((i + 1, x | (1 << i), _insert(bx, cols[i]), by, sx + 1))
        stack.append((i + 1, x, bx, _insert(by, cols[i]), sx))
    if best is None:
        return None
    x = sum(1 << i for i in best[1])
    return x, ((1 << n) - 1) & ~x


def k_separations(M: Matroid, k: int, bound: int | None = DEFAULT_BOUND) -> list[Separation]:
    out = []
    for x, y, lam in _lambda_scan(M, bound):
        if min(popcount(x), popcount(y)) >= k and lam <= k - 1:
            out.append(Separation(M.labels(x), M.labels(y), k))
    return out


def connectivity(M: Matroid, bound: int | None = DEFAULT_BOUND) -> float:
    """Least k admitting a k-separation, or ``math.inf``."""
    if isinstance(M, BinaryMatroid):
        _check_bound("separation search", M.size, bound)
        k = 1
        while 2 * k <= M.size:
            if first_separation(M, k) is not None:
                return k
            k += 1
        return math.inf
    best = math.inf
    for x, y, lam in _lambda_scan(M, bound):
        k = lam + 1
        if k < best and min(popcount(x), popcount(y)) >= k:
            best = k
            if best == 1:
                break
    return best


def connected_components(M: Matroid) -> list[tuple[str, ...]]:
    """Classes of the relation 'lie on a common circuit' (loops/coloops alone)."""
    parent = list(range(M.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in M.circuit_masks:
        members = bits(c)
        for other in members[1:]:
            a, b = find(members[0]), find(other)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(M.size):
        groups.setdefault(find(i), []).append(i)
    return [tuple(M.elements[i] for i in g) for g in sorted(groups.values())]


# ------------------------------------------------------------------- axioms


def verify_axioms(M: CircuitMatroid | Sequence[Iterable[str]]) -> bool:
    """Circuit axioms: no empty circuit, no nesting, weak elimination."""
    family = M.circuits if isinstance(M, CircuitMatroid) else [frozenset(c) for c in M]
    labels = sorted({e for c in family for e in c}, key=str)
    idx = {e: i for i, e in enumerate(labels)}
    masks = [sum(1 << idx[e] for e in c) for c in family]
    if any(m == 0 for m in masks):
        return False
    uniq = set(masks)
    if len(uniq) != len(masks):
        masks = list(uniq)
    for a, b in combinations(masks, 2):
        if a & b == a or a & b == b:
            return False
    memo: dict[int, bool] = {}
    for a, b in combinations(masks, 2):
        common = a & b
        union = a | b
        while common:
            low = common & -common
            target = union & ~low
            ok = memo.get(target)
            if ok is None:
                ok = any(c & target == c for c in masks)
                memo[target] = ok
            if not ok:
                return False
            common ^= low
    return True


def as_circuit_matroid(M: Matroid) -> CircuitMatroid:
    if isinstance(M, CircuitMatroid):
        return M
    return CircuitMatroid(M.elements, tuple(frozenset(M.labels(c)) for c in M.circuit_masks))


def require_matroid(M: CircuitMatroid) -> CircuitMatroid:
    if not verify_axioms(M):
        raise AxiomViolation("circuit family violates the circuit axioms")
    return M


# ------------------------------------------------------------------- sums


def direct_sum(M: BinaryMatroid, N: BinaryMatroid) -> BinaryMatroid:
    if set(M.elements) & set(N.elements):
        raise ValueError("direct_sum needs disjoint label sets")
    shift = M.rep.nrows
    cols = list(M.cols) + [c << shift for c in N.cols]
    return BinaryMatroid.from_columns(M.elements + N.elements, cols, shift + N.rep.nrows)


def two_sum(M: BinaryMatroid, N: BinaryMatroid, p: str, q: str) -> BinaryMatroid:
    """2-sum along basepoints p of M and q of N (both removed from the result).

    Built as (M (+) N + z)/z minus {p, q} with z = p + q, i.e. the parallel
    connection with its basepoint deleted."""
    if set(M.elements) & set(N.elements):
        raise ValueError("two_sum needs disjoint label sets")
    for mat, e in ((M, p), (N, q)):
        if e not in mat.index:
            raise UnknownLabel(e)
        if mat.is_loop(e) or mat.is_coloop(e):
            raise PreconditionError(f"basepoint {e!r} is a loop or coloop")
    shift = M.rep.nrows
    cols = list(M.cols) + [c << shift for c in N.cols]
    z = M.cols[M.index[p]] | (N.cols[N.index[q]] << shift)
    reduced, dropped = _project(cols + [z], [len(cols)])
    labels = list(M.elements) + list(N.elements)
    keep = [i for i, e in enumerate(labels) if e not in (p, q)]
    out = [_compress(reduced[i], dropped) for i in keep]
    return BinaryMatroid.from_columns(
        tuple(labels[i] for i in keep), out, shift + N.rep.nrows - len(dropped)
    )


def two_sum_circuits(M: Matroid, N: Matroid, p: str, q: str) -> CircuitMatroid:
    """2-sum by the circuit formula (independent of any representation)."""
    cm = [frozenset(M.labels(c)) for c in M.circuit_masks]
    cn = [frozenset(N.labels(c)) for c in N.circuit_masks]
    fam = [c for c in cm if p not in c] + [c for c in cn if q not in c]
    fam += [(a - {p}) | (b - {q}) for a in cm if p in a for b in cn if q in b]
    labels = tuple(e for e in M.elements if e != p) + tuple(e for e in N.elements if e != q)
    return CircuitMatroid(labels, tuple(fam))
