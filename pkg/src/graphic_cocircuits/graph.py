"""Multigraphs with links, loops, half edges and loose edges.

Edge labels survive every operation so that graph/matroid cross-checks can
match elements by name.  Contracting a link keeps the name of its first
endpoint for the identified vertex.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import BoundExceeded, FormatError, PreconditionError, UnknownLabel
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid

LINK, LOOP, HALF, LOOSE = "link", "loop", "half", "loose"
KINDS = (LINK, LOOP, HALF, LOOSE)
DEFAULT_EDGE_BOUND = 30

Vertex = Hashable


@dataclass(frozen=True)
class Edge:
    label: str
    kind: str
    ends: tuple

    def __post_init__(self):
        n = {LINK: 2, LOOP: 2, HALF: 1, LOOSE: 0}.get(self.kind)
        if n is None:
            raise ValueError(f"unknown edge kind {self.kind!r}")
        ends = tuple(self.ends)
        if self.kind == LOOP and len(ends) == 1:
            ends = (ends[0], ends[0])
        if len(ends) != n:
            raise ValueError(f"{self.kind} {self.label!r} needs {n} endpoints, got {ends}")
        if self.kind == LINK and ends[0] == ends[1]:
            raise ValueError(f"link {self.label!r} has equal endpoints")
        if self.kind == LOOP and ends[0] != ends[1]:
            raise ValueError(f"loop {self.label!r} has distinct endpoints")
        object.__setattr__(self, "ends", ends)

    @property
    def vertices(self) -> tuple:
        return self.ends[:1] if self.kind == LOOP else self.ends

    def other(self, v):
        a, b = self.ends
        return b if a == v else a


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        vs = set(self.vertices)
        seen = set()
        for e in self.edges:
            if e.label in seen:
                raise ValueError(f"duplicate edge label {e.label!r}")
            seen.add(e.label)
            for v in e.ends:
                if v not in vs:
                    raise ValueError(f"edge {e.label!r} uses unknown vertex {v!r}")

    @classmethod
    def from_links(cls, pairs: Iterable[tuple], labels: Sequence[str] | None = None,
                   vertices: Iterable | None = None) -> Multigraph:
        pairs = list(pairs)
        if labels is None:
            labels = [f"{u}-{v}" for u, v in pairs]
            if len(set(labels)) != len(labels):
                labels = [f"e{i + 1}" for i in range(len(pairs))]
        verts = list(vertices) if vertices is not None else []
        for u, v in pairs:
            for x in (u, v):
                if x not in verts:
                    verts.append(x)
        edges = [Edge(lab, LOOP if u == v else LINK, (u, v)) for lab, (u, v) in zip(labels, pairs)]
        return cls(tuple(verts), tuple(edges))

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.label: e for e in self.edges}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def edge(self, label: str) -> Edge:
        try:
            return self.edge_map[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def degree(self, v) -> int:
        d = 0
        for e in self.edges:
            if e.kind == LINK:
                d += e.ends.count(v)
            elif e.kind == LOOP and e.ends[0] == v:
                d += 2
            elif e.kind == HALF and e.ends[0] == v:
                d += 1
        return d

    @cached_property
    def neighbors(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            if e.kind == LINK:
                a, b = e.ends
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def is_simple(self) -> bool:
        if any(e.kind != LINK for e in self.edges):
            return False
        pairs = [frozenset(e.ends) for e in self.edges]
        return len(set(pairs)) == len(pairs)

    def relabel_vertices(self, mapping: dict) -> Multigraph:
        return Multigraph(
            tuple(mapping.get(v, v) for v in self.vertices),
            tuple(Edge(e.label, e.kind, tuple(mapping.get(v, v) for v in e.ends)) for e in self.edges),
        )

    def with_edges(self, edges: Iterable[Edge], vertices: Iterable | None = None) -> Multigraph:
        return Multigraph(self.vertices if vertices is None else tuple(vertices), tuple(edges))


# ----------------------------------------------------------- basic operations


def delete_edge(G: Multigraph, e: str) -> Multigraph:
    G.edge(e)
    return G.with_edges(x for x in G.edges if x.label != e)


def delete_vertex(G: Multigraph, v) -> Multigraph:
    if v not in G.vertices:
        raise UnknownLabel(v)
    return Multigraph(
        tuple(x for x in G.vertices if x != v),
        tuple(x for x in G.edges if v not in x.ends),
    )


def contract_edge(G: Multigraph, e: str) -> Multigraph:
    """Contraction with the half-edge/loop rule for non-links.

    Link u-v: identify v into u; other u-v links become loops at u.
    Loop or half edge at v: v disappears together with its half edges and
    loops, and every link at v turns into a half edge at its other end.
    Loose edge: deleted.
    """
    edge = G.edge(e)
    if edge.kind == LOOSE:
        return delete_edge(G, e)
    if edge.kind == LINK:
        u, v = edge.ends
        out = []
        for x in G.edges:
            if x.label == e:
                continue
            ends = tuple(u if w == v else w for w in x.ends)
            kind = x.kind
            if kind == LINK and ends[0] == ends[1]:
                kind = LOOP
            out.append(Edge(x.label, kind, ends))
        return Multigraph(tuple(w for w in G.vertices if w != v), tuple(out))
    v = edge.ends[0]
    out = []
    for x in G.edges:
        if x.label == e:
            continue
        if v not in x.ends:
            out.append(x)
            continue
        if x.kind == LINK:
            out.append(Edge(x.label, HALF, (x.other(v),)))
        # half edges and loops at v vanish with v
    return Multigraph(tuple(w for w in G.vertices if w != v), tuple(out))


def is_connected(G: Multigraph) -> bool:
    if not G.vertices:
        return True
    adj = G.neighbors
    start = G.vertices[0]
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(G.vertices)


def bipartition(G: Multigraph) -> tuple[tuple, tuple] | None:
    """Proper 2-colouring over links (BFS), or None.  Loops make it impossible."""
    if any(e.kind == LOOP for e in G.edges):
        return None
    adj = G.neighbors
    side: dict = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return None
    return (
        tuple(v for v in G.vertices if side[v] == 0),
        tuple(v for v in G.vertices if side[v] == 1),
    )


# ------------------------------------------------------------------ circles


def circles(G: Multigraph, bound: int | None = DEFAULT_EDGE_BOUND) -> list[tuple[str, ...]]:
    """Edge sets of all cycles, loops giving 1-circles and parallel links 2-circles.

    Each cycle is found exactly once: from its least edge e = (u, v), walk
    from v back to u over larger edges without repeating a vertex.  Circles
    are sorted internally by edge position and then as a family.
    """
    if bound is not None and len(G.edges) > bound:
        raise BoundExceeded("circles", len(G.edges), bound)
    inc: dict = {v: [] for v in G.vertices}
    for i, e in enumerate(G.edges):
        if e.kind == LINK:
            a, b = e.ends
            inc[a].append((i, b))
            inc[b].append((i, a))
    found: list[tuple[int, ...]] = []
    for i, e in enumerate(G.edges):
        if e.kind == LOOP:
            found.append((i,))
            continue
        if e.kind != LINK:
            continue
        u, v = e.ends
        stack = [(v, [i], {u, v})]
        while stack:
            x, path, used = stack.pop()
            for j, y in inc[x]:
                if j <= i:
                    continue
                if y == u:
                    found.append(tuple(sorted(path + [j])))
                elif y not in used:
                    stack.append((y, path + [j], used | {y}))
    found.sort()
    labels = [e.label for e in G.edges]
    return [tuple(labels[j] for j in c) for c in found]


def is_circle(G: Multigraph, X: Iterable[str]) -> bool:
    X = list(X)
    if not X or len(set(X)) != len(X):
        return False
    try:
        edges = [G.edge(x) for x in X]
    except UnknownLabel:
        return False
    if len(edges) == 1:
        return edges[0].kind == LOOP
    if any(e.kind != LINK for e in edges):
        return False
    deg = Counter(v for e in edges for v in e.ends)
    if any(d != 2 for d in deg.values()):
        return False
    adj: dict = {v: [] for v in deg}
    for e in edges:
        a, b = e.ends
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(deg))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(deg)


def contract_circle(G: Multigraph, X: Sequence[str]) -> Multigraph:
    """G/X: contract the links of X one by one; members of X that have turned
    into loops by then are deleted (matroid contraction of a loop)."""
    if not is_circle(G, X):
        raise PreconditionError(f"{list(X)} is not a circle")
    H = G
    for x in X:
        if H.edge(x).kind == LINK:
            H = contract_edge(H, x)
        else:
            H = delete_edge(H, x)
    return H


# ------------------------------------------------------------- connectivity


def tutte_connectivity(G: Multigraph, bound: int | None = DEFAULT_EDGE_BOUND) -> float:
    """Least k with an edge bipartition (A, B), min(|A|,|B|) >= k and exactly k
    shared vertices; ``math.inf`` when there is none."""
    if not is_connected(G):
        raise PreconditionError("tutte_connectivity needs a connected graph")
    m = len(G.edges)
    if bound is not None and m > bound:
        raise BoundExceeded("tutte_connectivity", m, bound)
    if m < 2:
        return math.inf
    vindex = {v: i for i, v in enumerate(G.vertices)}
    ev = [sum(1 << vindex[v] for v in set(e.ends)) for e in G.edges]
    size = 1 << m
    vm = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        vm[mask] = vm[mask ^ low] | ev[low.bit_length() - 1]
    full = size - 1
    best = math.inf
    pc = [0] * size
    for mask in range(1, size):
        pc[mask] = pc[mask >> 1] + (mask & 1)
    for rest in range(0, 1 << (m - 1)):
        a = 1 | (rest << 1)
        if a == full:
            continue
        b = full ^ a
        k = bin(vm[a] & vm[b]).count("1")
        if k < best and min(pc[a], pc[b]) >= k:
            best = k
            if best <= 1:
                break
    return best


def is_three_connected(G: Multigraph) -> bool:
    """Tutte 3-connectivity.  For graphs with at least four vertices this is
    'simple and no vertex cut of size < 3'; smaller graphs go to the
    exhaustive definition."""
    if len(G.vertices) < 4 or any(e.kind in (HALF, LOOSE) for e in G.edges):
        if not is_connected(G):
            return False
        return tutte_connectivity(G, bound=None) >= 3
    if not G.is_simple():
        return False
    adj = G.neighbors
    verts = list(G.vertices)

    def connected_without(skip: set) -> bool:
        rest = [v for v in verts if v not in skip]
        seen = {rest[0]}
        todo = [rest[0]]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in skip and y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(rest)

    if not connected_without(set()):
        return False
    return all(connected_without({a, b}) for a, b in combinations(verts, 2))


# ---------------------------------------------------------------- isomorphism


def _count_tables(G: Multigraph):
    idx = {v: i for i, v in enumerate(G.vertices)}
    n = len(G.vertices)
    links = [[0] * n for _ in range(n)]
    loops = [0] * n
    halves = [0] * n
    loose = 0
    for e in G.edges:
        if e.kind == LINK:
            a, b = idx[e.ends[0]], idx[e.ends[1]]
            links[a][b] += 1
            links[b][a] += 1
        elif e.kind == LOOP:
            loops[idx[e.ends[0]]] += 1
        elif e.kind == HALF:
            halves[idx[e.ends[0]]] += 1
        else:
            loose += 1
    return links, loops, halves, loose


def _vertex_colors(tables) -> list[list[int]]:
    colorings = []
    for links, loops, halves, _ in tables:
        n = len(loops)
        colorings.append([(sum(links[i]), loops[i], halves[i]) for i in range(n)])
    colorings = _rename(colorings)
    for _ in range(len(colorings[0]) + 1):
        refined = []
        for (links, *_), col in zip(tables, colorings):
            n = len(col)
            refined.append(
                [
                    (col[i], tuple(sorted((col[j], links[i][j]) for j in range(n) if links[i][j])))
                    for i in range(n)
                ]
            )
        refined = _rename(refined)
        if all(len(set(r)) == len(set(c)) for r, c in zip(refined, colorings)):
            return refined
        colorings = refined
    return colorings


def _rename(colorings):
    names: dict = {}
    for key in sorted({k for c in colorings for k in c}):
        names[key] = len(names)
    return [[names[k] for k in c] for c in colorings]


def graph_iso(G: Multigraph, H: Multigraph) -> dict | None:
    """Vertex bijection preserving link multiplicities, loops, half edges and the
    number of loose edges; None if there is none."""
    if len(G.vertices) != len(H.vertices) or len(G.edges) != len(H.edges):
        return None
    if Counter(e.kind for e in G.edges) != Counter(e.kind for e in H.edges):
        return None
    tg, th = _count_tables(G), _count_tables(H)
    if tg[3] != th[3]:
        return None
    n = len(G.vertices)
    if n == 0:
        return {}
    cg, ch = _vertex_colors([tg, th])
    if Counter(cg) != Counter(ch):
        return None
    lg, lh = tg[0], th[0]
    size = Counter(cg)
    order: list[int] = []
    left = set(range(n))
    while left:
        x = min(left, key=lambda i: (-sum(1 for o in order if lg[i][o]), size[cg[i]], i))
        order.append(x)
        left.discard(x)
    cands: dict[int, list[int]] = {}
    for j in range(n):
        cands.setdefault(ch[j], []).append(j)
    m = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        x = order[k]
        for y in cands[cg[x]]:
            if used[y]:
                continue
            if any(lg[x][order[j]] != lh[y][m[order[j]]] for j in range(k)):
                continue
            m[x] = y
            used[y] = True
            if extend(k + 1):
                return True
            used[y] = False
        m[x] = -1
        return False

    if not extend(0):
        return None
    return {G.vertices[i]: H.vertices[m[i]] for i in range(n)}


def graph_invariant(G: Multigraph) -> tuple:
    """Isomorphism-invariant fingerprint (refined colour multiset + counts)."""
    t = _count_tables(G)
    (col,) = _vertex_colors([t])
    return (len(G.vertices), tuple(sorted(Counter(e.kind for e in G.edges).items())),
            tuple(sorted(Counter(col).values())), _colour_profile(t, col))


def _colour_profile(t, col) -> tuple:
    links, loops, halves, loose = t
    n = len(col)
    return tuple(sorted(
        (sum(links[i]), loops[i], halves[i],
         tuple(sorted(sum(links[j]) for j in range(n) if links[i][j])))
        for i in range(n)
    )) + (loose,)


class IsoClassStore:
    """Deduplicates graphs up to isomorphism: fingerprint bucket + explicit iso."""

    def __init__(self):
        self._buckets: dict[tuple, list[tuple[Multigraph, object]]] = {}

    def lookup(self, G: Multigraph):
        for H, value in self._buckets.get(graph_invariant(G), ()):
            if graph_iso(G, H) is not None:
                return H, value
        return None

    def add(self, G: Multigraph, value=None) -> None:
        self._buckets.setdefault(graph_invariant(G), []).append((G, value))

    def __len__(self):
        return sum(len(b) for b in self._buckets.values())


# ------------------------------------------------------------- cycle matroid


def cycle_matroid(G: Multigraph) -> BinaryMatroid:
    """Vertex-edge incidence matrix over GF(2), one column per link."""
    bad = [e.label for e in G.edges if e.kind != LINK]
    if bad:
        raise PreconditionError(f"cycle matroid needs links only; offending edges {bad}")
    idx = {v: i for i, v in enumerate(G.vertices)}
    cols = [(1 << idx[e.ends[0]]) | (1 << idx[e.ends[1]]) for e in G.edges]
    return BinaryMatroid(G.labels, Gf2Matrix.from_columns(cols, len(G.vertices)))


# ---------------------------------------------------------------- minors


def _simple_adjacency(G: Multigraph) -> dict[frozenset, set]:
    """Simple underlying graph; vertices renamed to singleton branch sets."""
    adj: dict[frozenset, set] = {frozenset([i]): set() for i in range(len(G.vertices))}
    idx = {v: frozenset([i]) for i, v in enumerate(G.vertices)}
    for e in G.edges:
        if e.kind == LINK:
            a, b = idx[e.ends[0]], idx[e.ends[1]]
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _key(v: frozenset) -> tuple:
    return tuple(sorted(v))


class _Target:
    def __init__(self, H: Multigraph):
        if not H.is_simple() or not is_connected(H) or len(H.vertices) < 2:
            raise PreconditionError("minor target must be a connected simple graph")
        self.graph = H
        self.n = len(H.vertices)
        self.m = len(H.edges)
        self.idx = {v: i for i, v in enumerate(H.vertices)}
        adj = [set() for _ in range(self.n)]
        for e in H.edges:
            a, b = self.idx[e.ends[0]], self.idx[e.ends[1]]
            adj[a].add(b)
            adj[b].add(a)
        self.adj = adj
        self.min_degree = min(len(a) for a in adj)
        self.order = sorted(range(self.n), key=lambda i: -len(adj[i]))


def _reduce(adj: dict[frozenset, set], min_degree: int) -> dict[frozenset, set]:
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj, key=_key):
            if v not in adj:
                continue
            d = len(adj[v])
            if d < min(min_degree, 2):
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif d == 2 and min_degree >= 3:
                a, b = sorted(adj[v], key=_key)
                merged = a | v
                for w in (v, a):
                    for x in adj[w]:
                        adj[x].discard(w)
                ns = (adj.pop(v) | adj.pop(a)) - {v, a}
                adj[merged] = ns
                for x in ns:
                    adj[x].add(merged)
                changed = True
    return adj


def _edge_count(adj) -> int:
    return sum(len(ns) for ns in adj.values()) // 2


def _contract(adj, u, w):
    merged = u | w
    out = {}
    for x, ns in adj.items():
        if x in (u, w):
            continue
        out[x] = {merged if y in (u, w) else y for y in ns}
    out[merged] = (adj[u] | adj[w]) - {u, w}
    return out


def _drop(adj, v):
    return {x: ns - {v} for x, ns in adj.items() if x != v}


def _spanning_copy(adj, target: _Target) -> dict | None:
    verts = sorted(adj, key=_key)
    m: dict[int, frozenset] = {}
    used: set = set()

    def extend(k):
        if k == target.n:
            return True
        h = target.order[k]
        need = len(target.adj[h])
        for v in verts:
            if v in used or len(adj[v]) < need:
                continue
            if any(m[o] not in adj[v] for o in target.adj[h] if o in m):
                continue
            m[h] = v
            used.add(v)
            if extend(k + 1):
                return True
            used.discard(v)
            del m[h]
        return False

    return dict(m) if extend(0) else None


def _components(adj) -> list[set]:
    seen: set = set()
    comps = []
    for s in sorted(adj, key=_key):
        if s in seen:
            continue
        comp = {s}
        todo = [s]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    todo.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _search(adj, target: _Target, failed: set) -> dict | None:
    adj = _reduce(adj, target.min_degree)
    if len(adj) < target.n or _edge_count(adj) < target.m:
        return None
    comps = _components(adj)
    if len(comps) > 1:
        for comp in comps:
            if len(comp) >= target.n:
                hit = _search({v: adj[v] for v in comp}, target, failed)
                if hit is not None:
                    return hit
        return None
    key = frozenset(frozenset((a, b)) for a, ns in adj.items() for b in ns) | frozenset(
        [frozenset([v]) for v in adj]
    )
    if key in failed:
        return None
    if len(adj) == target.n:
        hit = _spanning_copy(adj, target)
    else:
        hit = None
        verts = sorted(adj, key=_key)
        for u in verts:
            for w in sorted(adj[u], key=_key):
                if _key(u) < _key(w):
                    hit = _search(_contract(adj, u, w), target, failed)
                    if hit is not None:
                        return hit
        for v in verts:
            hit = _search(_drop(adj, v), target, failed)
            if hit is not None:
                return hit
    if hit is None:
        failed.add(key)
    return hit


def find_minor_model(G: Multigraph, H: Multigraph, bound: int | None = DEFAULT_EDGE_BOUND,
                     max_target_vertices: int = 8) -> dict | None:
    """Branch sets {H-vertex: set of G-vertices} of an H-minor in G, or None.

    Searches by contracting/deleting on the simple underlying graph, each
    vertex carrying the set of original vertices merged into it; vertices of
    degree < 2 are dropped and (when H has minimum degree >= 3) degree-2
    vertices are suppressed.  Half edges, loose edges and loops never help a
    simple connected target and are ignored.
    """
    if bound is not None and len(G.edges) > bound:
        raise BoundExceeded("has_graph_minor", len(G.edges), bound)
    target = _Target(H)
    if target.n > max_target_vertices:
        raise BoundExceeded("has_graph_minor target vertices", target.n, max_target_vertices)
    hit = _search(_simple_adjacency(G), target, set())
    if hit is None:
        return None
    return {H.vertices[h]: frozenset(G.vertices[i] for i in bs) for h, bs in hit.items()}


def has_graph_minor(G: Multigraph, H: Multigraph, **kw) -> bool:
    return find_minor_model(G, H, **kw) is not None


def is_minor_model(G: Multigraph, H: Multigraph, model: dict) -> bool:
    """Independent check: disjoint connected branch sets realising H's edges."""
    sets = [set(model[h]) for h in H.vertices]
    if any(not s for s in sets):
        return False
    allv = [v for s in sets for v in s]
    if len(allv) != len(set(allv)):
        return False
    adj = G.neighbors
    for s in sets:
        start = next(iter(s))
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y in s and y not in seen:
                    seen.add(y)
                    todo.append(y)
        if seen != s:
            return False
    for e in H.edges:
        a, b = set(model[e.ends[0]]), set(model[e.ends[1]])
        if not any(y in b for x in a for y in adj[x]):
            return False
    return True


class MinorOracle:
    """has_graph_minor for a fixed target, cached per isomorphism class of the
    simplified input."""

    def __init__(self, H: Multigraph, bound: int | None = DEFAULT_EDGE_BOUND):
        self.target = H
        self.bound = bound
        self.store = IsoClassStore()
        self.calls = 0
        self.misses = 0

    def __call__(self, G: Multigraph) -> bool:
        self.calls += 1
        S = simplify(G)
        hit = self.store.lookup(S)
        if hit is not None:
            return hit[1]
        self.misses += 1
        result = has_graph_minor(S, self.target, bound=self.bound)
        self.store.add(S, result)
        return result


def simplify(G: Multigraph) -> Multigraph:
    """Drop loops, half and loose edges and merge parallel links."""
    seen = set()
    edges = []
    for e in G.edges:
        if e.kind != LINK:
            continue
        key = frozenset(e.ends)
        if key in seen:
            continue
        seen.add(key)
        edges.append(e)
    return G.with_edges(edges)


# ------------------------------------------------------------- text format


def parse_graph(text: str) -> Multigraph:
    """One edge per line: ``[label:] link u v | loop v | half v | loose``.
    Unlabelled edges are named e1, e2, ... by line order; '#' starts a comment."""
    edges = []
    verts: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        label = None
        toks = line.split()
        if toks[0].endswith(":") and len(toks[0]) > 1:
            label = toks[0][:-1]
            toks = toks[1:]
        elif ":" in toks[0]:
            label, first = toks[0].split(":", 1)
            toks = [first] + toks[1:]
        if not toks:
            raise FormatError(f"line {lineno}: missing edge kind")
        kind, args = toks[0], toks[1:]
        need = {LINK: 2, LOOP: 1, HALF: 1, LOOSE: 0}.get(kind)
        if need is None:
            raise FormatError(f"line {lineno}: unknown edge kind {kind!r}")
        if len(args) != need:
            raise FormatError(f"line {lineno}: {kind} takes {need} vertices")
        if kind == LINK and args[0] == args[1]:
            raise FormatError(f"line {lineno}: link with equal endpoints (use 'loop')")
        if label is None:
            label = f"e{len(edges) + 1}"
        for v in args:
            if v not in verts:
                verts.append(v)
        edges.append(Edge(label, kind, tuple(args)))
    labels = [e.label for e in edges]
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate edge labels")
    return Multigraph(tuple(verts), tuple(edges))


def format_graph(G: Multigraph) -> str:
    out = []
    for e in G.edges:
        ends = e.ends[:1] if e.kind == LOOP else e.ends
        out.append(" ".join([f"{e.label}:", e.kind, *map(str, ends)]))
    return "\n".join(out) + "\n"
