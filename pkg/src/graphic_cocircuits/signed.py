"""Signed graphs and their signed-graphic (frame) matroids."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import AxiomViolation, FormatError, PreconditionError
from .graph import (
    DEFAULT_EDGE_BOUND,
    HALF,
    LINK,
    LOOP,
    LOOSE,
    Multigraph,
    circles,
    is_circle,
    parse_graph,
)
from .matroid import CircuitMatroid, verify_axioms

PLUS, MINUS = 1, -1


@dataclass(frozen=True)
class SignedGraph:
    underlying: Multigraph
    sign: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        labels = set(self.underlying.labels)
        extra = set(self.sign) - labels
        if extra:
            raise ValueError(f"signs given for unknown edges {sorted(extra)}")
        full = {}
        for e in self.underlying.edges:
            s = self.sign.get(e.label)
            forced = MINUS if e.kind == HALF else PLUS if e.kind == LOOSE else None
            if s is None:
                s = forced if forced is not None else PLUS
            if s not in (PLUS, MINUS):
                raise ValueError(f"sign of {e.label!r} must be +1 or -1")
            if forced is not None and s != forced:
                raise ValueError(f"{e.kind} edge {e.label!r} must have sign {forced:+d}")
            full[e.label] = s
        object.__setattr__(self, "sign", full)

    @classmethod
    def all_positive(cls, G: Multigraph) -> SignedGraph:
        return cls(G, {})

    @classmethod
    def with_negative(cls, G: Multigraph, negative: Iterable[str]) -> SignedGraph:
        neg = set(negative)
        return cls(G, {e.label: MINUS if e.label in neg else PLUS
                       for e in G.edges if e.kind in (LINK, LOOP)})

    @property
    def edges(self):
        return self.underlying.edges


def _product(S: SignedGraph, X: Iterable[str]) -> int:
    out = PLUS
    for x in X:
        out *= S.sign[x]
    return out


def cycle_sign(S: SignedGraph, X: Iterable[str]) -> int:
    """Sign of a cycle: a circle of the underlying graph or a single half edge."""
    X = list(X)
    G = S.underlying
    half = len(X) == 1 and X[0] in G.edge_map and G.edge(X[0]).kind == HALF
    if not half and not is_circle(G, X):
        raise PreconditionError(f"{X} is not a cycle")
    return _product(S, X)


def is_balanced(S: SignedGraph) -> bool:
    """No negative cycle.  Links are 2-coloured by sign potential; half edges
    and negative loops are negative cycles on their own."""
    G = S.underlying
    pot: dict = {}
    for e in G.edges:
        if e.kind == HALF or (e.kind == LOOP and S.sign[e.label] == MINUS):
            return False
    adj: dict = {v: [] for v in G.vertices}
    for e in G.edges:
        if e.kind == LINK:
            a, b = e.ends
            adj[a].append((b, S.sign[e.label]))
            adj[b].append((a, S.sign[e.label]))
    for root in G.vertices:
        if root in pot:
            continue
        pot[root] = PLUS
        todo = [root]
        while todo:
            x = todo.pop()
            for y, s in adj[x]:
                want = pot[x] * s
                if y not in pot:
                    pot[y] = want
                    todo.append(y)
                elif pot[y] != want:
                    return False
    return True


def _cycles(S: SignedGraph, bound) -> list[tuple[frozenset, frozenset, int]]:
    """(edge set, vertex set, sign) of every cycle, half edges included."""
    G = S.underlying
    out = []
    for c in circles(G, bound=bound):
        verts = frozenset(v for x in c for v in G.edge(x).ends)
        out.append((frozenset(c), verts, _product(S, c)))
    for e in G.edges:
        if e.kind == HALF:
            out.append((frozenset([e.label]), frozenset(e.ends), MINUS))
    return out


def _connecting_paths(G: Multigraph, start: frozenset, end: frozenset):
    """Edge sets of paths of length >= 1 from a vertex of ``start`` to a vertex
    of ``end`` whose inner vertices avoid both sets."""
    inc: dict = {v: [] for v in G.vertices}
    for e in G.edges:
        if e.kind == LINK:
            a, b = e.ends
            inc[a].append((e.label, b))
            inc[b].append((e.label, a))
    for s in start:
        stack = [(s, (), {s})]
        while stack:
            x, path, used = stack.pop()
            for lab, y in inc[x]:
                if y in end:
                    yield frozenset(path + (lab,))
                elif y not in start and y not in used:
                    stack.append((y, path + (lab,), used | {y}))


def signed_circuits(S: SignedGraph, bound: int | None = DEFAULT_EDGE_BOUND) -> list[tuple[str, ...]]:
    """Positive cycles, tight handcuffs and loose handcuffs, minimal ones only.

    A loose edge is a circuit by itself, like a positive loop."""
    G = S.underlying
    pos = {e.label: i for i, e in enumerate(G.edges)}
    cycles = _cycles(S, bound)
    cands: set[frozenset] = {c for c, _, s in cycles if s == PLUS}
    cands |= {frozenset([e.label]) for e in G.edges if e.kind == LOOSE}
    negative = [(c, v) for c, v, s in cycles if s == MINUS]
    for (c1, v1), (c2, v2) in combinations(negative, 2):
        shared = len(v1 & v2)
        if shared == 1:
            cands.add(c1 | c2)
        elif shared == 0:
            for p in _connecting_paths(G, v1, v2):
                cands.add(c1 | c2 | p)
    minimal = [c for c in cands if not any(d < c for d in cands)]
    fam = [tuple(sorted(c, key=pos.__getitem__)) for c in minimal]
    return sorted(fam, key=lambda c: [pos[x] for x in c])


def signed_matroid(S: SignedGraph, bound: int | None = DEFAULT_EDGE_BOUND) -> CircuitMatroid:
    M = CircuitMatroid(S.underlying.labels, tuple(frozenset(c) for c in signed_circuits(S, bound)))
    if not verify_axioms(M):
        raise AxiomViolation("signed circuit family is not a matroid")
    return M


# ------------------------------------------------------------- text format

_SIGNS = {"+": PLUS, "-": MINUS, "−": MINUS}


def parse_signed_graph(text: str) -> SignedGraph:
    """Graph format with an optional trailing '+' or '-' per edge line."""
    stripped = []
    signs: list[int | None] = []
    for raw in text.splitlines():
        body, hash_, comment = raw.partition("#")
        toks = body.split()
        s = None
        if toks and toks[-1] in _SIGNS:
            s = _SIGNS[toks.pop()]
        stripped.append(" ".join(toks) + (hash_ + comment if hash_ else ""))
        if toks:
            signs.append(s)
        elif s is not None:
            raise FormatError(f"sign without an edge: {raw!r}")
    G = parse_graph("\n".join(stripped))
    sign = {e.label: s for e, s in zip(G.edges, signs) if s is not None}
    try:
        return SignedGraph(G, sign)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_signed_graph(S: SignedGraph) -> str:
    out = []
    for e in S.underlying.edges:
        ends = e.ends[:1] if e.kind == LOOP else e.ends
        mark = "+" if S.sign[e.label] == PLUS else "-"
        out.append(" ".join([f"{e.label}:", e.kind, *map(str, ends), mark]))
    return "\n".join(out) + "\n"
