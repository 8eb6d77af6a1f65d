"""Generating 3-connected graphs by edge additions and vertex splits, and
checking the K_{3,n} / K_{4,4} family characterizations against them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import catalog
from .catalog import FamilyName
from .errors import BoundExceeded, PreconditionError
from .graph import (
    DEFAULT_EDGE_BOUND,
    LINK,
    Edge,
    IsoClassStore,
    MinorOracle,
    Multigraph,
    circles,
    contract_circle,
    has_graph_minor,
    is_three_connected,
)
from .recognize import family_membership

O1, O2 = "O1", "O2"


@dataclass(frozen=True)
class ExtensionStep:
    """O1: ``detail`` is the new vertex pair.  O2: ``detail`` is
    (v, new vertex, neighbours kept by v, neighbours moved to the new vertex)."""

    kind: str
    detail: tuple

    def as_dict(self) -> dict:
        if self.kind == O1:
            return {"kind": O1, "pair": list(self.detail)}
        v, w, keep, moved = self.detail
        return {"kind": O2, "vertex": v, "new_vertex": w, "kept": list(keep), "moved": list(moved)}


def _fresh_label(G: Multigraph) -> str:
    used = set(G.labels)
    k = len(G.edges) + 1
    while f"x{k}" in used:
        k += 1
    return f"x{k}"


def _fresh_vertex(G: Multigraph, v) -> str:
    name = f"{v}'"
    while name in G.vertices:
        name += "'"
    return name


def _require_simple(G: Multigraph) -> None:
    if not G.is_simple():
        raise PreconditionError("O1/O2 need a simple graph")


def o1_extensions(G: Multigraph) -> list[tuple[Multigraph, ExtensionStep]]:
    """One graph per non-adjacent vertex pair, with the new edge appended."""
    _require_simple(G)
    adj = G.neighbors
    label = _fresh_label(G)
    out = []
    for u, v in combinations(G.vertices, 2):
        if v in adj[u]:
            continue
        H = G.with_edges(G.edges + (Edge(label, LINK, (u, v)),))
        out.append((H, ExtensionStep(O1, (u, v))))
    return out


def o2_splits(G: Multigraph) -> list[tuple[Multigraph, ExtensionStep]]:
    """Split each vertex of degree >= 4 into adjacent v, v' with every former
    neighbour going to exactly one side and both sides keeping >= 2 of them.

    Each unordered partition appears once: the first neighbour (in vertex
    order) always stays with v."""
    _require_simple(G)
    order = {v: i for i, v in enumerate(G.vertices)}
    adj = G.neighbors
    label = _fresh_label(G)
    out = []
    for v in G.vertices:
        nbrs = sorted(adj[v], key=order.__getitem__)
        d = len(nbrs)
        if d < 4:
            continue
        w = _fresh_vertex(G, v)
        rest = nbrs[1:]
        for k in range(2, d - 1):
            for moved in combinations(rest, k):
                moved_set = set(moved)
                keep = tuple(x for x in nbrs if x not in moved_set)
                edges = []
                for e in G.edges:
                    if v in e.ends and e.other(v) in moved_set:
                        edges.append(Edge(e.label, LINK, (w, e.other(v))))
                    else:
                        edges.append(e)
                edges.append(Edge(label, LINK, (v, w)))
                H = Multigraph(G.vertices + (w,), tuple(edges))
                out.append((H, ExtensionStep(O2, (v, w, keep, tuple(moved)))))
    return out


def is_wheel(G: Multigraph) -> bool:
    """Hub adjacent to every other vertex, the rest forming one cycle."""
    if not G.is_simple():
        return False
    n = len(G.vertices)
    if n < 4 or len(G.edges) != 2 * (n - 1):
        return False
    adj = G.neighbors
    for hub in G.vertices:
        if len(adj[hub]) != n - 1:
            continue
        rim = [v for v in G.vertices if v != hub]
        if any(len(adj[v] - {hub}) != 2 for v in rim):
            continue
        seen = {rim[0]}
        todo = [rim[0]]
        while todo:
            x = todo.pop()
            for y in adj[x] - {hub}:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) == len(rim):
            return True
    return False


@dataclass
class ClosureEntry:
    graph: Multigraph
    steps: tuple[ExtensionStep, ...]

    @property
    def edges(self) -> int:
        return len(self.graph.edges)


def negami_closure(H: Multigraph, max_edges: int, check: bool = True) -> list[ClosureEntry]:
    """All graphs reachable from H by O1/O2 with at most ``max_edges`` edges,
    one per isomorphism class, in breadth-first order.

    Every step adds exactly one edge, so level k holds the graphs with
    |E(H)| + k edges.  With ``check`` set, each new graph is asserted to be
    3-connected and to contain an H-minor."""
    if not is_three_connected(H):
        raise PreconditionError("seed graph must be 3-connected")
    if not H.is_simple():
        raise PreconditionError("seed graph must be simple")
    if is_wheel(H):
        raise PreconditionError("seed graph must not be a wheel")
    store = IsoClassStore()
    seed = ClosureEntry(H, ())
    store.add(H)
    out = [seed]
    level = [seed]
    while level and level[0].edges < max_edges:
        nxt = []
        for entry in level:
            for G, step in o1_extensions(entry.graph) + o2_splits(entry.graph):
                if store.lookup(G) is not None:
                    continue
                if check:
                    assert is_three_connected(G), f"{step} broke 3-connectivity"
                    assert has_graph_minor(G, H, bound=None), f"{step} lost the seed minor"
                store.add(G)
                nxt.append(ClosureEntry(G, entry.steps + (step,)))
        out.extend(nxt)
        level = nxt
    return out


# ------------------------------------------------------------ conditions

_K5 = MinorOracle(catalog.complete_graph(5), bound=None)
_K33 = MinorOracle(catalog.complete_bipartite(3, 3), bound=None)


def condition_iii(G: Multigraph, bound: int | None = DEFAULT_EDGE_BOUND) -> bool:
    """For every circle X, G/X has neither a K5- nor a K3,3-minor."""
    if bound is not None and len(G.edges) > bound:
        raise BoundExceeded("condition_iii", len(G.edges), bound)
    for X in circles(G, bound=None):
        H = contract_circle(G, X)
        if _K33(H) or _K5(H):
            return False
    return True


def family_conditions(G: Multigraph) -> dict[str, bool]:
    """Conditions (i)-(iii): 3-connected, a G17- or G19-minor, and
    condition_iii.  Later checks are skipped (False) once one fails."""
    res = {"three_connected": is_three_connected(G), "obstruction_minor": False, "circle_contractions": False}
    if not res["three_connected"]:
        return res
    res["obstruction_minor"] = (
        has_graph_minor(G, catalog.g17(), bound=None) or has_graph_minor(G, catalog.g19(), bound=None)
    )
    if res["obstruction_minor"]:
        res["circle_contractions"] = condition_iii(G, bound=None)
    return res


def family_members(n_max: int) -> list[FamilyName]:
    out = [FamilyName(tag, n) for n in range(5, n_max + 1)
           for tag in ("K3n", "K3nPlus1", "K3nPlus2", "K3nPlus3")]
    return out + [FamilyName("K44minus"), FamilyName("K44")]


@dataclass
class FamilyReport:
    members_checked: list[str] = field(default_factory=list)
    closure_sizes: dict[str, int] = field(default_factory=dict)
    closure_members: dict[str, list[str]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "members_checked": self.members_checked,
            "closure_sizes": self.closure_sizes,
            "closure_members": self.closure_members,
            "counterexamples": self.counterexamples,
        }


def verify_family_theorems(n_max: int = 6, edge_budget: int = 17) -> FamilyReport:
    """(1) every family member up to n_max satisfies (i)-(iii); (2) within the
    O1/O2 closures of K3,5 and K4,4 minus an edge, a graph satisfies (i)-(iii)
    exactly when it is a family member.  Violations are collected, not raised."""
    if n_max > 7:
        raise BoundExceeded("verify_family_theorems n_max", n_max, 7)
    t0 = time.perf_counter()
    rep = FamilyReport()
    for fam in family_members(n_max):
        conds = family_conditions(fam.graph())
        rep.members_checked.append(str(fam))
        if not all(conds.values()):
            rep.counterexamples.append({"graph": str(fam), "member": True, "conditions": conds})
    for name, seed in (("K35", catalog.complete_bipartite(3, 5)), ("K44-", catalog.k44_minus_e())):
        closure = negami_closure(seed, edge_budget)
        rep.closure_sizes[name] = len(closure)
        found = []
        for entry in closure:
            fam = family_membership(entry.graph)
            conds = family_conditions(entry.graph)
            if fam is not None:
                found.append(str(fam))
            if all(conds.values()) != (fam is not None):
                rep.counterexamples.append({
                    "seed": name,
                    "steps": [s.as_dict() for s in entry.steps],
                    "member": fam is not None,
                    "conditions": conds,
                })
        rep.closure_members[name] = found
    rep.seconds = time.perf_counter() - t0
    return rep
