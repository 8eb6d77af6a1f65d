"""Deciding signed-graphicness of cographic matroids with graphic cocircuits.

Two routes are provided and must agree: the excluded-minor test against
M*(G17) and M*(G19) (:func:`regular_signed_graphic_check`), and the
decompose / realize / match-family pipeline (:func:`recognize_cographic`).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from . import catalog
from .catalog import FamilyName
from .errors import NotGraphic, NotThreeConnected, PreconditionError
from .graph import (
    LINK,
    LOOP,
    Edge,
    Multigraph,
    bipartition,
    circles,
    cycle_matroid,
    graph_iso,
)
from .matroid import (
    DEFAULT_BOUND,
    BinaryMatroid,
    MinorWitness,
    _check_bound,
    bits,
    cocircuits,
    connected_components,
    delete,
    first_separation,
    dual,
    has_minor,
)

SUM_PREFIX = "~sum"


@lru_cache(maxsize=None)
def _obstruction(name: str) -> BinaryMatroid:
    graphs = {
        "M*(K33)": lambda: catalog.complete_bipartite(3, 3),
        "M*(K5)": lambda: catalog.complete_graph(5),
        "M*(G17)": catalog.g17,
        "M*(G19)": catalog.g19,
    }
    return dual(cycle_matroid(graphs[name]()))


@dataclass(frozen=True)
class MinorCertificate:
    """``name`` is isomorphic to delete(contract(M, contracted), deleted)."""

    name: str
    deleted: tuple[str, ...]
    contracted: tuple[str, ...]
    mapping: dict = field(compare=False, repr=False)

    @classmethod
    def of(cls, name: str, w: MinorWitness) -> MinorCertificate:
        return cls(name, w.deleted, w.contracted, w.mapping)

    def as_dict(self) -> dict:
        return {
            "minor": self.name,
            "deleted": list(self.deleted),
            "contracted": list(self.contracted),
            "mapping": dict(sorted(self.mapping.items())),
        }


def _first_minor(M: BinaryMatroid, names, bound) -> MinorCertificate | None:
    for name in names:
        w = has_minor(M, _obstruction(name), bound=bound)
        if w is not None:
            return MinorCertificate.of(name, w)
    return None


def is_graphic(M: BinaryMatroid, bound: int | None = DEFAULT_BOUND) -> tuple[bool, MinorCertificate | None]:
    """Graphicness of a *regular* matroid via its two cographic excluded minors.

    The caller promises regularity; binary non-regular input is not detected."""
    cert = _first_minor(M, ("M*(K33)", "M*(K5)"), bound)
    return cert is None, cert


@dataclass
class CocircuitAudit:
    graphic: bool
    ledger: list[tuple[tuple[str, ...], bool, MinorCertificate | None]]

    @property
    def non_graphic(self):
        return [(y, c) for y, ok, c in self.ledger if not ok]


def has_graphic_cocircuits(M: BinaryMatroid, bound: int | None = 18,
                           stop_early: bool = False) -> CocircuitAudit:
    """is_graphic(M \\ Y) for every cocircuit Y, with a per-cocircuit ledger."""
    _check_bound("has_graphic_cocircuits", M.size, bound)
    ledger = []
    for Y in cocircuits(M, bound=None):
        ok, cert = is_graphic(delete(M, Y), bound=None)
        ledger.append((Y, ok, cert))
        if stop_early and not ok:
            break
    return CocircuitAudit(all(ok for _, ok, _ in ledger), ledger)


@dataclass
class SignedGraphicDecision:
    signed_graphic: bool
    witness: MinorCertificate | None


def regular_signed_graphic_check(M: BinaryMatroid, check_preconditions: bool = False,
                                 bound: int | None = DEFAULT_BOUND) -> SignedGraphicDecision:
    """Excluded-minor route: signed-graphic iff no M*(G17)- or M*(G19)-minor
    (valid for regular matroids whose cocircuits are all graphic)."""
    _check_bound("regular_signed_graphic_check", M.size, bound)
    if check_preconditions:
        audit = has_graphic_cocircuits(M, bound=bound, stop_early=True)
        if not audit.graphic:
            y, _ = audit.non_graphic[0]
            raise PreconditionError(f"cocircuit {list(y)} is not graphic")
    cert = _first_minor(M, ("M*(G17)", "M*(G19)"), bound)
    return SignedGraphicDecision(cert is None, cert)


# ------------------------------------------------------------ decomposition


def _two_separation(M: BinaryMatroid) -> tuple[int, int] | None:
    """First 2-separation (X, Y) with element 0 in X, by |X| then lex."""
    return first_separation(M, 2)


def _split_two_sum(M: BinaryMatroid, x: int, y: int, label: str) -> tuple[BinaryMatroid, BinaryMatroid]:
    # The column spaces of X and Y meet in a line spanned by w; each part
    # keeps its own columns plus w as the basepoint.
    cross = next(c for c in M.circuit_masks if c & x and c & y)
    w = 0
    for i in bits(cross & x):
        w ^= M.cols[i]
    parts = []
    for side in (x, y):
        idx = bits(side)
        cols = [M.cols[i] for i in idx] + [w]
        labels = tuple(M.elements[i] for i in idx) + (label,)
        parts.append(BinaryMatroid.from_columns(labels, cols, M.rep.nrows))
    return parts[0], parts[1]


def decompose_1_2_sums(M: BinaryMatroid, bound: int | None = DEFAULT_BOUND) -> list[BinaryMatroid]:
    """Split along 1-separations (connected components) and then greedily along
    the first 2-separation found, recursively, until every piece is 3-connected.

    Fresh basepoints are named ~sum0, ~sum1, ...; pieces are returned sorted
    by their least original element position."""
    counter = [0]
    order = {e: i for i, e in enumerate(M.elements)}

    def fresh() -> str:
        name = f"{SUM_PREFIX}{counter[0]}"
        counter[0] += 1
        return name

    pending = [delete(M, [e for e in M.elements if e not in comp]) for comp in connected_components(M)]
    done = []
    while pending:
        piece = pending.pop(0)
        _check_bound("decompose_1_2_sums", piece.size, bound)
        sep = _two_separation(piece) if piece.size >= 4 else None
        if sep is None:
            done.append(piece)
            continue
        a, b = _split_two_sum(piece, sep[0], sep[1], fresh())
        pending[:0] = [a, b]

    def key(piece):
        return min(order.get(e, math.inf) for e in piece.elements)

    return sorted(done, key=key)


# ---------------------------------------------------------------- realization


def _graph_from_assignment(M: BinaryMatroid, ends: dict, nverts: int) -> Multigraph:
    verts = [f"v{i}" for i in range(nverts)]
    edges = []
    for e in M.elements:
        u, v = ends[e]
        if u == v:
            edges.append(Edge(e, LOOP, (verts[u], verts[u])))
        else:
            edges.append(Edge(e, LINK, (verts[u], verts[v])))
    return Multigraph(tuple(verts), tuple(edges))


def _realizes(H: Multigraph, M: BinaryMatroid) -> bool:
    got = {frozenset(c) for c in circles(H, bound=None)}
    want = {frozenset(M.labels(c)) for c in M.circuit_masks}
    return got == want


def _realize_small(M: BinaryMatroid) -> Multigraph | None:
    nverts = M.rank + 1
    slots = [(u, v) for u in range(nverts) for v in range(u, nverts)]
    for choice in product(slots, repeat=M.size):
        H = _graph_from_assignment(M, dict(zip(M.elements, choice)), nverts)
        if _realizes(H, M):
            return H
    return None


def _is_connected_restriction(M: BinaryMatroid, keep: int) -> bool:
    parent = {i: i for i in bits(keep)}

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for c in M.circuit_masks:
        if c & ~keep:
            continue
        members = bits(c)
        root = find(members[0])
        for o in members[1:]:
            r2 = find(o)
            if r2 != root:
                parent[r2] = root
    return len({find(i) for i in parent}) <= 1


def realize_graph(M: BinaryMatroid, bound: int | None = DEFAULT_BOUND) -> Multigraph:
    """Graph H with cycle_matroid(H) == M element for element (M 3-connected).

    For rank >= 3 the vertices are the non-separating cocircuits (those whose
    deletion leaves a connected matroid): in a 3-connected graph these are
    exactly the vertex stars, so every element must lie in two of them.
    Rank <= 2 is settled by trying every placement on rank+1 vertices.  The
    result is checked circuit for circuit."""
    _check_bound("realize_graph", M.size, bound)
    if M.size >= 2 and (first_separation(M, 1) or first_separation(M, 2)):
        raise NotThreeConnected("realize_graph needs a 3-connected matroid")
    if M.rank <= 2:
        H = _realize_small(M)
        if H is None:
            raise NotGraphic("no graph realises this matroid")
        return H
    full = (1 << M.size) - 1
    stars = [y for y in M.cocircuit_masks if _is_connected_restriction(M, full & ~y)]
    stars.sort(key=lambda y: bits(y))
    ends: dict[str, list[int]] = {e: [] for e in M.elements}
    for k, y in enumerate(stars):
        for i in bits(y):
            ends[M.elements[i]].append(k)
    if len(stars) != M.rank + 1 or any(len(v) != 2 for v in ends.values()):
        raise NotGraphic("vertex stars do not form a graph")
    H = _graph_from_assignment(M, {e: tuple(v) for e, v in ends.items()}, len(stars))
    if not _realizes(H, M):
        raise NotGraphic("star graph does not realise the matroid")
    return H


# ------------------------------------------------------------ family check


def family_membership(H: Multigraph) -> FamilyName | None:
    """Match H against K_{3,n}, K^{+1,2,3}_{3,n} (n >= 5), K_{4,4}^-, K_{4,4}."""
    if not H.is_simple():
        return None
    nv, ne = len(H.vertices), len(H.edges)
    adj = H.neighbors
    deg = {v: len(adj[v]) for v in H.vertices}

    if nv == 8 and ne in (15, 16):
        sides = bipartition(H)
        if sides and sorted(map(len, sides)) == [4, 4]:
            return FamilyName("K44" if ne == 16 else "K44minus")

    if nv >= 8:
        deg3 = [v for v in H.vertices if deg[v] == 3]
        hubs = {frozenset(adj[v]) for v in deg3}
        for hub in hubs:
            B = [v for v in deg3 if frozenset(adj[v]) == hub and v not in hub]
            n = len(B)
            if n < 5 or n + 3 != nv:
                continue
            A = list(hub)
            inner = sum(1 for a, b in combinations(A, 2) if b in adj[a])
            if ne != 3 * n + inner:
                continue
            fam = FamilyName(("K3n", "K3nPlus1", "K3nPlus2", "K3nPlus3")[inner], n)
            if graph_iso(H, fam.graph()) is not None:
                return fam
    return None


# ------------------------------------------------------------------ pipeline


@dataclass
class Component:
    matroid: BinaryMatroid
    graph: Multigraph
    family: FamilyName | None

    def as_dict(self) -> dict:
        return {
            "elements": list(self.matroid.elements),
            "rank": self.matroid.rank,
            "graph": {
                "vertices": list(self.graph.vertices),
                "edges": [[e.label, *(e.ends[:1] if e.kind == LOOP else e.ends)] for e in self.graph.edges],
            },
            "family": None if self.family is None else {"tag": self.family.tag, "n": self.family.n},
        }


@dataclass
class RecognitionReport:
    signed_graphic: bool
    components: list[Component]
    witness: dict | None
    precondition_checked: bool
    timings: dict | None = None

    @property
    def decision(self) -> str:
        return "signed-graphic" if self.signed_graphic else "not-signed-graphic"

    def as_dict(self, with_timings: bool = False) -> dict:
        return {
            "decision": self.decision,
            "components": [c.as_dict() for c in self.components],
            "witness": self.witness,
            "precondition_checked": self.precondition_checked,
            "timings": self.timings if with_timings else None,
        }


def recognize_cographic(M: BinaryMatroid, check_preconditions: bool = False,
                        bound: int | None = DEFAULT_BOUND) -> RecognitionReport:
    """Decompose into 3-connected pieces, realise each piece's dual as a graph,
    and look the graphs up in the obstruction families."""
    timings = {}
    t0 = time.perf_counter()
    if check_preconditions:
        _check_bound("precondition check", M.size, bound)
        ok, cert = is_graphic(dual(M), bound=bound)
        if not ok:
            raise PreconditionError(f"input is not cographic ({cert.name} minor in the dual)")
        audit = has_graphic_cocircuits(M, bound=bound, stop_early=True)
        if not audit.graphic:
            y, _ = audit.non_graphic[0]
            raise PreconditionError(f"cocircuit {list(y)} is not graphic")
        timings["preconditions"] = time.perf_counter() - t0

    t1 = time.perf_counter()
    pieces = decompose_1_2_sums(M, bound=bound)
    timings["decompose"] = time.perf_counter() - t1

    t2 = time.perf_counter()
    components = []
    for piece in pieces:
        try:
            H = realize_graph(dual(piece), bound=bound)
        except NotGraphic as exc:
            raise NotGraphic(f"component {list(piece.elements)} is not cographic: {exc}") from None
        components.append(Component(piece, H, family_membership(H)))
    timings["realize_and_match"] = time.perf_counter() - t2

    flagged = next((c for c in components if c.family is not None), None)
    witness = None
    if flagged is not None:
        witness = {
            "family": {"tag": flagged.family.tag, "n": flagged.family.n},
            "component_elements": [e for e in flagged.matroid.elements if not e.startswith(SUM_PREFIX)],
        }
    timings["total"] = time.perf_counter() - t0
    return RecognitionReport(flagged is None, components, witness, check_preconditions, timings)
