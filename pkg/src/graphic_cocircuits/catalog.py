"""Named graphs and matroids.

Vertex naming: complete graphs use "1".."n"; bipartite graphs put the
small side on a1, a2, ... and the other side on b1, b2, ...; wheels use hub
"h" and rim r1..rn.  Link labels are "<u>-<v>".

K^{+i}_{3,n} adds i edges inside the side A = {a1, a2, a3}: a1-a2 for
i = 1, the path a2-a1-a3 for i = 2, the triangle for i = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf2 import Gf2Matrix
from .graph import Multigraph, cycle_matroid
from .matroid import BinaryMatroid, dual

FAMILY_TAGS = ("K3n", "K3nPlus1", "K3nPlus2", "K3nPlus3", "K44minus", "K44")


@dataclass(frozen=True)
class FamilyName:
    tag: str
    n: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.tag.startswith("K3n"):
            if self.n is None or self.n < 5:
                raise ValueError(f"{self.tag} needs n >= 5")
        elif self.n is not None:
            raise ValueError(f"{self.tag} takes no parameter")

    def __str__(self) -> str:
        return self.tag if self.n is None else f"{self.tag}(n={self.n})"

    def graph(self) -> Multigraph:
        if self.tag == "K44":
            return complete_bipartite(4, 4)
        if self.tag == "K44minus":
            return k44_minus_e()
        return k3n_plus(self.n, FAMILY_TAGS.index(self.tag))


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    names = [str(i) for i in range(1, n + 1)]
    return Multigraph.from_links(combinations(names, 2), vertices=names)


def complete_bipartite(m: int, n: int) -> Multigraph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs positive sides")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{j}" for j in range(1, n + 1)]
    return Multigraph.from_links([(x, y) for x in a for y in b], vertices=a + b)


def wheel(n: int) -> Multigraph:
    """Rim cycle r1..rn plus hub h joined to every rim vertex."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    rim = [f"r{i}" for i in range(1, n + 1)]
    pairs = [(rim[i], rim[(i + 1) % n]) for i in range(n)] + [("h", r) for r in rim]
    return Multigraph.from_links(pairs, vertices=["h"] + rim)


def k44_minus_e() -> Multigraph:
    g = complete_bipartite(4, 4)
    return g.with_edges(e for e in g.edges if e.label != "a4-b4")


def k3n_plus(n: int, i: int) -> Multigraph:
    if n < 1 or i not in (0, 1, 2, 3):
        raise ValueError("k3n_plus needs n >= 1 and i in 0..3")
    g = complete_bipartite(3, n)
    extra = [("a1", "a2"), ("a1", "a3"), ("a2", "a3")][:i]
    return Multigraph.from_links(
        [e.ends for e in g.edges] + extra, vertices=g.vertices
    )


def prism() -> Multigraph:
    return Multigraph.from_links(
        [("1", "2"), ("2", "3"), ("1", "3"), ("4", "5"), ("5", "6"), ("4", "6"),
         ("1", "4"), ("2", "5"), ("3", "6")]
    )


def cube() -> Multigraph:
    verts = [format(i, "03b") for i in range(8)]
    pairs = [(u, v) for u, v in combinations(verts, 2)
             if sum(a != b for a, b in zip(u, v)) == 1]
    return Multigraph.from_links(pairs, vertices=verts)


def petersen() -> Multigraph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    return Multigraph.from_links(outer + inner + spokes)


def g17() -> Multigraph:
    return complete_bipartite(3, 5)


def g19() -> Multigraph:
    return k44_minus_e()


# Transcribed entry for entry from the printed 7x15 and 8x16 matrices.
R15_ROWS = (
    "100000010100001",
    "010000000011010",
    "001000011001100",
    "000100011000110",
    "000010001111000",
    "000001001111100",
    "000000101111101",
)

R16_ROWS = (
    "1000000001101000",
    "0100000000001110",
    "0010000001101110",
    "0001000000011100",
    "0000100011011100",
    "0000010010110000",
    "0000001011000001",
    "0000000110100001",
)


def _from_rows(rows) -> BinaryMatroid:
    m = Gf2Matrix.from_lists([[int(ch) for ch in r] for r in rows])
    return BinaryMatroid.from_matrix(m, [f"e{j}" for j in range(1, m.ncols + 1)])


def r15() -> BinaryMatroid:
    return _from_rows(R15_ROWS)


def r16() -> BinaryMatroid:
    return _from_rows(R16_ROWS)


GRAPHS = {
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K33": lambda: complete_bipartite(3, 3),
    "K35": lambda: complete_bipartite(3, 5),
    "K44": lambda: complete_bipartite(4, 4),
    "K44-": k44_minus_e,
    "W4": lambda: wheel(4),
    "W5": lambda: wheel(5),
    "W6": lambda: wheel(6),
    "prism": prism,
    "cube": cube,
    "petersen": petersen,
    "G17": g17,
    "G19": g19,
}

MATROIDS = {"R15": r15, "R16": r16}


def named_graph(name: str) -> Multigraph:
    """Look up a catalog graph; also accepts Kn, Km,n, Wn and K3n+i:n forms
    such as "K7", "K3,6", "W8", "K3n+2:5"."""
    if name in GRAPHS:
        return GRAPHS[name]()
    if name.startswith("K3n"):
        head, _, n = name.partition(":")
        i = 0 if head == "K3n" else int(head[4:]) if head.startswith("K3n+") else None
        if i is None or not n.isdigit():
            raise KeyError(name)
        return k3n_plus(int(n), i)
    if name.startswith("K") and "," in name:
        m, n = name[1:].split(",", 1)
        if m.isdigit() and n.isdigit():
            return complete_bipartite(int(m), int(n))
    if name.startswith("K") and name[1:].isdigit():
        return complete_graph(int(name[1:]))
    if name.startswith("W") and name[1:].isdigit():
        return wheel(int(name[1:]))
    raise KeyError(name)


def named_matroid(name: str) -> BinaryMatroid:
    """Catalog matroid: R15/R16, "M(<graph>)", "M*(<graph>)", or a trailing "*"
    for the dual (e.g. "R15*")."""
    if name.endswith("*") and not name.startswith("M*("):
        return dual(named_matroid(name[:-1]))
    if name in MATROIDS:
        return MATROIDS[name]()
    if name.startswith("M*(") and name.endswith(")"):
        return dual(cycle_matroid(named_graph(name[3:-1])))
    if name.startswith("M(") and name.endswith(")"):
        return cycle_matroid(named_graph(name[2:-1]))
    raise KeyError(name)


# ------------------------------------------------------------ signed graphs

_SIGNED_TEXT = {
    "tight-handcuff": "l1: loop v -\nl2: loop v -\n",
    "loose-handcuff": "l1: loop u -\np1: link u m\np2: link m w\nl2: loop w -\n",
    "half-edge-pair": "h1: half u\np1: link u w\nh2: half w\n",
    "negative-digon": "a: link u v +\nb: link u v -\nc: link v w\nd: link u w\nh: half w\n",
    "mixed-kinds": "a: link u v -\nb: link v w\nc: link u w\nl: loop u +\nq: loose\nh: half v\nn: loop w -\n",
    "triangles-on-path": ("t1: link a b -\nt2: link b c\nt3: link a c\np1: link c m\np2: link m x\n"
                          "s1: link x y -\ns2: link y z\ns3: link x z\n"),
}


def _signed_from_graph(G, negative=None):
    from .signed import SignedGraph

    neg = G.labels if negative is None else negative
    return SignedGraph.with_negative(G, neg)


def signed_catalog() -> dict:
    """Named signed graphs, from balanced to handcuff-heavy."""
    from .signed import SignedGraph, parse_signed_graph

    out = {name: parse_signed_graph(text) for name, text in _SIGNED_TEXT.items()}
    k4 = complete_graph(4)
    pr = prism()
    out.update({
        "+K4": SignedGraph.all_positive(k4),
        "-K4": _signed_from_graph(k4),
        "K4-one-negative": _signed_from_graph(k4, ["1-2"]),
        "-K5": _signed_from_graph(complete_graph(5)),
        "-K33": _signed_from_graph(complete_bipartite(3, 3)),
        "-W5": _signed_from_graph(wheel(5)),
        # one negative edge per triangle: two disjoint negative triangles and
        # three connecting rungs
        "prism-two-negative-triangles": _signed_from_graph(pr, ["1-2", "4-5"]),
    })
    return dict(sorted(out.items()))
