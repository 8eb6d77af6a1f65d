from __future__ import annotations

from collections import Counter

import pytest

from conftest import DATA
from graphic_cocircuits.catalog import (
    FAMILY_TAGS,
    GRAPHS,
    R15_ROWS,
    R16_ROWS,
    FamilyName,
    complete_bipartite,
    complete_graph,
    g17,
    g19,
    k3n_plus,
    k44_minus_e,
    named_graph,
    named_matroid,
    r15,
    r16,
    wheel,
)
from graphic_cocircuits.gf2 import format_matrix, parse_matrix, rank
from graphic_cocircuits.graph import bipartition, graph_iso, tutte_connectivity
from graphic_cocircuits.matroid import dual, is_isomorphic
from oracles import nx_isomorphic


def test_g17_is_k35_and_g19_is_k44_minus_edge():
    assert graph_iso(g17(), complete_bipartite(3, 5)) is not None
    assert graph_iso(g19(), k44_minus_e()) is not None
    assert nx_isomorphic(g19(), k44_minus_e())
    sides = bipartition(g17())
    assert sorted(map(len, sides)) == [3, 5]


def test_k44_minus_e_shape():
    G = k44_minus_e()
    assert len(G.vertices) == 8 and len(G.edges) == 15
    assert Counter(G.degree(v) for v in G.vertices) == Counter({4: 6, 3: 2})


def test_k3n_plus_three_is_a_triangle_of_high_degree():
    G = k3n_plus(5, 3)
    big = [v for v in G.vertices if G.degree(v) >= 5]
    assert len(big) == 3
    inner = [e for e in G.edges if set(e.ends) <= set(big)]
    assert len(inner) == 3


@pytest.mark.parametrize("i,shape", [(1, [1, 1, 0]), (2, [2, 1, 1]), (3, [2, 2, 2])])
def test_k3n_plus_extra_edges_on_side_a(i, shape):
    G = k3n_plus(6, i)
    a = ("a1", "a2", "a3")
    inner = Counter(v for e in G.edges if set(e.ends) <= set(a) for v in e.ends)
    assert sorted((inner[v] for v in a), reverse=True) == shape
    assert len(G.edges) == 18 + i


def test_k3n_plus_variants_pairwise_distinct():
    gs = [k3n_plus(5, i) for i in range(4)]
    for x in range(4):
        for y in range(x + 1, 4):
            assert graph_iso(gs[x], gs[y]) is None


def test_matrix_ranks_and_sizes():
    assert rank(r15().rep) == 7 and r15().size == 15
    assert rank(r16().rep) == 8 and r16().size == 16
    assert r15().elements == tuple(f"e{j}" for j in range(1, 16))
    assert r16().elements[-1] == "e16"


@pytest.mark.parametrize("name,rows,build", [("r15", R15_ROWS, r15), ("r16", R16_ROWS, r16)])
def test_goldens_byte_identical(name, rows, build):
    golden = (DATA / f"{name}.golden").read_text()
    assert format_matrix(build().rep) == golden
    back, _ = parse_matrix(golden)
    assert back == build().rep
    assert golden.splitlines()[1:] == list(rows)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_self_isomorphism(name):
    G = GRAPHS[name]()
    assert graph_iso(G, G) is not None


FAMILY_SMALL = (
    [complete_bipartite(3, n) for n in (3, 4, 5, 6)]
    + [complete_bipartite(4, 4), k44_minus_e()]
    + [k3n_plus(n, i) for n in (3, 4, 5, 6) for i in (1, 2, 3)]
    + [wheel(n) for n in (3, 4, 5, 6)]
)


@pytest.mark.parametrize("G", FAMILY_SMALL, ids=lambda G: f"{len(G.vertices)}v{len(G.edges)}e")
def test_tutte_connectivity_at_least_three(G):
    assert tutte_connectivity(G) >= 3


def test_family_name_validation():
    assert str(FamilyName("K3n", 5)) == "K3n(n=5)"
    assert str(FamilyName("K44")) == "K44"
    for tag in FAMILY_TAGS[:4]:
        assert len(FamilyName(tag, 6).graph().edges) == 18 + FAMILY_TAGS.index(tag)
    assert graph_iso(FamilyName("K44minus").graph(), g19()) is not None
    with pytest.raises(ValueError):
        FamilyName("K3n", 4)
    with pytest.raises(ValueError):
        FamilyName("K3n")
    with pytest.raises(ValueError):
        FamilyName("K44", 4)
    with pytest.raises(ValueError):
        FamilyName("K5")


def test_constructor_errors():
    for bad in [lambda: complete_graph(0), lambda: complete_bipartite(0, 3),
                lambda: wheel(2), lambda: k3n_plus(5, 4)]:
        with pytest.raises(ValueError):
            bad()


def test_named_lookups():
    assert len(named_graph("K7").edges) == 21
    assert len(named_graph("K3,6").edges) == 18
    assert len(named_graph("W8").vertices) == 9
    assert graph_iso(named_graph("K3n+2:5"), k3n_plus(5, 2)) is not None
    assert graph_iso(named_graph("K3n:5"), g17()) is not None
    assert named_matroid("R15").rank == 7
    assert named_matroid("R15*").rank == 8
    assert named_matroid("M*(K35)").rank == 8
    assert is_isomorphic(named_matroid("M*(K4)"), dual(named_matroid("M(K4)"))) is not None
    for bad in ["K3n+9:5", "Q", "M(Q)", "K3n:x"]:
        with pytest.raises((KeyError, ValueError)):
            named_graph(bad) if not bad.startswith("M") else named_matroid(bad)
