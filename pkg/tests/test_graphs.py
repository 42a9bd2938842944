import pytest

from irredundance.errors import (
    EmptyInducedSet,
    EndpointOutOfRange,
    InvalidFamilyParams,
    MalformedGraph6,
    OrderOutOfRange,
    SelfLoop,
)
from irredundance.fixtures import BULL
from irredundance.graphs import (
    all_labeled_graphs,
    build,
    closed_nbhd,
    closed_nbhd_set,
    comb,
    complete,
    complete_bipartite,
    complete_multipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    family,
    induced,
    isomorphism,
    join,
    mask_from,
    min_degree,
    parse_graph6,
    path,
    star,
    to_graph6,
    vertex_list,
)


def test_build_small_graphs():
    p4 = build(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert build(1, []).n == 1
    assert build(3, [(0, 1), (1, 2), (2, 0)]).edge_count() == 3


def test_build_errors():
    with pytest.raises(SelfLoop):
        build(3, [(1, 1)])
    with pytest.raises(EndpointOutOfRange):
        build(3, [(0, 3)])
    with pytest.raises(OrderOutOfRange):
        build(0, [])
    with pytest.raises(OrderOutOfRange):
        build(65, [])


def test_family_construction():
    c4 = family("cycle", [4])
    assert c4.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    k23 = family("complete_bipartite", [2, 3])
    assert k23.edge_count() == 6
    cb = family("comb", [2])
    assert cb.n == 4 and cb.edge_count() == 3
    assert cb.edges() == [(0, 1), (0, 2), (1, 3)]


def test_family_edge_count_closed_forms():
    for n in range(1, 9):
        assert path(n).edge_count() == n - 1
        assert complete(n).edge_count() == n * (n - 1) // 2
        assert empty(n).edge_count() == 0
    for n in range(3, 9):
        assert cycle(n).edge_count() == n
    for p in range(1, 4):
        for q in range(p, 5):
            assert complete_bipartite(p, q).edge_count() == p * q
    assert complete_multipartite([2, 2, 2]).edge_count() == 12


def test_family_invalid_params():
    with pytest.raises(InvalidFamilyParams):
        family("cycle", [2])
    with pytest.raises(InvalidFamilyParams):
        family("complete_bipartite", [3, 2])
    with pytest.raises(InvalidFamilyParams):
        family("star", [2, 3])
    with pytest.raises(InvalidFamilyParams):
        family("nonsense", [1])
    with pytest.raises(InvalidFamilyParams):
        complete_multipartite([])


def test_join_and_disjoint_union():
    w = join(cycle(4), complete(2))
    assert w.n == 6 and w.edge_count() == 4 + 1 + 8
    g = disjoint_union(complete(2), complete(2))
    assert g.edges() == [(0, 1), (2, 3)]
    assert join(empty(2), empty(3)) == complete_bipartite(2, 3)


def test_join_order_cap():
    with pytest.raises(OrderOutOfRange):
        join(empty(40), empty(30))


def test_graph6_known_values():
    assert to_graph6(empty(1)) == "@"
    assert to_graph6(path(4)) == "Ch"
    k14 = parse_graph6("D?{")
    assert k14.n == 5
    assert sorted(k14.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]
    assert to_graph6(k14) == "D?{"


def test_graph6_round_trip_exhaustive():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            assert parse_graph6(to_graph6(g)) == g


def test_graph6_long_order_form():
    for n in (63, 64):
        g = build(n, [(i, i + 1) for i in range(n - 1)])
        s = to_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g


def test_graph6_errors():
    with pytest.raises(MalformedGraph6):
        parse_graph6("")
    with pytest.raises(MalformedGraph6):
        parse_graph6("C")  # truncated body
    with pytest.raises(MalformedGraph6):
        parse_graph6("Ch " + "h")  # trailing byte
    with pytest.raises(OrderOutOfRange):
        parse_graph6("?")  # order 0
    with pytest.raises(MalformedGraph6):
        parse_graph6("B" + chr(5))  # byte below 63


def test_components():
    assert components(disjoint_union(complete(2), complete(2))) == [0b0011, 0b1100]
    assert components(path(5)) == [0b11111]
    assert components(empty(3)) == [1, 2, 4]


def test_components_cover_and_nonadjacent():
    for g in all_labeled_graphs(4):
        comps = components(g)
        assert sum(comps) == g.full_mask  # disjoint cover
        for i, a in enumerate(comps):
            for b in comps[i + 1:]:
                assert all(not g.adj[v] & b for v in vertex_list(a))


def test_induced():
    g = path(5)
    sub, mapping = induced(g, 0b11100)
    assert mapping == (2, 3, 4)
    assert sub.edges() == [(0, 1), (1, 2)]
    with pytest.raises(EmptyInducedSet):
        induced(g, 0)


def test_neighborhood_queries():
    assert closed_nbhd(path(3), 1) == 0b111
    # bull fixture, labels 3,4,5 -> N[3] u N[4] u N[5] = {2,3,4,5}
    s = BULL.mask({3, 4, 5})
    assert closed_nbhd_set(BULL.graph, s) == BULL.mask({2, 3, 4, 5})
    for n in (3, 5, 8):
        assert min_degree(cycle(n)) == 2


def test_all_labeled_graphs_counts():
    assert sum(1 for _ in all_labeled_graphs(2)) == 2
    assert sum(1 for _ in all_labeled_graphs(3)) == 8
    assert sum(1 for _ in all_labeled_graphs(5)) == 1024
    with pytest.raises(OrderOutOfRange):
        next(all_labeled_graphs(7))


def test_all_labeled_graphs_order():
    gs = list(all_labeled_graphs(3))
    assert gs[0].edge_count() == 0
    assert gs[1].edges() == [(0, 1)]  # lexicographically first edge
    assert gs[-1] == complete(3)


def test_isomorphism_basic():
    g = path(3)
    h = build(3, [(2, 1), (1, 0)])
    assert isomorphism(g, h) is not None
    assert isomorphism(path(4), star(3)) is None
    k33_minus_pm = build(6, [
        (0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4),
    ])
    assert isomorphism(cycle(6), k33_minus_pm) is not None
    with pytest.raises(OrderOutOfRange):
        isomorphism(empty(11), empty(11))


def test_isomorphism_preserves_edges():
    pool = [path(4), star(3), cycle(4), complete(4), comb(2),
            disjoint_union(path(2), path(2))]
    for g in pool:
        for h in pool:
            perm = isomorphism(g, h)
            if perm is None:
                continue
            mapped = {(min(perm[u], perm[v]), max(perm[u], perm[v]))
                      for u, v in g.edges()}
            assert mapped == set(h.edges())


def test_mask_helpers():
    assert mask_from([0, 2, 5]) == 0b100101
    assert vertex_list(0b100101) == [0, 2, 5]


def test_graph6_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            nxg = nx.Graph()
            nxg.add_nodes_from(range(g.n))
            nxg.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(nxg, header=False).decode().strip()
            assert to_graph6(g) == ref
