import pytest

from irredundance.blocking import (
    BlockingFamily,
    Provenance,
    designated_family,
    enumerate_family,
    hits_all,
    is_connected_psd_fort,
    is_psd_fort,
    is_skew_fort,
    is_standard_fort,
    minimal_closed_neighborhoods,
    minimal_members,
)
from irredundance.closures import ClosureRule, is_x_set
from irredundance.errors import IncompleteFamily, OrderBudgetExceeded
from irredundance.fixtures import BULL, FIG4_TREE, FIG5_TRIANGLES
from irredundance.graphs import (
    all_labeled_graphs,
    complete,
    cycle,
    empty,
    mask_from,
    path,
    star,
)

from _oracles import blocking_family as naive_family


def test_standard_fort_predicate():
    k13 = star(3)
    assert is_standard_fort(k13, 0b0110)  # two leaves
    assert not is_standard_fort(k13, 0)
    # both endpoints of P_3: the middle vertex has two neighbors inside
    assert is_standard_fort(path(3), 0b101)


def test_psd_fort_predicates():
    t = FIG4_TREE.graph
    fam = enumerate_family(ClosureRule.PSD, Provenance.ENUMERATED_FORTS, t)
    assert fam.members == (t.full_mask,)  # V(T) is the only PSD fort of a tree
    for n in (4, 5, 6):
        c = cycle(n)
        assert is_psd_fort(c, c.full_mask ^ 1)
    g5 = FIG5_TRIANGLES.graph
    m = FIG5_TRIANGLES.mask({3, 4, 5, 6})
    assert is_psd_fort(g5, m)
    assert not is_connected_psd_fort(g5, m)


def test_skew_fort_predicate():
    c6 = cycle(6)
    assert is_skew_fort(c6, 0b010101)
    assert is_skew_fort(c6, 0b101010)
    p5 = path(5)
    skew = [f for f in range(1 << 5) if is_skew_fort(p5, f)]
    assert skew == [0b10101]  # unique: alternate vertices
    k3 = complete(3)
    assert not any(is_skew_fort(k3, f) for f in (0b011, 0b101, 0b110))
    assert is_skew_fort(k3, 0b111)


def test_enumerate_matches_naive_oracle():
    params = {
        ClosureRule.STANDARD: "standard",
        ClosureRule.PSD: "psd",
        ClosureRule.SKEW: "skew",
        ClosureRule.DOMINATION: "domination",
        ClosureRule.VERTEX_COVER: "vertex_cover",
    }
    for g in all_labeled_graphs(4):
        for rule, name in params.items():
            fam = designated_family(rule, g)
            naive = {frozenset(r) for r in naive_family(g.n, g.edges(), name)}
            got = {frozenset(v for v in range(g.n) if m >> v & 1) for m in fam.members}
            assert got == naive, (rule, g.edges())


def test_enumerate_neighborhoods_bull():
    fam = designated_family(ClosureRule.DOMINATION, BULL.graph)
    assert BULL.family_labels(fam.members) == {
        frozenset(s) for s in ({1, 2}, {1, 2, 3, 4}, {2, 3, 4}, {2, 3, 4, 5}, {4, 5})
    }


def test_enumerate_budget_guard():
    big = empty(17)
    with pytest.raises(OrderBudgetExceeded):
        enumerate_family(ClosureRule.STANDARD, Provenance.ENUMERATED_FORTS, big)
    # neighborhoods and edges have no 2^n scan
    enumerate_family(ClosureRule.DOMINATION, Provenance.NEIGHBORHOODS, big)
    enumerate_family(ClosureRule.VERTEX_COVER, Provenance.EDGES, big)


def test_minimal_members():
    k13 = star(3)
    forts = enumerate_family(ClosureRule.STANDARD, Provenance.ENUMERATED_FORTS, k13)
    assert minimal_members(forts).members == (0b0110, 0b1010, 0b1100)
    p4 = path(4)
    edges = designated_family(ClosureRule.VERTEX_COVER, p4)
    assert minimal_members(edges).members == edges.members
    k4 = complete(4)
    skew = enumerate_family(ClosureRule.SKEW, Provenance.ENUMERATED_FORTS, k4)
    assert all(m.bit_count() == 3 for m in minimal_members(skew).members)
    assert len(minimal_members(skew)) == 4


def test_minimal_members_rejects_filtered_provenance():
    fam = BlockingFamily(ClosureRule.STANDARD, Provenance.GENERATORS, 2, (0b11,))
    with pytest.raises(IncompleteFamily):
        minimal_members(fam)


def test_minimal_closed_neighborhoods():
    for n in (2, 3, 5):
        assert minimal_closed_neighborhoods(complete(n)).members == (
            complete(n).full_mask,
        )
    assert minimal_closed_neighborhoods(path(3)).members == (0b011, 0b110)
    assert len(minimal_closed_neighborhoods(cycle(5))) == 5


def test_hitting_theorems_small():
    for g in all_labeled_graphs(4):
        for rule in (ClosureRule.STANDARD, ClosureRule.PSD, ClosureRule.SKEW):
            fam = enumerate_family(rule, Provenance.ENUMERATED_FORTS, g)
            for s in range(1 << g.n):
                assert hits_all(fam, s) == is_x_set(rule, g, s)


def test_family_json_round_trip():
    fam = designated_family(ClosureRule.STANDARD, star(3))
    data = fam.to_json_dict()
    assert data["parameter"] == "standard"
    assert data["members"] == [[1, 2], [1, 3], [2, 3], [1, 2, 3], [0, 1, 2, 3]]
    assert BlockingFamily.from_json_dict(data) == fam


def test_family_members_are_deduplicated_and_nonempty():
    fam = BlockingFamily(
        ClosureRule.STANDARD, Provenance.CLOSURE_DERIVED, 3, (0b11, 0b11, 0b101)
    )
    assert fam.members == (0b11, 0b101)
    with pytest.raises(ValueError):
        BlockingFamily(ClosureRule.STANDARD, Provenance.CLOSURE_DERIVED, 3, (0,))


def test_fixture_graph6_strings_are_stable():
    from irredundance.fixtures import FIXTURES

    frozen = {
        "fig2": "GllCKK",
        "fig3": "JzkGGC@_N~_",
        "fig4": "EXCO",
        "fig5": "EtPG",
        "fig6": "DU{",
        "fig7": "FCxv?",
        "bull": "DjC",
        "paw": "CN",
    }
    for name, g6 in frozen.items():
        assert FIXTURES[name].g6 == g6
    assert FIXTURES["bc"].g6 == frozen["fig3"]
    assert mask_from([0, 1]) == 0b11
