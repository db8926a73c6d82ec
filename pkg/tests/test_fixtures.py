from itertools import combinations

import pytest

from surfclique.cliques import clique_report
from surfclique.embed import Surface
from surfclique.fixtures import (
    MAX_EXCESS_TABLE,
    PUBLISHED_ENCODINGS,
    catalog,
    derived_fixtures,
    get_fixture,
    published_fixtures,
)
from surfclique.surfmath import omega_of
from surfclique.surgery import embeddings_isomorphic, is_irreducible, isomorphic


def test_counts():
    assert len(published_fixtures()) == 23
    assert len(derived_fixtures()) == 4
    assert len({f.id for f in published_fixtures() + derived_fixtures()}) == 27


def test_encodings_are_verbatim():
    assert get_fixture("N2#3").encoding == "bcdef,afgdhec,abefd,acfhbge,adghbcf,aecdhgb,bfhed,bdfge"
    for fx in published_fixtures():
        assert fx.encoding.replace(",", "").isalpha()


@pytest.mark.parametrize(
    "fid, n, ex",
    [("S2#1", 10, 208), ("N2#26", 9, 48), ("N3#2464", 10, 104), ("S0:K3", 3, -16),
     ("S1:K7", 7, 72), ("N1:K6", 6, 16), ("N1:K7-K3", 7, 8)],
)
def test_fixture_values(fid, n, ex):
    fx = get_fixture(fid)
    rep = clique_report(fx.embedding)
    assert fx.embedding.vertex_count == fx.expected_vertices == n
    assert rep.excess == fx.expected_excess == ex


def test_k7_minus_triangle_count():
    assert clique_report(get_fixture("N1:K7-K3").embedding).total == 64


def test_n2_orders():
    assert [get_fixture(f"N2#{k}").expected_vertices for k in (3, 6, 26)] == [8, 8, 9]


def test_s2_orders_hit_argmax_column():
    row = MAX_EXCESS_TABLE[Surface.parse("S2")]
    for k in (1, 6):
        n = get_fixture(f"S2#{k}").expected_vertices
        assert row[n] == max(row.values())


def test_catalog():
    cat = catalog()
    assert cat[Surface.parse("N3")].max_excess == 104
    assert len(cat[Surface.parse("N3")].members) == 15
    assert len(cat[Surface.parse("S2")].members) == 2
    expected = {"S0": (-16, 1), "S1": (72, 1), "N1": (16, 1), "S2": (208, 2),
                "N2": (48, 3), "N3": (104, 15), "N4": (216, 3)}
    assert {e.surface.name: (e.max_excess, len(e.members)) for e in cat} == expected
    for entry in cat:
        assert entry.max_excess == max(MAX_EXCESS_TABLE[entry.surface].values())
        for fid in entry.members:
            e = get_fixture(fid).embedding
            assert is_irreducible(e)
            assert clique_report(e).excess == entry.max_excess


def test_catalog_members_contain_k_omega():
    for entry in catalog():
        for fid in entry.members:
            assert clique_report(get_fixture(fid).embedding).clique_number == omega_of(entry.surface)


def test_n4_same_graph_different_maps():
    embs = [get_fixture(f"N4#{k}").embedding for k in (1, 2, 3)]
    for a, b in combinations(embs, 2):
        assert isomorphic(a, b)
    assert any(not embeddings_isomorphic(a, b) for a, b in combinations(embs, 2))


def test_unknown_fixture():
    with pytest.raises(KeyError):
        get_fixture("S9#1")
    assert get_fixture("s1:k7").id == "S1:K7"


def test_published_encoding_keys():
    assert sorted({s.name for s, _ in PUBLISHED_ENCODINGS}) == ["N2", "N3", "N4", "S2"]
