import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_isomorphic, complete_graph, k7_minus_triangle
from surfclique.cliques import count_cliques, excess
from surfclique.embed import Embedding, FaceHandle, faces, parse_embedding, serialize_embedding, surface_of
from surfclique.fixtures import all_fixtures, get_fixture
from surfclique.surgery import (
    ReducibleEdge,
    SurgeryError,
    contract,
    embeddings_isomorphic,
    generate_extremal,
    graph_isomorphisms,
    is_irreducible,
    isomorphic,
    reduce_to_irreducible,
    reducible_edges,
    split_face,
)

K3 = parse_embedding("bc,ac,ab")
K4 = parse_embedding("bcd,acd,abd,abc")
FIXTURE_IDS = [f.id for f in all_fixtures()]


def relabel(e: Embedding, perm) -> Embedding:
    rots = [None] * e.vertex_count
    for v, r in enumerate(e.rotations):
        rots[perm[v]] = tuple(perm[u] for u in r)
    return Embedding(tuple(rots))


def test_k4_all_edges_reducible():
    red = reducible_edges(K4)
    assert len(red) == 6
    assert red[0] == ReducibleEdge(0, 1, 2, 3)


def test_k7_torus_irreducible():
    assert reducible_edges(get_fixture("S1:K7").embedding) == []


def test_k3_is_irreducible():
    assert is_irreducible(K3)
    assert not is_irreducible(K4)


@pytest.mark.parametrize("fid", FIXTURE_IDS)
def test_fixtures_irreducible(fid):
    assert is_irreducible(get_fixture(fid).embedding)


def test_new_edges_after_split_are_reducible():
    e = get_fixture("N3#82").embedding
    for f in faces(e):
        g = split_face(e, f)
        p = e.vertex_count
        new = {(r.v, r.w) for r in reducible_edges(g) if r.w == p}
        assert new == {(v, p) for v in f.vertices}


def test_contract_k4():
    for r in reducible_edges(K4):
        assert serialize_embedding(contract(K4, r)) == "bc,ac,ab"


def test_contract_rejects_irreducible_edge():
    k7 = get_fixture("S1:K7").embedding
    with pytest.raises(SurgeryError):
        contract(k7, ReducibleEdge(0, 1, 2, 3))
    with pytest.raises(SurgeryError, match="not an edge"):
        contract(get_fixture("N1:K7-K3").embedding, ReducibleEdge(4, 5, 0, 1))


def test_split_k3():
    for f in faces(K3):
        g = split_face(K3, f)
        assert count_cliques(g) == 16
        assert embeddings_isomorphic(g, K4)


def test_split_k7_keeps_excess():
    k7 = get_fixture("S1:K7").embedding
    for f in faces(k7):
        g = split_face(k7, f)
        assert count_cliques(g) == 136
        assert excess(g) == 72


def test_split_stale_handle():
    k7 = get_fixture("S1:K7").embedding
    f = faces(k7)[0]
    bogus = FaceHandle(((f.corners[0][0], (f.corners[0][1] + 1) % 6),) + f.corners[1:])
    with pytest.raises(SurgeryError, match="stale"):
        split_face(k7, bogus)


def test_split_counts():
    e = get_fixture("N4#2").embedding
    g = split_face(e, faces(e)[5])
    assert (g.vertex_count, g.edge_count, g.face_count) == (
        e.vertex_count + 1, e.edge_count + 3, e.face_count + 2
    )
    assert g.rotations[-1] and len(g.rotations[-1]) == 3


@pytest.mark.parametrize("fid", FIXTURE_IDS)
def test_split_then_contract_is_identity(fid):
    e = get_fixture(fid).embedding
    for f in faces(e):
        g = split_face(e, f)
        back = contract(g, next(r for r in reducible_edges(g) if r.w == e.vertex_count))
        assert back == e


@pytest.mark.parametrize("fid", FIXTURE_IDS)
def test_random_splits_preserve_surface(fid):
    rng = random.Random(fid)
    e = get_fixture(fid).embedding
    s = surface_of(e)
    chi = s.chi
    for _ in range(100):
        e = split_face(e, rng.choice(faces(e)))
        assert e.vertex_count - e.edge_count + e.face_count == chi
    assert surface_of(e) == s


def _excess_change(g: Embedding, r: ReducibleEdge) -> tuple[int, bool]:
    h = contract(g, r)
    return excess(h) - excess(g), r.y in g.neighbor_sets[r.x]


def test_contraction_excess_both_branches():
    # apexes adjacent: a split undone, excess unchanged
    k7 = get_fixture("S1:K7").embedding
    g = split_face(k7, faces(k7)[0])
    r = reducible_edges(g)[0]
    delta, closed = _excess_change(g, r)
    assert closed and delta == 0
    # apexes not adjacent: every edge of the octahedron joins two vertices whose
    # common neighbours are an opposite pair
    octahedron = parse_embedding("cedf,cedf,aebf,aebf,acbd,acbd")
    rng = random.Random(3)
    e = octahedron
    for _ in range(6):
        for r in reducible_edges(e):
            if r.y in e.neighbor_sets[r.x]:
                continue
            delta, closed = _excess_change(e, r)
            assert not closed
            assert delta > 0
            assert delta == count_cliques(contract(e, r)) + 8 - count_cliques(e)
        e = split_face(e, rng.choice(faces(e)))
    r = reducible_edges(octahedron)[0]
    assert _excess_change(octahedron, r) == (5, False)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIXTURE_IDS), st.integers(0, 10**6), st.integers(1, 12))
def test_contraction_never_lowers_excess(fid, seed, splits):
    rng = random.Random(seed)
    e = get_fixture(fid).embedding
    for _ in range(splits):
        e = split_face(e, rng.choice(faces(e)))
    surface = surface_of(e)
    while True:
        red = reducible_edges(e)
        if not red:
            break
        r = rng.choice(red)
        if rng.random() < 0.5:
            r = r.flipped()
        nxt = contract(e, r)
        assert excess(nxt) >= excess(e)
        assert surface_of(nxt) == surface
        e = nxt


def test_reduce_examples():
    assert reduce_to_irreducible(K4) == (K3, 1)
    s2 = get_fixture("S2#1").embedding
    assert reduce_to_irreducible(s2) == (s2, 0)


def test_reduce_k7_family():
    k7 = get_fixture("S1:K7").embedding
    for seed in range(5):
        g = generate_extremal(k7, 7 + 2 * seed + 1, "random", seed)
        out, steps = reduce_to_irreducible(g)
        assert steps == g.vertex_count - 7
        assert isomorphic(out, k7)


def test_generate_extremal_values():
    k7 = get_fixture("S1:K7").embedding
    assert count_cliques(generate_extremal(k7, 20)) == 232
    k6 = get_fixture("N1:K6").embedding
    assert count_cliques(generate_extremal(k6, 10)) == 96
    for n0 in (3, 4, 9, 25):
        assert count_cliques(generate_extremal(K3, n0)) == 8 * n0 - 16
    with pytest.raises(SurgeryError):
        generate_extremal(k7, 6)
    with pytest.raises(ValueError):
        generate_extremal(k7, 9, "sideways")


def test_generate_is_deterministic():
    k7 = get_fixture("S1:K7").embedding
    assert generate_extremal(k7, 15) == generate_extremal(k7, 15)
    assert generate_extremal(k7, 15, "random", 4) == generate_extremal(k7, 15, "random", 4)


def test_isomorphic_examples():
    n4 = [get_fixture(f"N4#{k}").embedding for k in (1, 2, 3)]
    assert isomorphic(n4[0], n4[1]) and isomorphic(n4[1], n4[2])
    assert not isomorphic(complete_graph(7), k7_minus_triangle())
    with pytest.raises(SurgeryError, match="capped"):
        isomorphic(complete_graph(13), complete_graph(13))


@pytest.mark.parametrize("fid", FIXTURE_IDS)
def test_isomorphic_under_relabeling(fid):
    e = get_fixture(fid).embedding
    perm = list(range(e.vertex_count))
    random.Random(fid).shuffle(perm)
    other = relabel(e, perm)
    assert isomorphic(e, other)
    assert embeddings_isomorphic(e, other)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data())
def test_isomorphic_matches_oracle(n, data):
    pairs = [(v, u) for v in range(n) for u in range(v + 1, n)]

    def draw():
        keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        adj = [[] for _ in range(n)]
        for (v, u), k in zip(pairs, keep):
            if k:
                adj[v].append(u)
                adj[u].append(v)
        return adj

    a, b = draw(), draw()
    assert isomorphic(a, b) == brute_force_isomorphic(a, b)


def test_isomorphism_count_k4():
    assert len(list(graph_isomorphisms(K4, K4))) == 24
