import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyrecon import graph as G
from polyrecon.errors import (
    CornerDuplicated,
    CornerMissing,
    DegreeTooSmall,
    IncoherentFactor,
    InvalidPairing,
    NotAWalk,
)
from polyrecon.matching import GenericGraph, two_factor
from polyrecon.orientations import h2_sum, orient_by_order, orientation_from_arcs
from polyrecon.walks import (
    EdgePairing,
    FacoidalSystem,
    canonical_pairing,
    canonical_walk,
    corner_graph,
    corner_index,
    corners,
    facoidal_to_two_factor,
    find_facoidal,
    pairing_from_facoidal,
    pairing_from_factor,
    random_pairing,
    two_factor_to_facoidal,
    validate_facoidal,
    walk_sink_positions,
    walks_from_pairing,
)

from oracles import cube_faces, twofaces

CUBE = G.cube(3)
K4 = G.simplex(3)
CUBE_SQUARES = [(0, 1, 3, 2), (4, 5, 7, 6), (0, 1, 5, 4), (2, 3, 7, 6), (0, 2, 6, 4), (1, 3, 7, 5)]
# a valid facoidal system of four walks on the 3-cube, found by a seeded random pairing
CUBE_FOUR_WALKS = [[0, 1, 3, 7, 5, 4, 6, 7, 3, 2], [0, 1, 5, 4], [0, 2, 6, 4], [1, 3, 2, 6, 7, 5]]
# a 2-factor of the corner graph of K4, as (center, a, b) corner triples; corner
# (1; 0, 2) in the first cycle is entered and left through the edge {0, 1}
K4_INCOHERENT = [
    [(0, 1, 2), (1, 0, 2), (0, 1, 3), (1, 0, 3)],
    [(0, 2, 3), (2, 0, 1), (1, 2, 3), (3, 0, 1)],
    [(2, 0, 3), (3, 0, 2), (2, 1, 3), (3, 1, 2)],
]

TEST_GRAPHS = [K4, CUBE, G.prism(3), G.prism(5), G.simplex(4), G.dodecahedron(), G.cube(4)]


def test_corner_counts():
    assert len(corners(K4)) == 12
    assert len(corners(CUBE)) == 24
    assert len(corners(G.polygon(7))) == 7
    for g in TEST_GRAPHS:
        assert len(corners(g)) == g.n * comb(g.d, 2)
    with pytest.raises(DegreeTooSmall):
        corners(G.segment())


def test_corner_graph_shape():
    cg = corner_graph(K4)
    assert (cg.n, len(cg.edges)) == (12, 24)
    assert all(len(a) == 4 for a in cg.adjacency)
    assert all(len(a) == 4 for a in corner_graph(CUBE).adjacency)
    for g in TEST_GRAPHS:
        cg = corner_graph(g)
        assert all(len(a) == 2 * (g.d - 1) for a in cg.adjacency)


def test_polygon_corner_graph_is_one_cycle():
    cg = corner_graph(G.polygon(6))
    tf = two_factor(GenericGraph(cg.n, cg.edges))
    assert len(tf) == 1 and len(tf[0]) == 6
    assert two_factor_to_facoidal(G.polygon(6), tf).walks == ((0, 1, 2, 3, 4, 5),)


def test_polygon_unique_pairing():
    for m in range(3, 9):
        p = G.polygon(m)
        assert walks_from_pairing(p, canonical_pairing(p)).walks == (tuple(range(m)),)
        assert find_facoidal(p).walks == (tuple(range(m)),)


def test_k4_canonical_pairing_system():
    fs = walks_from_pairing(K4, canonical_pairing(K4))
    assert sum(len(w) for w in fs.walks) == 12
    assert validate_facoidal(K4, fs.walks) == fs


def test_cube_face_pairing_gives_faces():
    fs = validate_facoidal(CUBE, CUBE_SQUARES)
    p = pairing_from_facoidal(CUBE, fs)
    assert walks_from_pairing(CUBE, p) == fs
    assert {frozenset(w) for w in fs.walks} == twofaces(cube_faces(3), CUBE.adjacency)


def test_invalid_pairing():
    with pytest.raises(InvalidPairing):
        walks_from_pairing(CUBE, EdgePairing(((0, 1),) * 11))
    with pytest.raises(InvalidPairing):
        walks_from_pairing(CUBE, EdgePairing(((0, 0),) * 12))


def test_validate_facoidal_errors():
    assert validate_facoidal(CUBE, CUBE_SQUARES).cardinality == 6
    with pytest.raises(CornerMissing):
        validate_facoidal(CUBE, CUBE_SQUARES[:5])
    with pytest.raises(CornerDuplicated):
        validate_facoidal(CUBE, CUBE_SQUARES + [CUBE_SQUARES[0]])
    with pytest.raises(NotAWalk):
        validate_facoidal(CUBE, [(0, 1, 0, 2)] + CUBE_SQUARES)  # backtracks
    with pytest.raises(NotAWalk):
        validate_facoidal(CUBE, [(0, 3, 1, 2)])  # 0-3 is not an edge
    with pytest.raises(NotAWalk):
        validate_facoidal(CUBE, [(0, 1)])


def test_four_walk_system_is_valid():
    fs = validate_facoidal(CUBE, CUBE_FOUR_WALKS)
    assert fs.cardinality == 4


def test_two_factor_round_trip():
    fs = validate_facoidal(CUBE, CUBE_SQUARES)
    tf = facoidal_to_two_factor(CUBE, fs)
    assert len(tf) == 6 and all(len(c) == 4 for c in tf)
    cg = corner_graph(CUBE)
    adj = [set(a) for a in cg.adjacency]
    for cyc in tf:
        assert all(cyc[i] in adj[cyc[i - 1]] for i in range(len(cyc)))
    assert two_factor_to_facoidal(CUBE, tf) == fs


def test_incoherent_factor_detected_and_repaired():
    idx = corner_index(K4)
    tf = [[idx.id(*c) for c in cyc] for cyc in K4_INCOHERENT]
    adj = [set(a) for a in corner_graph(K4).adjacency]
    assert all(cyc[i] in adj[cyc[i - 1]] for cyc in tf for i in range(len(cyc)))
    with pytest.raises(IncoherentFactor):
        two_factor_to_facoidal(K4, tf)
    fs = walks_from_pairing(K4, pairing_from_factor(K4, tf))
    assert validate_facoidal(K4, fs.walks) == fs


def test_find_facoidal_strategies():
    fs = find_facoidal(CUBE)
    assert 4 <= fs.cardinality <= 6
    fs = find_facoidal(K4, strategy="matching")
    assert sum(len(w) for w in fs.walks) == 12
    validate_facoidal(K4, fs.walks)
    for g in TEST_GRAPHS:
        validate_facoidal(g, find_facoidal(g, strategy="matching").walks)


def test_canonical_walk():
    assert canonical_walk([2, 3, 1, 0]) == (0, 1, 3, 2)
    assert canonical_walk([3, 1, 0, 2]) == (0, 1, 3, 2)
    assert FacoidalSystem.from_walks([[6, 4, 0, 2], [3, 2, 0, 1]]).walks == ((0, 1, 3, 2), (0, 2, 6, 4))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=3, max_size=12), st.integers(0, 20), st.booleans())
def test_canonical_walk_is_rotation_and_reflection_invariant(seq, shift, flip):
    k = shift % len(seq)
    other = seq[k:] + seq[:k]
    if flip:
        other = other[::-1]
    assert canonical_walk(other) == canonical_walk(seq)


def test_walk_sinks():
    c4 = G.polygon(4)
    o = orientation_from_arcs(c4, ["1>0", "3>0", "2>1", "2>3"])
    assert walk_sink_positions((0, 1, 2, 3), o) == [0]
    cyc = orientation_from_arcs(c4, ["0>1", "1>2", "2>3", "3>0"])
    assert walk_sink_positions((0, 1, 2, 3), cyc) == []
    lin = orient_by_order(CUBE, range(8))
    assert all(len(walk_sink_positions(w, lin)) == 1 for w in CUBE_SQUARES)


@pytest.mark.parametrize("g", TEST_GRAPHS, ids=lambda g: f"n{g.n}d{g.d}")
def test_walk_sinks_sum_to_h2(g):
    rng = random.Random(g.n)
    systems = [find_facoidal(g)] + [find_facoidal(g, seed=s) for s in range(5)]
    for _ in range(20):
        order = list(range(g.n))
        rng.shuffle(order)
        o = orient_by_order(g, order)
        for fs in systems:
            counts = [len(walk_sink_positions(w, o)) for w in fs.walks]
            assert all(c >= 1 for c in counts)
            assert sum(counts) == h2_sum(o)
            assert fs.cardinality <= h2_sum(o)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TEST_GRAPHS), st.integers(0, 10**6))
def test_random_pairings_are_valid(g, seed):
    p = random_pairing(g, random.Random(seed))
    fs = walks_from_pairing(g, p)
    assert validate_facoidal(g, fs.walks) == fs
    assert walks_from_pairing(g, pairing_from_facoidal(g, fs)) == fs
    assert two_factor_to_facoidal(g, facoidal_to_two_factor(g, fs)) == fs


def test_facoidal_json():
    fs = validate_facoidal(CUBE, CUBE_SQUARES)
    data = fs.to_json()
    assert data["walks"] == sorted(data["walks"])
    assert FacoidalSystem.from_walks(data["walks"]) == fs
