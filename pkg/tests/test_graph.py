from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphricci.errors import GraphError, ParseError, PreconditionError, UnreachableError
from graphricci.graph import (
    EdgeKind,
    Graph,
    bfs_distance,
    cartesian_product,
    classify_edge,
    closed_neighborhood_equal,
    edge_neighborhood,
    format_edge_list,
    generate,
    parse_edge_list,
    strong_product,
)
from oracles import SUITE, floyd_warshall

H1_EDGES = """\
# H1 fixture under its construction names: o4 and o5 are y1 and y2
o1 o2
o2 o3
o3 o4
o4 o5
o5 o1
o5 i1
i1 i2
i2 i3
i3 o4
i1 o1
i2 o2
i3 o3
"""


def test_parse_path():
    g = parse_edge_list("a b\nb c")
    assert g.n == 3 and g.num_edges == 2
    assert g.labels == ("a", "b", "c")
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(ParseError) as err:
        parse_edge_list("a b\n\na a\n")
    assert err.value.line == 3


@pytest.mark.parametrize("text", ["a\n", "a b c\n"])
def test_parse_rejects_bad_token_count(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_comments_duplicates_and_bytes():
    g = parse_edge_list(b"# header\n a b  # trailing\n\nb a\na b\n")
    assert g.n == 2 and g.num_edges == 1


def test_parse_fixture_file_is_three_regular():
    g = parse_edge_list(H1_EDGES)
    assert g.n == 8 and g.num_edges == 12
    assert g.regular_degree() == 3


def test_fixture_file_matches_generator_up_to_names():
    parsed = parse_edge_list(H1_EDGES)
    gen = generate("h1")
    rename = {"o4": "y1", "o5": "y2"}
    edges_parsed = {frozenset(rename.get(parsed.label(v), parsed.label(v)) for v in e) for e in parsed.edges()}
    edges_gen = {frozenset(gen.label(v) for v in e) for e in gen.edges()}
    assert edges_parsed == edges_gen


@pytest.mark.parametrize(
    "spec, n, m, deg",
    [
        ("cycle:4", 4, 4, 2),
        ("complete:4", 4, 6, 3),
        ("path:5", 5, 4, None),
        ("hypercube:3", 8, 12, 3),
        ("petersen", 10, 15, 3),
        ("h1", 8, 12, 3),
        ("h2", 10, 15, 3),
    ],
)
def test_generators(spec, n, m, deg):
    g = generate(spec)
    assert (g.n, g.num_edges, g.regular_degree()) == (n, m, deg)


def test_fixture_labels():
    for name in ("h1", "h2"):
        g = generate(name)
        assert g.has_edge(g.index("y1"), g.index("y2"))


@pytest.mark.parametrize("spec", ["cycle:2", "complete:1", "wheel:5", "petersen:3", "cycle", "", "cycle:x"])
def test_generator_errors(spec):
    with pytest.raises(ParseError):
        generate(spec)


def test_bfs_cycle():
    assert bfs_distance(generate("cycle:4"), 0) == [0, 1, 2, 1]


def test_bfs_h1_o3_to_i1():
    g = generate("h1")
    assert g.distance(g.index("o3"), g.index("i1")) == 3


def test_bfs_unreachable():
    g = parse_edge_list("a b\nc d\n")
    assert bfs_distance(g, 0) == [0, 1, None, None]
    with pytest.raises(UnreachableError):
        g.distance(0, 2)


@pytest.mark.parametrize("name", SUITE)
def test_bfs_matches_floyd_warshall(name):
    g = generate(name)
    fw = floyd_warshall(g)
    assert [list(g.distances_from(s)) for s in range(g.n)] == fw


def test_neighborhood_cycle():
    nb = edge_neighborhood(generate("cycle:4"), 0, 1)
    assert (nb.triangle, nb.r_x, nb.r_y) == ((), (3,), (2,))


def test_neighborhood_complete():
    nb = edge_neighborhood(generate("complete:4"), 0, 1)
    assert len(nb.triangle) == 2 and nb.r_x == () and nb.r_y == ()


def test_neighborhood_h1():
    g = generate("h1")
    nb = edge_neighborhood(g, g.index("y1"), g.index("y2"))
    assert nb.triangle == ()
    assert {g.label(v) for v in nb.r_x} == {"o3", "i3"}
    assert {g.label(v) for v in nb.r_y} == {"o1", "i1"}


def test_neighborhood_rejects_non_edge():
    with pytest.raises(PreconditionError):
        edge_neighborhood(generate("cycle:4"), 0, 2)


def _all_graphs():
    gs = [generate(s) for s in SUITE + ("path:4", "hypercube:3")]
    gs.append(strong_product(generate("cycle:4"), generate("h1")).graph)
    gs.append(cartesian_product(generate("complete:3"), generate("cycle:5")).graph)
    return gs


@pytest.mark.parametrize("g", _all_graphs(), ids=repr)
def test_neighborhood_partition(g):
    for x, y in g.edges():
        nb = edge_neighborhood(g, x, y)
        tri, rx, ry = set(nb.triangle), set(nb.r_x), set(nb.r_y)
        assert tri | rx | {y} == set(g.neighbors(x)) and len(tri) + len(rx) + 1 == g.degree(x)
        assert tri | ry | {x} == set(g.neighbors(y)) and len(tri) + len(ry) + 1 == g.degree(y)
        if g.degree(x) == g.degree(y):
            assert len(rx) == len(ry)


def test_strong_k2_k2_is_k4():
    k2 = generate("complete:2")
    p = strong_product(k2, k2)
    assert p.graph.num_edges == 6 and p.graph.regular_degree() == 3
    assert p.graph.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")


@pytest.mark.parametrize(
    "g, h, n, deg", [("cycle:4", "h1", 32, 11), ("cycle:4", "cycle:4", 16, 8)]
)
def test_strong_degree(g, h, n, deg):
    p = strong_product(generate(g), generate(h))
    assert p.graph.n == n and p.graph.regular_degree() == deg


def test_cartesian_k2_k2_is_c4():
    k2 = generate("complete:2")
    g = cartesian_product(k2, k2).graph
    assert g.regular_degree() == 2 and g.num_edges == 4
    assert bfs_distance(g, 0) == [0, 1, 1, 2]


def test_cartesian_k2_c4_is_cube():
    cube = cartesian_product(generate("complete:2"), generate("cycle:4")).graph
    hc = generate("hypercube:3")
    assert cube.regular_degree() == 3 and cube.n == 8
    # explicit relabelling (a, b) -> bits: a, then the 4-cycle as a Gray code
    gray = {0: 0b00, 1: 0b01, 2: 0b11, 3: 0b10}
    perm = [(a << 2) | gray[b] for a in range(2) for b in range(4)]
    relabelled = cube.relabel(perm)
    assert sorted(relabelled.edges()) == sorted(hc.edges())


def test_cartesian_c4_c4_degree():
    g = cartesian_product(generate("cycle:4"), generate("cycle:4")).graph
    assert g.n == 16 and g.regular_degree() == 4


def test_product_adjacency_matches_definition(graphs):
    g, h = graphs["cycle:5"], graphs["h1"]
    sp, cp = strong_product(g, h), cartesian_product(g, h)
    for u, (a1, b1) in enumerate(sp.coords):
        for v, (a2, b2) in enumerate(sp.coords):
            if u == v:
                continue
            strong = (a1 == a2 or g.has_edge(a1, a2)) and (b1 == b2 or h.has_edge(b1, b2))
            cart = (a1 == a2 and h.has_edge(b1, b2)) or (b1 == b2 and g.has_edge(a1, a2))
            assert sp.graph.has_edge(u, v) == strong
            assert cp.graph.has_edge(u, v) == cart


def test_classify_edge(graphs):
    p = strong_product(graphs["cycle:4"], graphs["h1"])
    h = graphs["h1"]
    y1, y2 = h.index("y1"), h.index("y2")
    assert classify_edge(p, (p.vertex(0, y1), p.vertex(0, y2))) is EdgeKind.HORIZONTAL
    assert classify_edge(p, (p.vertex(0, y1), p.vertex(1, y2))) is EdgeKind.DIAGONAL
    assert classify_edge(p, (p.vertex(0, y1), p.vertex(1, y1))) is EdgeKind.VERTICAL
    with pytest.raises(PreconditionError):
        classify_edge(p, (p.vertex(0, y1), p.vertex(2, y1)))
    cube = cartesian_product(graphs["complete:2"], graphs["cycle:4"])
    assert classify_edge(cube, (cube.vertex(0, 0), cube.vertex(0, 1))) is EdgeKind.HORIZONTAL
    assert {classify_edge(cube, e) for e in cube.graph.edges()} == {EdgeKind.HORIZONTAL, EdgeKind.VERTICAL}


def test_closed_neighborhood_equal(graphs):
    c4, k4 = graphs["cycle:4"], graphs["complete:4"]
    assert closed_neighborhood_equal(c4, 2, 2)
    assert all(closed_neighborhood_equal(k4, a, b) for a in range(4) for b in range(4))
    assert not closed_neighborhood_equal(c4, 0, 1)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(("a", "b"), ((1,), ()))
    with pytest.raises(GraphError):
        Graph(("a", "a"), ((1,), (0,)))
    with pytest.raises(GraphError):
        Graph.from_edges(["a"], [(0, 0)])


@pytest.mark.parametrize(
    "spec", ["cycle:7", "complete:5", "path:4", "hypercube:4", "petersen", "h1", "h2"]
)
def test_edge_list_round_trip(spec):
    g = generate(spec)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_round_trip_products(graphs):
    for p in (strong_product(graphs["cycle:4"], graphs["h1"]), cartesian_product(graphs["petersen"], graphs["h2"])):
        assert parse_edge_list(format_edge_list(p.graph)) == p.graph


def test_edge_list_round_trip_of_parsed_file():
    g = parse_edge_list("c d\na b\nb c\nz a\n")
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_refuses_isolated_vertex():
    g = Graph.from_edges(["a", "b", "c"], [(0, 1)])
    with pytest.raises(GraphError):
        format_edge_list(g)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SUITE + ("hypercube:3",)), st.randoms(use_true_random=False))
def test_relabel_invariance(name, rnd):
    g = generate(name)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    r = g.relabel(perm)
    for s in range(g.n):
        for t in range(g.n):
            assert r.distance(perm[s], perm[t]) == g.distance(s, t)
    for x, y in g.edges():
        a, b = edge_neighborhood(g, x, y), edge_neighborhood(r, perm[x], perm[y])
        assert (len(a.triangle), len(a.r_x), len(a.r_y)) == (len(b.triangle), len(b.r_x), len(b.r_y))
        assert {perm[v] for v in a.r_x} == set(b.r_x)


def test_random_products_distance_propositions():
    rnd = random.Random(7)
    for _ in range(5):
        g, h = generate(rnd.choice(SUITE)), generate(rnd.choice(SUITE))
        for p in (strong_product(g, h), cartesian_product(g, h)):
            for s in range(0, p.graph.n, 3):
                a1, b1 = p.coords[s]
                for t, (a2, b2) in enumerate(p.coords):
                    dg, dh = g.distance(a1, a2), h.distance(b1, b2)
                    want = max(dg, dh) if p.kind == "strong" else dg + dh
                    assert p.graph.distance(s, t) == want
