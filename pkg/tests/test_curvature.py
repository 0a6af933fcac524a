from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphricci.curvature import (
    IdlenessFunction,
    Measure,
    edge_report,
    idleness_function,
    kappa_alpha,
    kappa_lly_assignment,
    kappa_lly_limit,
    kappa_zero,
    walk_measure,
    wasserstein,
)
from graphricci.errors import PreconditionError, UnreachableError
from graphricci.graph import Graph, cartesian_product, edge_neighborhood, generate, parse_edge_list, strong_product
from oracles import SUITE, lp_transport, walk_masses

F = Fraction


def _diag(name):
    c4, h = generate("cycle:4"), generate(name)
    p = strong_product(c4, h)
    return p.graph, p.vertex(0, h.index("y1")), p.vertex(1, h.index("y2"))


def _y(name):
    g = generate(name)
    return g, g.index("y1"), g.index("y2")


# ---------------------------------------------------------------- measures


def test_walk_measure_examples():
    c4 = generate("cycle:4")
    assert walk_measure(c4, 0, 1).atoms == ((0, F(1)),)
    assert walk_measure(c4, 0, 0).atoms == ((1, F(1, 2)), (3, F(1, 2)))
    assert walk_measure(c4, 0, "1/3").atoms == ((0, F(1, 3)), (1, F(1, 3)), (3, F(1, 3)))


def test_walk_measure_errors():
    c4 = generate("cycle:4")
    for bad in (F(-1, 2), F(3, 2)):
        with pytest.raises(PreconditionError):
            walk_measure(c4, 0, bad)
    with pytest.raises(TypeError):
        walk_measure(c4, 0, 0.5)
    lonely = Graph.from_edges(["a", "b", "c"], [(0, 1)])
    with pytest.raises(PreconditionError):
        walk_measure(lonely, 2, 0)


def test_measure_invariants():
    with pytest.raises(ValueError):
        Measure(((1, F(1, 2)), (0, F(1, 2))))
    with pytest.raises(ValueError):
        Measure(((0, F(1, 2)),))
    with pytest.raises(ValueError):
        Measure(((0, F(3, 2)), (1, F(-1, 2))))


def test_wasserstein_examples():
    g, y1, y2 = _y("h1")
    m = walk_measure(g, y1, F(1, 4))
    assert wasserstein(g, m, m) == 0
    assert wasserstein(g, walk_measure(g, y1, 1), walk_measure(g, g.index("i1"), 1)) == 2
    assert wasserstein(g, m, walk_measure(g, y2, F(1, 4))) == 1


def test_wasserstein_disconnected():
    g = parse_edge_list("a b\nc d\n")
    with pytest.raises(UnreachableError):
        wasserstein(g, walk_measure(g, 0, 0), walk_measure(g, 2, 0))


@pytest.mark.parametrize("name", ["cycle:5", "petersen", "h1", "h2"])
def test_wasserstein_matches_lp_oracle(name):
    g = generate(name)
    for x, y in g.edges():
        for a in (F(0), F(1, 5), F(1, 2)):
            ma, mb = walk_masses(g, x, a), walk_masses(g, y, a)
            sa, sb = sorted(ma), sorted(mb)
            cost = [[g.distance(s, t) for t in sb] for s in sa]
            lp = lp_transport([ma[s] for s in sa], [mb[t] for t in sb], cost)
            w = wasserstein(g, walk_measure(g, x, a), walk_measure(g, y, a))
            assert float(w) == pytest.approx(lp, abs=1e-9)


# ---------------------------------------------------------------- kappa_alpha


def test_kappa_alpha_examples():
    c4, k2 = generate("cycle:4"), generate("complete:2")
    assert kappa_alpha(c4, 0, 1, 1) == 0
    assert kappa_alpha(c4, 0, 1, 0) == 0
    assert kappa_alpha(k2, 0, 1, 0) == 0
    assert kappa_alpha(k2, 0, 1, "1/2") == 1


def test_kappa_alpha_non_adjacent_pair():
    c6 = generate("cycle:6")
    # point masses at distance 3
    assert kappa_alpha(c6, 0, 3, 1) == 0
    assert kappa_alpha(c6, 0, 2, 0) == kappa_alpha(c6, 2, 0, 0)


def test_kappa_alpha_errors():
    c4 = generate("cycle:4")
    with pytest.raises(PreconditionError):
        kappa_alpha(c4, 0, 0, 0)
    with pytest.raises(UnreachableError):
        g = parse_edge_list("a b\nc d\n")
        kappa_alpha(g, 0, 2, 0)


# ---------------------------------------------------------------- kappa_LLY


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_lly_complete(n):
    g = generate(f"complete:{n}")
    assert kappa_lly_assignment(g, 0, 1) == F(n, n - 1)
    assert kappa_lly_limit(g, 0, 1) == F(n, n - 1)


@pytest.mark.parametrize("spec, expect", [("cycle:4", 1), ("cycle:5", F(1, 2)), ("cycle:6", 0)])
def test_lly_cycles(spec, expect):
    g = generate(spec)
    assert kappa_lly_assignment(g, 0, 1) == expect
    assert kappa_lly_limit(g, 0, 1) == expect


def test_lly_fixture_edges_are_flat():
    for name in ("h1", "h2"):
        g, y1, y2 = _y(name)
        assert kappa_lly_assignment(g, y1, y2) == 0
        assert kappa_lly_limit(g, y1, y2) == 0


def test_lly_cube_edge():
    cube = cartesian_product(generate("complete:2"), generate("cycle:4")).graph
    assert kappa_lly_limit(cube, 0, 1) == F(2, 3)
    hc = generate("hypercube:3")
    assert all(kappa_lly_limit(hc, x, y) == F(2, 3) for x, y in hc.edges())


def test_lly_headline_diagonal_values():
    g, u, v = _diag("h1")
    assert kappa_lly_assignment(g, u, v) == F(-1, 11)
    assert kappa_lly_limit(g, u, v) == F(-1, 11)
    g, u, v = _diag("h2")
    assert kappa_lly_assignment(g, u, v) == 0
    assert kappa_lly_limit(g, u, v) == 0


def test_lly_unequal_degrees_rejected():
    p3 = generate("path:3")
    with pytest.raises(PreconditionError):
        kappa_lly_assignment(p3, 0, 1)
    with pytest.raises(PreconditionError):
        kappa_lly_limit(p3, 0, 1)
    # the transport route still answers
    assert kappa_alpha(p3, 0, 1, 0) == kappa_alpha(p3, 1, 0, 0)


def test_lly_non_adjacent_rejected():
    with pytest.raises(PreconditionError):
        kappa_lly_assignment(generate("cycle:6"), 0, 2)


# ---------------------------------------------------------------- kappa_0


@pytest.mark.parametrize("n", [2, 3, 5])
def test_kappa_zero_complete(n):
    assert kappa_zero(generate(f"complete:{n}"), 0, 1) == F(n - 2, n - 1)


@pytest.mark.parametrize("spec", ["cycle:4", "cycle:6"])
def test_kappa_zero_cycles(spec):
    assert kappa_zero(generate(spec), 0, 1) == 0


def test_kappa_zero_fixtures():
    # H1: OPT 4, MAX 2 gives (3+1-4)/3 - (3-2)/3; H2: MAX 3 gives 0
    g, y1, y2 = _y("h1")
    assert kappa_zero(g, y1, y2) == F(-1, 3) == kappa_alpha(g, y1, y2, 0)
    g, y1, y2 = _y("h2")
    assert kappa_zero(g, y1, y2) == 0 == kappa_alpha(g, y1, y2, 0)


def test_full_triangle_branch():
    for g in (generate("complete:4"), strong_product(generate("complete:3"), generate("complete:2")).graph):
        for x, y in g.edges():
            d = g.degree(x)
            if len(edge_neighborhood(g, x, y).triangle) == d - 1:
                assert kappa_zero(g, x, y) == kappa_lly_assignment(g, x, y) - F(2, d)


# ---------------------------------------------------------------- idleness


def test_idleness_k2():
    f = idleness_function(generate("complete:2"), 0, 1)
    assert f.breakpoint == F(1, 2)
    assert (f(0), f("1/2"), f(1)) == (0, 1, 0)


def test_idleness_c4():
    f = idleness_function(generate("cycle:4"), 0, 1)
    assert f(F(1, 3)) == F(2, 3)


def test_idleness_h1():
    g, y1, y2 = _y("h1")
    f = idleness_function(g, y1, y2)
    assert f.breakpoint == F(1, 4)
    assert f(0) == F(-1, 3)
    assert all(f(F(k, 8)) == 0 for k in range(2, 9))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.fractions(-3, 3), st.fractions(-3, 3), st.fractions(0, 1))
def test_idleness_function_shape(d, lly, k0, a):
    f = IdlenessFunction(d, lly, k0)
    assert f(0) == k0 and f(1) == 0
    b = f.breakpoint
    assert f(b) == (1 - b) * lly
    if a >= b:
        assert f(a) == (1 - a) * lly


def test_idleness_rejects_out_of_range():
    f = idleness_function(generate("cycle:4"), 0, 1)
    with pytest.raises(PreconditionError):
        f(F(2))


# ---------------------------------------------------------------- properties over the suite


def _suite_graphs():
    gs = [(s, generate(s)) for s in SUITE + ("hypercube:3",)]
    gs.append(("strong(cycle:4,h1)", strong_product(generate("cycle:4"), generate("h1")).graph))
    gs.append(("cartesian(complete:3,cycle:5)", cartesian_product(generate("complete:3"), generate("cycle:5")).graph))
    return gs


@pytest.mark.parametrize("name, g", _suite_graphs(), ids=[n for n, _ in _suite_graphs()])
def test_routes_agree_and_idleness_consistent(name, g):
    for x, y in g.edges():
        d = g.degree(x)
        f = idleness_function(g, x, y)
        assert kappa_lly_assignment(g, x, y) == kappa_lly_limit(g, x, y)
        assert kappa_zero(g, x, y) == kappa_alpha(g, x, y, 0)
        for a in (F(0), F(1, 8), F(1, d + 1), F(1, 2), F(3, 4)):
            assert f(a) == kappa_alpha(g, x, y, a)
        assert kappa_alpha(g, x, y, 1) == 0


@pytest.mark.parametrize("name", ["cycle:5", "h1", "h2", "petersen"])
def test_symmetry(name):
    g = generate(name)
    for x, y in g.edges():
        assert kappa_alpha(g, x, y, F(1, 7)) == kappa_alpha(g, y, x, F(1, 7))
        assert kappa_lly_assignment(g, x, y) == kappa_lly_assignment(g, y, x)
        assert kappa_lly_limit(g, x, y) == kappa_lly_limit(g, y, x)
        assert kappa_zero(g, x, y) == kappa_zero(g, y, x)


# ---------------------------------------------------------------- reports


def test_edge_report_h1():
    g, y1, y2 = _y("h1")
    r = edge_report(g, y1, y2)
    assert (r.opt, r.max, r.kappa_lly, r.kappa_zero, r.cross_check) == (4, 2, 0, F(-1, 3), True)
    assert r.degree == 3 and r.triangle_size == 0


def test_edge_report_k4():
    r = edge_report(generate("complete:4"), 0, 1)
    assert r.opt == 0 and r.max is None
    assert r.kappa_zero == r.kappa_lly - F(2, 3)
    assert r.cross_check


def test_edge_report_diagonal_h2():
    g, u, v = _diag("h2")
    r = edge_report(g, u, v)
    assert r.opt == 12 and r.kappa_lly == 0 and r.cross_check


def test_edge_report_unequal_degrees():
    with pytest.raises(PreconditionError):
        edge_report(generate("path:3"), 0, 1)
