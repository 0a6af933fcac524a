"""Machine checks of the product-curvature identities on explicit product graphs.

Every check evaluates the left-hand side on the product graph itself (optimal
assignment between exclusive neighbourhoods, or exact transport for
``kappa_alpha``) and the right-hand side from factor data, then records
the exact slack.

Check identifiers::

    T1       horizontal strong edges, lower bounds for kappa_LLY and kappa_0
    T2-LLY   twin strong edges, kappa_LLY formula
    T2-K0    twin strong edges, kappa_0 formula
    T3       non-twin diagonal strong edges, lower bound with X
    T4-LLY   horizontal Cartesian edges, kappa_LLY formula
    T4-K0    horizontal Cartesian edges, kappa_0 formula
    COR1     complete factor: two-branch formulas for every strong edge
    COR2     twin strong edges, closed form of the idleness function
    L1, L2   OPT and MAX of twin strong edges
    L3, L4   OPT and MAX of horizontal Cartesian edges
    P1, P2   strong / Cartesian product distance

Vertical edges are handled by swapping the roles of the factors.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .curvature import kappa_alpha
from .errors import PreconditionError, RicciError
from .graph import (
    EdgeKind,
    Graph,
    ProductGraph,
    cartesian_product,
    classify_edge,
    closed_neighborhood_equal,
    edge_neighborhood,
    strong_product,
)
from .transport import max_over_optimal, opt_value

__all__ = [
    "Relation",
    "TheoremCheckReport",
    "DiagonalBoundX",
    "THEOREM_FAMILIES",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4",
    "check_corollary_complete",
    "check_corollary_idleness",
    "check_lemma_identities",
    "check_distances",
    "sweep",
    "summarize",
]

THEOREM_FAMILIES = ("T1", "T2", "T3", "T4", "COR1", "COR2", "L1", "L2", "L3", "L4", "P1", "P2")


class Relation(enum.Enum):
    EQUAL = "=="
    GREATER_EQUAL = ">="


@dataclass(frozen=True)
class TheoremCheckReport:
    theorem_id: str
    quantity: str
    instance: dict[str, str]
    lhs: Fraction | int
    rhs: Fraction | int
    relation: Relation
    holds: bool
    slack: Fraction
    error: str | None = None


@dataclass(frozen=True)
class DiagonalBoundX:
    r_x_size: int
    r_y_size: int
    degree: int
    x_value: Fraction = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "x_value", 1 - Fraction(self.r_x_size * self.r_y_size - 1, self.degree)
        )


def _report(theorem_id: str, quantity: str, instance: dict[str, str], lhs, rhs, relation: Relation) -> TheoremCheckReport:
    slack = Fraction(lhs) - Fraction(rhs)
    holds = slack == 0 if relation is Relation.EQUAL else slack >= 0
    return TheoremCheckReport(theorem_id, quantity, instance, lhs, rhs, relation, holds, slack)


def _failed(theorem_id: str, quantity: str, instance: dict[str, str], exc: Exception) -> TheoremCheckReport:
    return TheoremCheckReport(
        theorem_id, quantity, instance, Fraction(0), Fraction(0), Relation.EQUAL, False,
        Fraction(0), error=f"{type(exc).__name__}: {exc}",
    )


# --------------------------------------------------------------------------
# Edge data with memoisation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _EdgeData:
    degree: int
    triangle: int
    r_size: int
    opt: int
    max: int | None
    kappa_lly: Fraction
    kappa_zero: Fraction


class _Cache:
    """Assignment-route edge data keyed by graph identity and unordered edge."""

    def __init__(self) -> None:
        self._graphs: dict[int, Graph] = {}
        self._data: dict[tuple[int, int, int], _EdgeData] = {}

    def edge(self, g: Graph, x: int, y: int) -> _EdgeData:
        key = (id(g), min(x, y), max(x, y))
        hit = self._data.get(key)
        if hit is not None:
            return hit
        self._graphs[id(g)] = g
        nb = edge_neighborhood(g, x, y)
        d = g.degree(x)
        if g.degree(y) != d:
            raise PreconditionError("edge endpoints have unequal degrees")
        opt = opt_value(g, x, y)
        mx = max_over_optimal(g, x, y) if nb.r_x else None
        lly = Fraction(d + 1 - opt, d)
        k0 = lly - Fraction(2, d) if len(nb.triangle) == d - 1 else lly - Fraction(3 - mx, d)  # type: ignore[operator]
        data = _EdgeData(d, len(nb.triangle), len(nb.r_x), opt, mx, lly, k0)
        self._data[key] = data
        return data


@dataclass(frozen=True)
class _Roles:
    """A product edge seen as (fixed-ish factor F, moving factor M).

    ``f1, f2`` are the F-coordinates and ``m1, m2`` the M-coordinates of the
    two endpoints; ``swapped`` is True when F is the right factor.
    """

    product: ProductGraph
    u: int
    v: int
    F: Graph
    M: Graph
    f1: int
    f2: int
    m1: int
    m2: int
    swapped: bool
    names: tuple[str, str]

    @property
    def dF(self) -> int:
        return self.F.regular_degree()  # type: ignore[return-value]

    @property
    def dM(self) -> int:
        return self.M.regular_degree()  # type: ignore[return-value]

    def instance(self, **extra: str) -> dict[str, str]:
        p = self.product
        inst = {
            "product": p.kind,
            "G": self.names[0],
            "H": self.names[1],
            "edge": f"{p.graph.label(self.u)}-{p.graph.label(self.v)}",
            "kind": classify_edge(p, (self.u, self.v)).value,
            "roles": "swapped" if self.swapped else "direct",
        }
        inst.update(extra)
        return inst


def _roles(p: ProductGraph, u: int, v: int, swapped: bool, names: tuple[str, str]) -> _Roles:
    (a1, b1), (a2, b2) = p.coords[u], p.coords[v]
    if swapped:
        return _Roles(p, u, v, p.right, p.left, b1, b2, a1, a2, True, names)
    return _Roles(p, u, v, p.left, p.right, a1, a2, b1, b2, False, names)


def _require_regular(*graphs: Graph) -> None:
    for g in graphs:
        if not g.is_regular():
            raise PreconditionError(f"factor {g!r} is not regular")


def _product_degree(r: _Roles) -> int:
    if r.product.kind == "strong":
        return r.dF + r.dM + r.dF * r.dM
    return r.dF + r.dM


def _require_twin_edge(r: _Roles) -> None:
    if not closed_neighborhood_equal(r.F, r.f1, r.f2):
        raise PreconditionError("fixed-factor coordinates are not closed twins")
    if not r.M.has_edge(r.m1, r.m2):
        raise PreconditionError("moving-factor coordinates are not adjacent")


# --------------------------------------------------------------------------
# Individual checks on a product edge
# --------------------------------------------------------------------------


def _t1(r: _Roles, cache: _Cache) -> list[TheoremCheckReport]:
    if r.f1 != r.f2:
        raise PreconditionError("T1 needs a horizontal edge (equal fixed coordinates)")
    _require_twin_edge(r)
    d = _product_degree(r)
    e, f = cache.edge(r.product.graph, r.u, r.v), cache.edge(r.M, r.m1, r.m2)
    c = Fraction(r.dM * (r.dF + 1), d)
    inst = r.instance()
    return [
        _report("T1", "kappa_lly", inst, e.kappa_lly, c * f.kappa_lly, Relation.GREATER_EQUAL),
        _report("T1", "kappa_zero", inst, e.kappa_zero, c * f.kappa_zero, Relation.GREATER_EQUAL),
    ]


def _t2(r: _Roles, cache: _Cache) -> list[TheoremCheckReport]:
    _require_twin_edge(r)
    d = _product_degree(r)
    e, f = cache.edge(r.product.graph, r.u, r.v), cache.edge(r.M, r.m1, r.m2)
    inst = r.instance()
    lly_rhs = Fraction(r.dM * (r.dF + 1), d) * f.kappa_lly
    k0_rhs = Fraction(r.dF * r.dM, d) * f.kappa_lly + Fraction(r.dM, d) * f.kappa_zero
    return [
        _report("T2-LLY", "kappa_lly", inst, e.kappa_lly, lly_rhs, Relation.EQUAL),
        _report("T2-K0", "kappa_zero", inst, e.kappa_zero, k0_rhs, Relation.EQUAL),
    ]


def diagonal_bound_x(p: ProductGraph, u: int, v: int) -> DiagonalBoundX:
    (x1, y1), (x2, y2) = p.coords[u], p.coords[v]
    rx = edge_neighborhood(p.left, x1, x2).r_x
    ry = edge_neighborhood(p.right, y1, y2).r_x
    return DiagonalBoundX(len(rx), len(ry), p.graph.degree(u))


def _t3(r: _Roles, cache: _Cache) -> list[TheoremCheckReport]:
    p = r.product
    (x1, y1), (x2, y2) = p.coords[r.u], p.coords[r.v]
    G, H = p.left, p.right
    if not (G.has_edge(x1, x2) and H.has_edge(y1, y2)):
        raise PreconditionError("T3 needs a diagonal edge")
    if closed_neighborhood_equal(G, x1, x2) or closed_neighborhood_equal(H, y1, y2):
        raise PreconditionError("T3 needs N[x1] != N[x2] and N[y1] != N[y2]")
    dG, dH = G.regular_degree(), H.regular_degree()
    d = dG + dH + dG * dH  # type: ignore[operator]
    bx = diagonal_bound_x(p, r.u, r.v)
    e = cache.edge(p.graph, r.u, r.v)
    kg, kh = cache.edge(G, x1, x2), cache.edge(H, y1, y2)
    rhs = (
        Fraction(dH * (dG + 1), d) * kh.kappa_lly  # type: ignore[operator]
        + Fraction(dG * (dH + 1), d) * kg.kappa_lly  # type: ignore[operator]
        - bx.x_value
    )
    inst = r.instance(X=str(bx.x_value), r_x_size=str(bx.r_x_size), r_y_size=str(bx.r_y_size))
    return [_report("T3", "kappa_lly", inst, e.kappa_lly, rhs, Relation.GREATER_EQUAL)]


def _t4(r: _Roles, cache: _Cache) -> list[TheoremCheckReport]:
    if r.f1 != r.f2 or not r.M.has_edge(r.m1, r.m2):
        raise PreconditionError("T4 needs a horizontal Cartesian edge")
    d = _product_degree(r)
    e, f = cache.edge(r.product.graph, r.u, r.v), cache.edge(r.M, r.m1, r.m2)
    c = Fraction(r.dM, d)
    inst = r.instance()
    return [
        _report("T4-LLY", "kappa_lly", inst, e.kappa_lly, c * f.kappa_lly, Relation.EQUAL),
        _report("T4-K0", "kappa_zero", inst, e.kappa_zero, c * f.kappa_zero, Relation.EQUAL),
    ]


def _cor1(r: _Roles, cache: _Cache) -> list[TheoremCheckReport]:
    if r.F.degree(0) != r.F.n - 1 or not r.F.is_regular():
        raise PreconditionError("COR1 needs a complete fixed factor")
    d = _product_degree(r)
    e = cache.edge(r.product.graph, r.u, r.v)
    inst = r.instance()
    if r.m1 != r.m2 and edge_neighborhood(r.M, r.m1, r.m2).r_x:
        f = cache.edge(r.M, r.m1, r.m2)
        lly_rhs = Fraction(r.dM * (r.dF + 1), d) * f.kappa_lly
        k0_rhs = Fraction(r.dF * r.dM, d) * f.kappa_lly + Fraction(r.dM, d) * f.kappa_zero
        inst["branch"] = "factor"
    else:
        lly_rhs = Fraction(d + 1, d)
        k0_rhs = Fraction(d - 1, d)
        inst["branch"] = "empty"
    return [
        _report("COR1", "kappa_lly", inst, e.kappa_lly, lly_rhs, Relation.EQUAL),
        _report("COR1", "kappa_zero", inst, e.kappa_zero, k0_rhs, Relation.EQUAL),
    ]


def _cor2_rhs(dF: int, dM: int, lly: Fraction, k0: Fraction, alpha: Fraction) -> Fraction:
    d = dF + dM + dF * dM
    if alpha <= Fraction(1, d + 1):
        return dM * (lly - k0) * alpha + Fraction(dM, d) * (dF * lly + k0) * (1 - alpha)
    return Fraction(dM * (dF + 1), d) * lly * (1 - alpha)


def _cor2(r: _Roles, cache: _Cache, alphas: Sequence[Fraction] | None = None) -> list[TheoremCheckReport]:
    _require_twin_edge(r)
    d = _product_degree(r)
    f = cache.edge(r.M, r.m1, r.m2)
    if alphas is None:
        alphas = (Fraction(0), Fraction(1, 2 * (d + 1)), Fraction(1, d + 1), Fraction(1, 2))
    out = []
    for a in alphas:
        a = Fraction(a)
        if not 0 <= a <= 1:
            raise PreconditionError(f"idleness {a} outside [0, 1]")
        lhs = kappa_alpha(r.product.graph, r.u, r.v, a)
        rhs = _cor2_rhs(r.dF, r.dM, f.kappa_lly, f.kappa_zero, a)
        out.append(_report("COR2", "kappa_alpha", r.instance(alpha=str(a)), lhs, rhs, Relation.EQUAL))
    return out


def _lemmas(r: _Roles, cache: _Cache, wanted: set[str]) -> list[TheoremCheckReport]:
    e = cache.edge(r.product.graph, r.u, r.v)
    f = cache.edge(r.M, r.m1, r.m2)
    inst = r.instance()
    out = []
    if r.product.kind == "strong":
        _require_twin_edge(r)
        if "L1" in wanted:
            out.append(_report("L1", "OPT", inst, e.opt, (r.dF + 1) * f.opt, Relation.EQUAL))
        if "L2" in wanted and f.r_size:
            out.append(_report("L2", "MAX", inst, e.max, f.max, Relation.EQUAL))
    else:
        if r.f1 != r.f2 or not r.M.has_edge(r.m1, r.m2):
            raise PreconditionError("L3/L4 need a horizontal Cartesian edge")
        if "L3" in wanted:
            out.append(_report("L3", "OPT", inst, e.opt, f.opt + r.dF, Relation.EQUAL))
        if "L4" in wanted and f.r_size:
            out.append(_report("L4", "MAX", inst, e.max, f.max, Relation.EQUAL))
    return out


# --------------------------------------------------------------------------
# Public per-instance API
# --------------------------------------------------------------------------

_DEFAULT_NAMES = ("G", "H")


def _prepared(p: ProductGraph, u: int, v: int) -> None:
    _require_regular(p.left, p.right)
    if not p.graph.has_edge(u, v):
        raise PreconditionError(f"{p.graph.label(u)!r} and {p.graph.label(v)!r} are not adjacent")


def check_theorem1(g: Graph, h: Graph, x: int, y1: int, y2: int) -> list[TheoremCheckReport]:
    """Lower bounds on the horizontal strong edge ``((x, y1), (x, y2))``."""
    p = strong_product(g, h)
    u, v = p.vertex(x, y1), p.vertex(x, y2)
    _prepared(p, u, v)
    return _t1(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache())


def check_theorem2(g: Graph, h: Graph, x1: int, x2: int, y1: int, y2: int) -> list[TheoremCheckReport]:
    """Exact kappa_LLY and kappa_0 of ``((x1, y1), (x2, y2))`` when ``N_G[x1] = N_G[x2]``.

    Distinct twins are necessarily adjacent, so the product edge exists
    whenever the preconditions hold; this is asserted rather than assumed.
    """
    _require_regular(g, h)
    if not closed_neighborhood_equal(g, x1, x2):
        raise PreconditionError("N_G[x1] != N_G[x2]")
    if not h.has_edge(y1, y2):
        raise PreconditionError("y1 and y2 are not adjacent in H")
    p = strong_product(g, h)
    u, v = p.vertex(x1, y1), p.vertex(x2, y2)
    if not p.graph.has_edge(u, v):  # pragma: no cover - impossible for twins
        raise AssertionError("twin product pair is not an edge")
    return _t2(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache())


def check_theorem3(g: Graph, h: Graph, x1: int, x2: int, y1: int, y2: int) -> TheoremCheckReport:
    """Lower bound with X on a diagonal edge whose coordinates are not twins."""
    p = strong_product(g, h)
    u, v = p.vertex(x1, y1), p.vertex(x2, y2)
    _prepared(p, u, v)
    return _t3(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache())[0]


def check_theorem4(g: Graph, h: Graph, x: int, y1: int, y2: int) -> list[TheoremCheckReport]:
    """Exact curvatures of the horizontal Cartesian edge ``((x, y1), (x, y2))``."""
    p = cartesian_product(g, h)
    u, v = p.vertex(x, y1), p.vertex(x, y2)
    _prepared(p, u, v)
    return _t4(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache())


def check_corollary_complete(g: Graph, h: Graph, x1: int, x2: int, y1: int, y2: int) -> list[TheoremCheckReport]:
    """Two-branch formulas for any edge of ``K_n ⊠ H`` (``g`` must be complete)."""
    p = strong_product(g, h)
    u, v = p.vertex(x1, y1), p.vertex(x2, y2)
    _prepared(p, u, v)
    return _cor1(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache())


def check_corollary_idleness(
    g: Graph, h: Graph, x1: int, x2: int, y1: int, y2: int, alpha: Fraction | int
) -> TheoremCheckReport:
    """Closed-form kappa_alpha of a twin strong edge against the transport value."""
    p = strong_product(g, h)
    u, v = p.vertex(x1, y1), p.vertex(x2, y2)
    _prepared(p, u, v)
    return _cor2(_roles(p, u, v, False, _DEFAULT_NAMES), _Cache(), [Fraction(alpha)])[0]


def check_lemma_identities(g: Graph, h: Graph, x1: int, x2: int, y1: int, y2: int) -> list[TheoremCheckReport]:
    """L1/L2 on the strong product and, when ``x1 == x2``, L3/L4 on the Cartesian one.

    L2 and L4 are only reported when ``R_{y1}(y1, y2)`` is nonempty.
    """
    _require_regular(g, h)
    cache = _Cache()
    out = []
    sp = strong_product(g, h)
    u, v = sp.vertex(x1, y1), sp.vertex(x2, y2)
    out += _lemmas(_roles(sp, u, v, False, _DEFAULT_NAMES), cache, {"L1", "L2"})
    if x1 == x2:
        cp = cartesian_product(g, h)
        u, v = cp.vertex(x1, y1), cp.vertex(x2, y2)
        out += _lemmas(_roles(cp, u, v, False, _DEFAULT_NAMES), cache, {"L3", "L4"})
    return out


def check_distances(p: ProductGraph, source: int, names: tuple[str, str] = _DEFAULT_NAMES) -> TheoremCheckReport:
    """Product distances from ``source`` against the max / sum of factor distances.

    ``lhs`` counts the targets where the two disagree; the check holds at 0.
    """
    a1, b1 = p.coords[source]
    row = p.graph.distances_from(source)
    drow, hrow = p.left.distances_from(a1), p.right.distances_from(b1)
    bad = 0
    for t, (a2, b2) in enumerate(p.coords):
        dg, dh = drow[a2], hrow[b2]
        if dg is None or dh is None:
            want = None
        else:
            want = max(dg, dh) if p.kind == "strong" else dg + dh
        bad += row[t] != want
    tid = "P1" if p.kind == "strong" else "P2"
    inst = {"product": p.kind, "G": names[0], "H": names[1], "source": p.graph.label(source)}
    return _report(tid, "distance", inst, bad, 0, Relation.EQUAL)


# --------------------------------------------------------------------------
# Sweeps
# --------------------------------------------------------------------------


def _families(selection: Iterable[str] | None) -> set[str]:
    if selection is None:
        return set(THEOREM_FAMILIES)
    chosen = set()
    for item in selection:
        name = item.strip().upper()
        if name in ("T2-LLY", "T2-K0"):
            name = "T2"
        if name in ("T4-LLY", "T4-K0"):
            name = "T4"
        if name not in THEOREM_FAMILIES:
            raise PreconditionError(f"unknown theorem id {item!r}")
        chosen.add(name)
    return chosen


def _guarded(tid: str, quantity: str, r: _Roles, fn, *args) -> list[TheoremCheckReport]:
    try:
        return fn(r, *args)
    except RicciError as exc:
        return [_failed(tid, quantity, r.instance(), exc)]


def _edge_checks(p: ProductGraph, u: int, v: int, fam: set[str], names: tuple[str, str], cache: _Cache) -> list[TheoremCheckReport]:
    kind = classify_edge(p, (u, v))
    out: list[TheoremCheckReport] = []
    if p.kind == "cartesian":
        r = _roles(p, u, v, kind is EdgeKind.VERTICAL, names)
        if "T4" in fam:
            out += _guarded("T4", "kappa", r, _t4, cache)
        lem = fam & {"L3", "L4"}
        if lem:
            out += _guarded("L3/L4", "OPT/MAX", r, _lemmas, cache, lem)
        return out

    (a1, b1), (a2, b2) = p.coords[u], p.coords[v]
    if kind is EdgeKind.HORIZONTAL:
        twin_swapped: bool | None = False
    elif kind is EdgeKind.VERTICAL:
        twin_swapped = True
    elif closed_neighborhood_equal(p.left, a1, a2):
        twin_swapped = False
    elif closed_neighborhood_equal(p.right, b1, b2):
        twin_swapped = True
    else:
        twin_swapped = None

    if twin_swapped is None:
        if "T3" in fam:
            out += _guarded("T3", "kappa_lly", _roles(p, u, v, False, names), _t3, cache)
    else:
        r = _roles(p, u, v, twin_swapped, names)
        if "T1" in fam and kind is not EdgeKind.DIAGONAL:
            out += _guarded("T1", "kappa", r, _t1, cache)
        if "T2" in fam:
            out += _guarded("T2", "kappa", r, _t2, cache)
        lem = fam & {"L1", "L2"}
        if lem:
            out += _guarded("L1/L2", "OPT/MAX", r, _lemmas, cache, lem)
        if "COR2" in fam:
            out += _guarded("COR2", "kappa_alpha", r, _cor2, cache)
    if "COR1" in fam:
        complete = [f.is_regular() and f.regular_degree() == f.n - 1 for f in (p.left, p.right)]
        if complete[0] or complete[1]:
            out += _guarded("COR1", "kappa", _roles(p, u, v, not complete[0], names), _cor1, cache)
    return out


def _sweep_chunk(p: ProductGraph, fam: set[str], names: tuple[str, str], edges: list[tuple[int, int]], sources: list[int]) -> list[TheoremCheckReport]:
    cache = _Cache()
    out: list[TheoremCheckReport] = []
    for u, v in edges:
        out += _edge_checks(p, u, v, fam, names, cache)
    for s in sources:
        out.append(check_distances(p, s, names))
    return out


def default_jobs() -> int:
    """Worker count from ``RICCI_JOBS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("RICCI_JOBS", "1")))
    except ValueError:
        return 1


def sweep(
    p: ProductGraph,
    theorems: Iterable[str] | None = None,
    *,
    names: tuple[str, str] = _DEFAULT_NAMES,
    jobs: int | None = None,
) -> list[TheoremCheckReport]:
    """Run every applicable selected check on every edge of ``p``.

    Factors must be regular.  Per-edge failures are recorded as reports with
    ``holds=False`` and an ``error`` message.  Report order is fixed
    (edges in lexicographic order, then distance checks by source vertex)
    regardless of ``jobs``.
    """
    _require_regular(p.left, p.right)
    fam = _families(theorems)
    edges = list(p.graph.edges())
    want_dist = ("P1" in fam and p.kind == "strong") or ("P2" in fam and p.kind == "cartesian")
    sources = list(range(p.graph.n)) if want_dist else []
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(edges) < 2:
        return _sweep_chunk(p, fam, names, edges, sources)
    nchunks = jobs * 4
    # contiguous chunks, concatenated in submission order, keep the serial order
    esize = -(-len(edges) // nchunks)
    ssize = -(-len(sources) // nchunks) if sources else 0
    tasks = [(edges[i:i + esize], []) for i in range(0, len(edges), esize)]
    if ssize:
        tasks += [([], sources[i:i + ssize]) for i in range(0, len(sources), ssize)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_sweep_chunk, p, fam, names, e, s) for e, s in tasks]
        return [rep for f in futures for rep in f.result()]


@dataclass(frozen=True)
class SweepSummary:
    counts: dict[str, tuple[int, int]]  # theorem id -> (passed, total)
    worst_slack: dict[str, Fraction]
    failures: int


def summarize(reports: Sequence[TheoremCheckReport]) -> SweepSummary:
    counts: dict[str, list[int]] = {}
    worst: dict[str, Fraction] = {}
    failures = 0
    for rep in reports:
        c = counts.setdefault(rep.theorem_id, [0, 0])
        c[1] += 1
        if rep.holds:
            c[0] += 1
        else:
            failures += 1
        if rep.error is None:
            cur = worst.get(rep.theorem_id)
            if cur is None or rep.slack < cur:
                worst[rep.theorem_id] = rep.slack
    return SweepSummary({k: (v[0], v[1]) for k, v in sorted(counts.items())}, dict(sorted(worst.items())), failures)
