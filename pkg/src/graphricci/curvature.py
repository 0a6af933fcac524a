"""Lazy random-walk measures and the curvatures kappa_alpha, kappa_0 and kappa_LLY.

Two independent routes are provided wherever possible:

* the *transport* route solves the Wasserstein problem between the walk
  measures exactly (:func:`kappa_alpha`, :func:`kappa_lly_limit`);
* the *assignment* route evaluates the closed forms built on the optimal
  assignment between exclusive neighbourhoods (:func:`kappa_lly_assignment`,
  :func:`kappa_zero`).

All values are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CrossCheckError, PreconditionError
from .graph import Graph, edge_neighborhood
from .rational import as_rational
from .transport import (
    TransportPlan,
    TransportProblem,
    max_over_optimal,
    opt_value,
    solve_transport,
)

__all__ = [
    "Measure",
    "IdlenessFunction",
    "EdgeCurvatureReport",
    "walk_measure",
    "transport_problem",
    "transport_plan",
    "wasserstein",
    "kappa_alpha",
    "kappa_lly_assignment",
    "kappa_lly_limit",
    "kappa_zero",
    "idleness_function",
    "edge_report",
]


@dataclass(frozen=True)
class Measure:
    """Finitely supported probability measure; atoms sorted by vertex."""

    atoms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        verts = [v for v, _ in self.atoms]
        if verts != sorted(set(verts)):
            raise ValueError("atoms must be sorted by vertex without duplicates")
        if any(m < 0 for _, m in self.atoms):
            raise ValueError("masses must be non-negative")
        if sum(m for _, m in self.atoms) != 1:
            raise ValueError("masses must sum to exactly 1")

    def mass(self, v: int) -> Fraction:
        for w, m in self.atoms:
            if w == v:
                return m
        return Fraction(0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, m in self.atoms if m > 0)


def walk_measure(g: Graph, x: int, alpha: Fraction | int | str) -> Measure:
    """Mass ``alpha`` at ``x`` and ``(1 - alpha) / deg(x)`` on each neighbour."""
    a = as_rational(alpha)
    if not 0 <= a <= 1:
        raise PreconditionError(f"idleness {a} outside [0, 1]")
    d = g.degree(x)
    if d == 0:
        raise PreconditionError(f"vertex {g.label(x)!r} is isolated")
    share = (1 - a) / d
    atoms = {w: share for w in g.neighbors(x)}
    atoms[x] = a
    return Measure(tuple(sorted((v, m) for v, m in atoms.items() if m > 0)))


def transport_problem(g: Graph, m1: Measure, m2: Measure) -> TransportProblem:
    supply = tuple((v, m) for v, m in m1.atoms if m > 0)
    demand = tuple((v, m) for v, m in m2.atoms if m > 0)
    cost = tuple(tuple(g.distance(s, t) for t, _ in demand) for s, _ in supply)
    return TransportProblem(supply, demand, cost)


def transport_plan(g: Graph, m1: Measure, m2: Measure) -> TransportPlan:
    return solve_transport(transport_problem(g, m1, m2))


def wasserstein(g: Graph, m1: Measure, m2: Measure) -> Fraction:
    """Exact 1-Wasserstein distance under the hop metric of ``g``."""
    return transport_plan(g, m1, m2).total_cost


def kappa_alpha(g: Graph, x: int, y: int, alpha: Fraction | int | str) -> Fraction:
    """``1 - W(mu_x^alpha, mu_y^alpha) / d(x, y)`` for any two distinct vertices."""
    if x == y:
        raise PreconditionError("curvature needs two distinct vertices")
    dxy = g.distance(x, y)
    w = wasserstein(g, walk_measure(g, x, alpha), walk_measure(g, y, alpha))
    return 1 - w / dxy


def _common_degree(g: Graph, x: int, y: int) -> int:
    if not g.has_edge(x, y):
        raise PreconditionError(f"{g.label(x)!r} and {g.label(y)!r} are not adjacent")
    d = g.degree(x)
    if g.degree(y) != d:
        raise PreconditionError(
            f"unequal degrees {d} and {g.degree(y)} at edge ({g.label(x)!r}, {g.label(y)!r}); "
            "only kappa_alpha is available here"
        )
    return d


def kappa_lly_assignment(g: Graph, x: int, y: int) -> Fraction:
    """``(d + 1 - OPT) / d`` for an edge with equal endpoint degrees ``d``."""
    d = _common_degree(g, x, y)
    return Fraction(d + 1 - opt_value(g, x, y), d)


def kappa_lly_limit(g: Graph, x: int, y: int, *, verify: bool = True) -> Fraction:
    """Lin-Lu-Yau curvature by transport: ``kappa_alpha / (1 - alpha)`` at ``alpha = 1/(d+1)``.

    For equal-degree edges the idleness function is linear on
    ``[1/(d+1), 1]``, so one evaluation equals the limit.  With ``verify`` the
    ratio is recomputed at the midpoint of that interval and a mismatch raises
    :class:`CrossCheckError`.
    """
    d = _common_degree(g, x, y)
    a1 = Fraction(1, d + 1)
    value = kappa_alpha(g, x, y, a1) / (1 - a1)
    if verify:
        a2 = (1 + a1) / 2
        again = kappa_alpha(g, x, y, a2) / (1 - a2)
        if again != value:
            raise CrossCheckError(
                f"kappa_alpha/(1-alpha) not constant on [1/(d+1), 1]: {value} vs {again}"
            )
    return value


def kappa_zero(g: Graph, x: int, y: int) -> Fraction:
    """kappa_0 from the assignment data of edge ``xy``.

    ``kappa_LLY - 2/d`` when the edge lies in ``d - 1`` triangles, otherwise
    ``kappa_LLY - (3 - MAX)/d``.  The transport value is
    ``kappa_alpha(g, x, y, 0)``.
    """
    d = _common_degree(g, x, y)
    lly = kappa_lly_assignment(g, x, y)
    if len(edge_neighborhood(g, x, y).triangle) == d - 1:
        return lly - Fraction(2, d)
    return lly - Fraction(3 - max_over_optimal(g, x, y), d)


@dataclass(frozen=True)
class IdlenessFunction:
    """The two-piece linear map ``alpha -> kappa_alpha`` of an equal-degree edge."""

    d: int
    kappa_lly: Fraction
    kappa_zero: Fraction
    breakpoint: Fraction = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "breakpoint", Fraction(1, self.d + 1))

    def __call__(self, alpha: Fraction | int | str) -> Fraction:
        a = as_rational(alpha)
        if not 0 <= a <= 1:
            raise PreconditionError(f"idleness {a} outside [0, 1]")
        if a <= self.breakpoint:
            slope = self.d * self.kappa_lly - (self.d + 1) * self.kappa_zero
            return slope * a + self.kappa_zero
        return (1 - a) * self.kappa_lly


def idleness_function(g: Graph, x: int, y: int) -> IdlenessFunction:
    d = _common_degree(g, x, y)
    return IdlenessFunction(d, kappa_lly_assignment(g, x, y), kappa_zero(g, x, y))


@dataclass(frozen=True)
class EdgeCurvatureReport:
    edge: tuple[int, int]
    degree: int
    triangle_size: int
    opt: int
    max: int | None  # None when the exclusive neighbourhoods are empty
    kappa_lly: Fraction
    kappa_zero: Fraction
    kappa_lly_transport: Fraction
    kappa_zero_transport: Fraction
    route: dict[str, str]
    cross_check: bool


def edge_report(g: Graph, x: int, y: int) -> EdgeCurvatureReport:
    """All curvature data of edge ``xy`` with both routes evaluated and compared."""
    d = _common_degree(g, x, y)
    nb = edge_neighborhood(g, x, y)
    opt = opt_value(g, x, y)
    mx = max_over_optimal(g, x, y) if nb.r_x else None
    lly = Fraction(d + 1 - opt, d)
    if mx is None:
        k0 = lly - Fraction(2, d)
        k0_route = "assignment: kappa_lly - 2/d"
    else:
        k0 = lly - Fraction(3 - mx, d)
        k0_route = "assignment: kappa_lly - (3 - MAX)/d"
    agree = True
    try:
        lly_t = kappa_lly_limit(g, x, y)
    except CrossCheckError:
        lly_t = kappa_alpha(g, x, y, Fraction(1, d + 1)) * Fraction(d + 1, d)
        agree = False
    k0_t = kappa_alpha(g, x, y, 0)
    agree = agree and lly == lly_t and k0 == k0_t
    return EdgeCurvatureReport(
        edge=(x, y),
        degree=d,
        triangle_size=len(nb.triangle),
        opt=opt,
        max=mx,
        kappa_lly=lly,
        kappa_zero=k0,
        kappa_lly_transport=lly_t,
        kappa_zero_transport=k0_t,
        route={
            "kappa_lly": "assignment: (d + 1 - OPT)/d",
            "kappa_lly_transport": "transport: kappa_alpha/(1 - alpha) at alpha = 1/(d+1)",
            "kappa_zero": k0_route,
            "kappa_zero_transport": "transport: 1 - W(mu_x^0, mu_y^0)",
        },
        cross_check=agree,
    )
