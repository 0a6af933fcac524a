"""Exact optimal transport and optimal assignment over rationals.

The transportation solver scales all masses by the LCM of their
denominators and runs successive shortest augmenting paths on the integral
residual network, so nothing ever touches floating point.  Every plan comes
with dual potentials that certify optimality on their own.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from .errors import PreconditionError, UnreachableError
from .graph import Graph, edge_neighborhood

__all__ = [
    "TransportProblem",
    "TransportPlan",
    "AssignmentResult",
    "solve_transport",
    "certificate_violations",
    "solve_assignment",
    "opt_value",
    "max_over_optimal",
    "usable_pairs",
]

Site = Hashable


@dataclass(frozen=True)
class TransportProblem:
    """Balanced transportation instance.

    ``cost[i][j]`` is the integer cost from ``supply[i]`` to ``demand[j]``;
    ``None`` marks an infinite (unreachable) pair.
    """

    supply: tuple[tuple[Site, Fraction], ...]
    demand: tuple[tuple[Site, Fraction], ...]
    cost: tuple[tuple[int | None, ...], ...]


@dataclass(frozen=True)
class TransportPlan:
    flows: tuple[tuple[Site, Site, Fraction], ...]
    total_cost: Fraction
    u: tuple[Fraction, ...]  # potential per supply row
    v: tuple[Fraction, ...]  # potential per demand column


def _check_problem(p: TransportProblem) -> None:
    m, k = len(p.supply), len(p.demand)
    if m == 0 or k == 0:
        raise PreconditionError("transport problem needs nonempty supply and demand")
    if len(p.cost) != m or any(len(row) != k for row in p.cost):
        raise PreconditionError("cost matrix shape does not match supply x demand")
    for _, mass in p.supply + p.demand:
        if not isinstance(mass, (int, Fraction)):
            raise TypeError(f"masses must be exact rationals, got {type(mass).__name__}")
        if mass < 0:
            raise PreconditionError("masses must be non-negative")
    if sum(m for _, m in p.supply) != sum(m for _, m in p.demand):
        raise PreconditionError("unbalanced problem: total supply != total demand")
    for i, row in enumerate(p.cost):
        for j, c in enumerate(row):
            if c is None:
                raise UnreachableError(
                    f"infinite cost between {p.supply[i][0]!r} and {p.demand[j][0]!r}"
                )
            if c < 0:
                raise PreconditionError("costs must be non-negative")


def _bellman_ford(n: int, arcs: list[tuple[int, int, int]], sources: Sequence[int]) -> list[int | None]:
    """Shortest distances from a set of zero-distance sources (SPFA)."""
    out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, c in arcs:
        out[a].append((b, c))
    dist: list[int | None] = [None] * n
    inq = [False] * n
    queue: deque[int] = deque()
    for s in sources:
        dist[s] = 0
        inq[s] = True
        queue.append(s)
    relax = 0
    limit = n * max(len(arcs), 1) + n
    while queue:
        a = queue.popleft()
        inq[a] = False
        da = dist[a]
        for b, c in out[a]:
            nd = da + c  # type: ignore[operator]
            if dist[b] is None or nd < dist[b]:  # type: ignore[operator]
                dist[b] = nd
                relax += 1
                if relax > limit:
                    raise RuntimeError("negative cycle in residual network")
                if not inq[b]:
                    inq[b] = True
                    queue.append(b)
    return dist


def solve_transport(p: TransportProblem) -> TransportPlan:
    """Minimum-cost coupling of ``p.supply`` and ``p.demand``.

    Successive shortest paths on the integer-scaled network.  Ties are
    broken by arc insertion order, which is row-major over ``(i, j)``.
    """
    _check_problem(p)
    m, k = len(p.supply), len(p.demand)
    scale = math.lcm(*(Fraction(x).denominator for _, x in p.supply + p.demand))
    a = [int(x * scale) for _, x in p.supply]
    b = [int(x * scale) for _, x in p.demand]
    total = sum(a)

    # node ids: 0 source, 1..m rows, m+1..m+k columns, m+k+1 sink
    src, sink = 0, m + k + 1
    n = m + k + 2
    to: list[int] = []
    cap: list[int] = []
    cst: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]

    def add(u: int, v: int, c: int, w: int) -> int:
        out[u].append(len(to))
        to.append(v)
        cap.append(c)
        cst.append(w)
        out[v].append(len(to))
        to.append(u)
        cap.append(0)
        cst.append(-w)
        return len(to) - 2

    for i in range(m):
        add(src, 1 + i, a[i], 0)
    cell = [[add(1 + i, 1 + m + j, total + 1, p.cost[i][j]) for j in range(k)] for i in range(m)]  # type: ignore[arg-type]
    for j in range(k):
        add(1 + m + j, sink, b[j], 0)

    sent = 0
    while sent < total:
        dist: list[int | None] = [None] * n
        prev = [-1] * n
        inq = [False] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            inq[u] = False
            du = dist[u]
            for e in out[u]:
                if cap[e] > 0:
                    v = to[e]
                    nd = du + cst[e]  # type: ignore[operator]
                    if dist[v] is None or nd < dist[v]:  # type: ignore[operator]
                        dist[v] = nd
                        prev[v] = e
                        if not inq[v]:
                            inq[v] = True
                            queue.append(v)
        if dist[sink] is None:  # pragma: no cover - balanced problems always route
            raise RuntimeError("transport network disconnected")
        push = total - sent
        v = sink
        while v != src:
            e = prev[v]
            push = min(push, cap[e])
            v = to[e ^ 1]
        v = sink
        while v != src:
            e = prev[v]
            cap[e] -= push
            cap[e ^ 1] += push
            v = to[e ^ 1]
        sent += push

    flow = [[cap[cell[i][j] ^ 1] for j in range(k)] for i in range(m)]
    flows = tuple(
        (p.supply[i][0], p.demand[j][0], Fraction(flow[i][j], scale))
        for i in range(m)
        for j in range(k)
        if flow[i][j] > 0
    )
    total_cost = Fraction(sum(flow[i][j] * p.cost[i][j] for i in range(m) for j in range(k)), scale)  # type: ignore[operator]

    # Dual potentials from the final residual network: row->column arcs are
    # always residual, column->row arcs exist where flow is positive.
    arcs = [(i, m + j, p.cost[i][j]) for i in range(m) for j in range(k)]
    arcs += [(m + j, i, -p.cost[i][j]) for i in range(m) for j in range(k) if flow[i][j] > 0]  # type: ignore[operator]
    pot = _bellman_ford(m + k, arcs, range(m + k))  # type: ignore[arg-type]
    u = tuple(Fraction(-pot[i]) for i in range(m))  # type: ignore[operator]
    v = tuple(Fraction(pot[m + j]) for j in range(k))  # type: ignore[arg-type]
    return TransportPlan(flows=flows, total_cost=total_cost, u=u, v=v)


def certificate_violations(p: TransportProblem, plan: TransportPlan) -> list[str]:
    """Every way ``plan`` fails to be a certified optimum of ``p`` (empty if none).

    Checks marginals, dual feasibility ``u_i + v_j <= c_ij``, complementary
    slackness on positive flows, and equality of primal and dual objectives.
    """
    problems: list[str] = []
    rows = {s: i for i, (s, _) in enumerate(p.supply)}
    cols = {s: j for j, (s, _) in enumerate(p.demand)}
    out_mass = [Fraction(0)] * len(p.supply)
    in_mass = [Fraction(0)] * len(p.demand)
    primal = Fraction(0)
    for s, t, f in plan.flows:
        i, j = rows[s], cols[t]
        if f < 0:
            problems.append(f"negative flow {s!r}->{t!r}")
        out_mass[i] += f
        in_mass[j] += f
        primal += f * p.cost[i][j]  # type: ignore[operator]
        if plan.u[i] + plan.v[j] != p.cost[i][j]:
            problems.append(f"slackness fails on positive flow {s!r}->{t!r}")
    for i, (s, mass) in enumerate(p.supply):
        if out_mass[i] != mass:
            problems.append(f"row marginal {s!r}: {out_mass[i]} != {mass}")
    for j, (t, mass) in enumerate(p.demand):
        if in_mass[j] != mass:
            problems.append(f"column marginal {t!r}: {in_mass[j]} != {mass}")
    for i in range(len(p.supply)):
        for j in range(len(p.demand)):
            if plan.u[i] + plan.v[j] > p.cost[i][j]:  # type: ignore[operator]
                problems.append(f"dual infeasible at ({i}, {j})")
    if primal != plan.total_cost:
        problems.append(f"total_cost {plan.total_cost} != plan cost {primal}")
    dual = sum(mass * plan.u[i] for i, (_, mass) in enumerate(p.supply))
    dual += sum(mass * plan.v[j] for j, (_, mass) in enumerate(p.demand))
    if dual != primal:
        problems.append(f"duality gap: primal {primal} != dual {dual}")
    return problems


# --------------------------------------------------------------------------
# Assignment
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AssignmentResult:
    matching: tuple[tuple[Site, Site], ...]
    cost: int


def _hungarian(cost: Sequence[Sequence[int]]) -> tuple[list[int], list[int], list[int]]:
    """O(n^3) Hungarian method on an integer square matrix.

    Returns ``(col_of_row, u, v)`` with ``u[i] + v[j] <= cost[i][j]`` and
    equality on the matching.  Among equal reduced costs the lowest column
    index wins, and rows are inserted in index order.
    """
    n = len(cost)
    inf = math.inf
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    row_of = [0] * (n + 1)  # row_of[j]: 1-based row matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        row_of[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = row_of[j0]
            crow = cost[i0 - 1]
            ui0 = u[i0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = crow[j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[row_of[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if row_of[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            row_of[j0] = row_of[j1]
            j0 = j1
    col_of = [0] * n
    for j in range(1, n + 1):
        col_of[row_of[j] - 1] = j - 1
    return col_of, [int(x) for x in u[1:]], [int(x) for x in v[1:]]


def _validate_matrix(r_x: Sequence[Site], r_y: Sequence[Site], cost: Sequence[Sequence[int | None]]) -> None:
    if len(r_x) != len(r_y):
        raise PreconditionError(f"assignment sides differ in size ({len(r_x)} vs {len(r_y)})")
    if len(cost) != len(r_x) or any(len(row) != len(r_y) for row in cost):
        raise PreconditionError("cost matrix shape does not match the site lists")
    for i, row in enumerate(cost):
        for j, c in enumerate(row):
            if c is None:
                raise UnreachableError(f"infinite cost between {r_x[i]!r} and {r_y[j]!r}")
            if c < 0:
                raise PreconditionError("assignment costs must be non-negative")


def solve_assignment(
    r_x: Sequence[Site], r_y: Sequence[Site], cost: Sequence[Sequence[int | None]]
) -> AssignmentResult:
    """Minimum-cost perfect matching ``r_x -> r_y`` under ``cost[i][j]``."""
    _validate_matrix(r_x, r_y, cost)
    if not r_x:
        return AssignmentResult((), 0)
    col_of, _, _ = _hungarian(cost)  # type: ignore[arg-type]
    matching = tuple((r_x[i], r_y[col_of[i]]) for i in range(len(r_x)))
    return AssignmentResult(matching, sum(cost[i][col_of[i]] for i in range(len(r_x))))  # type: ignore[misc]


def _forced_cost(cost: Sequence[Sequence[int]], i: int, j: int) -> int:
    """Optimal total when row ``i`` must be matched to column ``j``."""
    minor = [[c for jj, c in enumerate(row) if jj != j] for ii, row in enumerate(cost) if ii != i]
    if not minor:
        return cost[i][j]
    col_of, _, _ = _hungarian(minor)
    return cost[i][j] + sum(minor[r][col_of[r]] for r in range(len(minor)))


def usable_pairs(cost: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """All ``(i, j)`` that occur in at least one optimal assignment.

    Each candidate is decided by re-solving with ``i -> j`` forced; pairs that
    are not tight under the optimal dual are skipped since complementary
    slackness already rules them out.
    """
    n = len(cost)
    if n == 0:
        return []
    col_of, u, v = _hungarian(cost)
    best = sum(cost[i][col_of[i]] for i in range(n))
    pairs = []
    for i in range(n):
        for j in range(n):
            if u[i] + v[j] != cost[i][j]:
                continue
            if col_of[i] == j or _forced_cost(cost, i, j) == best:
                pairs.append((i, j))
    return pairs


def _max_forced(cost: Sequence[Sequence[int]]) -> int:
    n = len(cost)
    col_of, u, v = _hungarian(cost)
    best = sum(cost[i][col_of[i]] for i in range(n))
    # Largest distances first: the first usable pair settles the answer.
    order = sorted(((cost[i][j], i, j) for i in range(n) for j in range(n)), key=lambda t: (-t[0], t[1], t[2]))
    for c, i, j in order:
        if u[i] + v[j] != c:
            continue
        if col_of[i] == j or _forced_cost(cost, i, j) == best:
            return c
    raise AssertionError("optimal matching has no usable pair")  # pragma: no cover


def _edge_cost_matrix(g: Graph, x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...], list[list[int]]]:
    nb = edge_neighborhood(g, x, y)
    if g.degree(x) != g.degree(y):
        raise PreconditionError(
            f"unequal degrees {g.degree(x)} and {g.degree(y)} at edge "
            f"({g.label(x)!r}, {g.label(y)!r})"
        )
    cost = [[g.distance(z, w) for w in nb.r_y] for z in nb.r_x]
    return nb.r_x, nb.r_y, cost


def opt_value(g: Graph, x: int, y: int) -> int:
    """Minimum assignment cost between the exclusive neighbourhoods of edge ``xy``."""
    r_x, r_y, cost = _edge_cost_matrix(g, x, y)
    return solve_assignment(r_x, r_y, cost).cost


def max_over_optimal(g: Graph, x: int, y: int) -> int:
    """Largest single distance ``d(z, phi(z))`` over all optimal assignments ``phi``."""
    r_x, _, cost = _edge_cost_matrix(g, x, y)
    if not r_x:
        raise PreconditionError("MAX is undefined when the exclusive neighbourhood is empty")
    return _max_forced(cost)
