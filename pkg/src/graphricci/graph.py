"""Finite simple graphs, shortest-path distances, edge neighbourhoods and products.

Vertices are dense integer indices ``0..n-1``; every vertex also carries a
unique text label.  Graphs are immutable once built.  Product graphs number
the pair ``(g, h)`` as ``g * n_h + h`` and label it ``"(gLabel,hLabel)"``.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, ParseError, PreconditionError, UnreachableError

__all__ = [
    "Graph",
    "EdgeNeighborhood",
    "EdgeKind",
    "ProductGraph",
    "parse_edge_list",
    "format_edge_list",
    "generate",
    "bfs_distance",
    "edge_neighborhood",
    "strong_product",
    "cartesian_product",
    "classify_edge",
    "closed_neighborhood_equal",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable finite simple undirected graph.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v`` and
    ``labels[v]`` its text label.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False)
    _dist: dict[int, tuple[int | None, ...]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.adjacency):
            raise GraphError("labels and adjacency differ in length")
        index = {label: i for i, label in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise GraphError("vertex labels must be unique")
        n = len(self.labels)
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbour list of {v} is not strictly ascending")
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at {self.labels[v]!r}")
                if v not in self.adjacency[w]:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "_index", index)
        # Per-instance BFS memo; values are deterministic so concurrent fills are benign.
        object.__setattr__(self, "_dist", {})

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from index pairs; duplicate edges are collapsed."""
        n = len(labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {labels[u]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.labels, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        # neighbour lists are short; a linear scan beats bisect bookkeeping
        return v in nbrs

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PreconditionError(f"no vertex labelled {label!r}") from None

    def label(self, v: int) -> str:
        return self.labels[v]

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degrees = {len(a) for a in self.adjacency}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_regular(self) -> bool:
        return self.n > 0 and self.regular_degree() is not None

    def distances_from(self, s: int) -> tuple[int | None, ...]:
        """Memoised BFS row; ``None`` marks vertices in other components."""
        row = self._dist.get(s)
        if row is None:
            row = tuple(bfs_distance(self, s))
            self._dist[s] = row
        return row

    def distance(self, u: int, v: int) -> int:
        """Hop distance, raising :class:`UnreachableError` across components."""
        d = self.distances_from(u)[v]
        if d is None:
            raise UnreachableError(
                f"{self.labels[u]!r} and {self.labels[v]!r} lie in different components"
            )
        return d

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` moved to index ``perm[v]`` (labels travel along)."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabelling is not a permutation")
        labels = [""] * n
        for v in range(n):
            labels[perm[v]] = self.labels[v]
        return Graph.from_edges(labels, ((perm[u], perm[v]) for u, v in self.edges()))


def bfs_distance(g: Graph, s: int) -> list[int | None]:
    """Exact hop distances from ``s``; ``None`` is the unreachable marker."""
    if not 0 <= s < g.n:
        raise PreconditionError(f"vertex {s} out of range")
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1  # type: ignore[operator]
        for w in g.adjacency[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


# --------------------------------------------------------------------------
# Edge-list text format
# --------------------------------------------------------------------------


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse ``"u v"`` label pairs, one per line.

    ``#`` starts a comment and blank lines are skipped.  Labels get dense
    indices in order of first appearance; repeated edges are collapsed.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, found {len(tokens)}", line=lineno)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop on {a!r}", line=lineno)
        ids = []
        for tok in (a, b):
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
            ids.append(index[tok])
        edges.append((ids[0], ids[1]))
    return Graph.from_edges(labels, edges)


def format_edge_list(g: Graph) -> str:
    """Serialise ``g`` so that :func:`parse_edge_list` rebuilds it exactly.

    Lines are ordered so that first appearance reproduces the index order.
    Raises :class:`GraphError` when no such ordering exists (for instance
    when the graph has isolated vertices, which the format cannot carry).
    """
    lines: list[str] = []
    emitted: set[tuple[int, int]] = set()
    seen = [False] * g.n
    lab = g.labels
    for v in range(g.n):
        if seen[v]:
            continue
        earlier = [w for w in g.adjacency[v] if seen[w]]
        if earlier:
            w = earlier[0]
            lines.append(f"{lab[w]} {lab[v]}")
            emitted.add((min(v, w), max(v, w)))
            seen[v] = True
        elif v + 1 < g.n and g.has_edge(v, v + 1) and not seen[v + 1]:
            lines.append(f"{lab[v]} {lab[v + 1]}")
            emitted.add((v, v + 1))
            seen[v] = seen[v + 1] = True
        else:
            raise GraphError(
                f"vertex {lab[v]!r} cannot be introduced in index order by an edge line"
            )
    for u, v in g.edges():
        if (u, v) not in emitted:
            lines.append(f"{lab[u]} {lab[v]}")
    return "".join(line + "\n" for line in lines)


# --------------------------------------------------------------------------
# Named generators
# --------------------------------------------------------------------------

# Fixture graphs.  H1: outer 5-cycle o1..o5 (o4 = y1, o5 = y2) and inner path
# i1 i2 i3.  H2: outer 6-cycle o1..o6 (o5 = y1, o6 = y2) and inner path i1..i4.
_H1_LABELS = ("o1", "o2", "o3", "y1", "y2", "i1", "i2", "i3")
_H1_EDGES = (
    ("o1", "o2"), ("o2", "o3"), ("o3", "y1"), ("y1", "y2"), ("y2", "o1"),
    ("y2", "i1"), ("i1", "i2"), ("i2", "i3"), ("i3", "y1"),
    ("i1", "o1"), ("i2", "o2"), ("i3", "o3"),
)
_H2_LABELS = ("o1", "o2", "o3", "o4", "y1", "y2", "i1", "i2", "i3", "i4")
_H2_EDGES = (
    ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("o4", "y1"), ("y1", "y2"), ("y2", "o1"),
    ("o2", "i1"), ("i1", "i2"), ("i2", "i3"), ("i3", "i4"), ("i4", "o3"),
    ("o1", "i1"), ("y2", "i2"), ("y1", "i3"), ("o4", "i4"),
)

_GEN_RE = re.compile(r"^([a-z0-9]+)(?::(-?\d+))?$")


def _fixture(labels: tuple[str, ...], edges: tuple[tuple[str, str], ...]) -> Graph:
    pos = {lab: i for i, lab in enumerate(labels)}
    return Graph.from_edges(labels, ((pos[a], pos[b]) for a, b in edges))


def _numbered(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges([str(i) for i in range(n)], edges)


def generate(spec: str) -> Graph:
    """Build a named graph.

    Accepted names: ``cycle:n`` (n >= 3), ``complete:n`` (n >= 2), ``path:n``
    (n >= 2), ``hypercube:k`` (k >= 1), ``petersen``, ``h1`` and ``h2``.
    Numbered families use labels ``"0".."n-1"``; hypercube vertices are
    labelled by their bit strings.
    """
    m = _GEN_RE.match(spec.strip())
    if m is None:
        raise ParseError(f"malformed generator {spec!r}")
    name, arg = m.group(1), m.group(2)
    fixed = {"petersen", "h1", "h2"}
    sized = {"cycle": 3, "complete": 2, "path": 2, "hypercube": 1}
    if name in fixed:
        if arg is not None:
            raise ParseError(f"generator {name!r} takes no size")
        if name == "h1":
            return _fixture(_H1_LABELS, _H1_EDGES)
        if name == "h2":
            return _fixture(_H2_LABELS, _H2_EDGES)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        star = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return _numbered(10, outer + spokes + star)
    if name not in sized:
        raise ParseError(f"unknown generator {name!r}")
    if arg is None:
        raise ParseError(f"generator {name!r} needs a size, e.g. {name}:4")
    k = int(arg)
    if k < sized[name]:
        raise ParseError(f"{name} size must be >= {sized[name]}, got {k}")
    if name == "cycle":
        return _numbered(k, ((i, (i + 1) % k) for i in range(k)))
    if name == "complete":
        return _numbered(k, combinations(range(k), 2))
    if name == "path":
        return _numbered(k, ((i, i + 1) for i in range(k - 1)))
    if k > 16:
        raise ParseError("hypercube dimension above 16 is not supported")
    size = 1 << k
    labels = [format(v, f"0{k}b") for v in range(size)]
    edges = [(v, v ^ (1 << b)) for v in range(size) for b in range(k) if v < v ^ (1 << b)]
    return Graph.from_edges(labels, edges)


# --------------------------------------------------------------------------
# Edge neighbourhoods
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeNeighborhood:
    """Common neighbours and exclusive neighbours of an edge ``xy``."""

    x: int
    y: int
    triangle: tuple[int, ...]
    r_x: tuple[int, ...]
    r_y: tuple[int, ...]


def edge_neighborhood(g: Graph, x: int, y: int) -> EdgeNeighborhood:
    if not g.has_edge(x, y):
        raise PreconditionError(f"{g.label(x)!r} and {g.label(y)!r} are not adjacent")
    nx, ny = set(g.adjacency[x]), set(g.adjacency[y])
    tri = nx & ny
    return EdgeNeighborhood(
        x=x,
        y=y,
        triangle=tuple(sorted(tri)),
        r_x=tuple(sorted(nx - tri - {y})),
        r_y=tuple(sorted(ny - tri - {x})),
    )


def closed_neighborhood_equal(g: Graph, x1: int, x2: int) -> bool:
    """True iff ``N[x1] == N[x2]``."""
    return x1 == x2 or g.closed_neighborhood(x1) == g.closed_neighborhood(x2)


# --------------------------------------------------------------------------
# Products
# --------------------------------------------------------------------------


class EdgeKind(enum.Enum):
    HORIZONTAL = "horizontal"  # same G-coordinate, H-coordinate moves
    VERTICAL = "vertical"  # same H-coordinate, G-coordinate moves
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    left: Graph
    right: Graph
    kind: str  # "strong" or "cartesian"
    coords: tuple[tuple[int, int], ...]

    def vertex(self, g: int, h: int) -> int:
        return g * self.right.n + h

    def edge_kind(self, u: int, v: int) -> EdgeKind:
        return classify_edge(self, (u, v))


def _product(g: Graph, h: Graph, kind: str) -> ProductGraph:
    if g.n == 0 or h.n == 0:
        raise PreconditionError("product factors must be nonempty")
    nh = h.n
    coords = tuple((a, b) for a in range(g.n) for b in range(nh))
    labels = [f"({g.labels[a]},{h.labels[b]})" for a, b in coords]
    adjacency: list[tuple[int, ...]] = []
    for a, b in coords:
        if kind == "strong":
            na = (a,) + g.adjacency[a]
            nb = (b,) + h.adjacency[b]
            nbrs = [a2 * nh + b2 for a2 in na for b2 in nb if (a2, b2) != (a, b)]
        else:
            nbrs = [a2 * nh + b for a2 in g.adjacency[a]]
            nbrs += [a * nh + b2 for b2 in h.adjacency[b]]
        adjacency.append(tuple(sorted(nbrs)))
    return ProductGraph(Graph(tuple(labels), tuple(adjacency)), g, h, kind, coords)


def strong_product(g: Graph, h: Graph) -> ProductGraph:
    """``G ⊠ H``: distinct pairs adjacent iff each coordinate is equal or adjacent."""
    return _product(g, h, "strong")


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """``G □ H``: distinct pairs adjacent iff exactly one coordinate moves along an edge."""
    return _product(g, h, "cartesian")


def classify_edge(p: ProductGraph, e: tuple[int, int]) -> EdgeKind:
    u, v = e
    if not p.graph.has_edge(u, v):
        raise PreconditionError(f"{p.graph.label(u)!r} and {p.graph.label(v)!r} are not adjacent")
    (g1, h1), (g2, h2) = p.coords[u], p.coords[v]
    if g1 == g2:
        return EdgeKind.HORIZONTAL
    if h1 == h2:
        return EdgeKind.VERTICAL
    return EdgeKind.DIAGONAL
