"""Hypercube, cycle and Cartesian-product graphs.

Hypercube vertices are ints: coordinate ``d`` (1-based) lives in bit ``d - 1``.
Hypercube edges are :class:`Edge` values ``(low, dir)`` where ``low`` has
bit ``dir`` clear.  Edges of every other graph are sorted vertex pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Sequence

MAX_DIM = 24


class DimensionError(ValueError):
    pass


class Edge(NamedTuple):
    low: int
    dir: int

    @property
    def high(self) -> int:
        return self.low | (1 << (self.dir - 1))

    def endpoints(self) -> tuple[int, int]:
        return self.low, self.high


def bit(d: int) -> int:
    return 1 << (d - 1)


def make_edge(x: int, d: int) -> Edge:
    """Canonical edge through vertex ``x`` in direction ``d``."""
    return Edge(x & ~bit(d), d)


def edge_between(x: int, y: int) -> Edge:
    diff = x ^ y
    if diff == 0 or diff & (diff - 1):
        raise ValueError(f"{x} and {y} are not adjacent in a hypercube")
    d = diff.bit_length()
    return Edge(min(x, y), d)


def vertex_from_bits(s: str) -> int:
    """Parse the ``x1x2...xn`` string notation (``"01000"`` is ``{2}``)."""
    mask = 0
    for i, ch in enumerate(s):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad vertex string {s!r}")
    return mask


def vertex_to_bits(x: int, n: int) -> str:
    return "".join("1" if x >> i & 1 else "0" for i in range(n))


def vertex_from_set(coords: Iterable[int]) -> int:
    mask = 0
    for d in coords:
        mask |= bit(d)
    return mask


def vertex_to_set(x: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(x.bit_length()) if x >> i & 1)


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph.

    ``kind`` is one of ``"hypercube"``, ``"cycle"``, ``"product"`` or
    ``"generic"``.  Hypercube graphs enumerate their vertices and edges
    lazily, so ``make_hypercube(20)`` is cheap until ``edges`` is touched.
    Product graphs keep their two factors; vertices are ``(a, b)`` pairs.
    """

    kind: str
    dim: int | None = None
    factors: tuple[Graph, Graph] | None = None
    _vertices: tuple[Hashable, ...] | None = field(default=None, repr=False)
    _edges: frozenset | None = field(default=None, repr=False)

    @cached_property
    def vertices(self) -> tuple:
        if self.kind == "hypercube":
            return tuple(range(1 << self.dim))
        return self._vertices

    @cached_property
    def edges(self) -> frozenset:
        if self.kind == "hypercube":
            if self.dim > MAX_DIM:
                raise DimensionError(f"refusing to enumerate edges of Q_{self.dim}")
            return frozenset(self.edge_list)
        return self._edges

    @cached_property
    def edge_list(self) -> tuple:
        """Edges in a fixed deterministic order."""
        if self.kind == "hypercube":
            n = self.dim
            return tuple(
                Edge(low, d)
                for d in range(1, n + 1)
                for low in range(1 << n)
                if not low & bit(d)
            )
        return tuple(sorted(self._edges))

    @property
    def num_vertices(self) -> int:
        if self.kind == "hypercube":
            return 1 << self.dim
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        if self.kind == "hypercube":
            return self.dim << (self.dim - 1)
        return len(self._edges)

    @cached_property
    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for e in self.edge_list:
            a, b = endpoints(e)
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def neighbors(self, v) -> list:
        if self.kind == "hypercube":
            return [v ^ (1 << i) for i in range(self.dim)]
        return self.adjacency[v]

    def has_edge(self, e) -> bool:
        if self.kind == "hypercube":
            return (
                isinstance(e, Edge)
                and 1 <= e.dir <= self.dim
                and 0 <= e.low < (1 << self.dim)
                and not e.low & bit(e.dir)
            )
        return e in self._edges

    def edge(self, a, b):
        """Canonical key of the edge joining ``a`` and ``b``."""
        if self.kind == "hypercube":
            return edge_between(a, b)
        return (a, b) if a <= b else (b, a)

    # product provenance -------------------------------------------------

    def first_copy(self, e1, b):
        """Copy of first-factor edge ``e1`` in the fibre over ``b``."""
        x, y = endpoints(e1)
        return _pair((x, b), (y, b))

    def second_copy(self, a, e2):
        """Copy of second-factor edge ``e2`` in the fibre over ``a``."""
        x, y = endpoints(e2)
        return _pair((a, x), (a, y))

    def __repr__(self) -> str:
        if self.kind == "hypercube":
            return f"Graph(Q_{self.dim})"
        if self.kind == "product":
            return f"Graph({self.factors[0]!r} x {self.factors[1]!r})"
        return f"Graph({self.kind}, |V|={self.num_vertices}, |E|={self.num_edges})"


def _pair(a, b):
    return (a, b) if a <= b else (b, a)


def endpoints(e) -> tuple:
    if isinstance(e, Edge):
        return e.low, e.high
    return e


def make_hypercube(n: int) -> Graph:
    if not 1 <= n <= MAX_DIM:
        raise DimensionError(f"hypercube dimension must be in 1..{MAX_DIM}, got {n}")
    return Graph("hypercube", dim=n)


def make_cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {m}")
    edges = frozenset(_pair(i, (i + 1) % m) for i in range(m))
    return Graph("cycle", _vertices=tuple(range(m)), _edges=edges)


def make_graph(vertices: Iterable, edges: Iterable[tuple]) -> Graph:
    vs = tuple(vertices)
    vset = set(vs)
    es = set()
    for a, b in edges:
        if a == b:
            raise ValueError("loops are not allowed")
        if a not in vset or b not in vset:
            raise ValueError(f"edge ({a}, {b}) has an endpoint outside the vertex set")
        es.add(_pair(a, b))
    return Graph("generic", _vertices=vs, _edges=frozenset(es))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    if g1.num_vertices == 0 or g2.num_vertices == 0:
        raise ValueError("factors must be nonempty")
    vertices = tuple((a, b) for a in g1.vertices for b in g2.vertices)
    edges = set()
    for a in g1.vertices:
        for e2 in g2.edge_list:
            x, y = endpoints(e2)
            edges.add(_pair((a, x), (a, y)))
    for b in g2.vertices:
        for e1 in g1.edge_list:
            x, y = endpoints(e1)
            edges.add(_pair((x, b), (y, b)))
    return Graph("product", factors=(g1, g2), _vertices=vertices, _edges=frozenset(edges))


# walks ------------------------------------------------------------------


@dataclass(frozen=True)
class Walk:
    """A walk in ``Q_dim`` given by a start vertex and a direction sequence."""

    start: int
    dirs: tuple[int, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "dirs", tuple(self.dirs))

    def vertices(self) -> list[int]:
        out = [self.start]
        x = self.start
        for d in self.dirs:
            x ^= bit(d)
            out.append(x)
        return out

    def edge_sequence(self) -> list[Edge]:
        out = []
        x = self.start
        for d in self.dirs:
            out.append(Edge(x & ~bit(d), d))
            x ^= bit(d)
        return out


@dataclass(frozen=True)
class WalkReport:
    edges: frozenset
    shape: str  # "path" | "cycle" | "neither"
    duplicates: tuple[Edge, ...]


def walk_edges(w: Walk) -> WalkReport:
    for d in w.dirs:
        if not 1 <= d <= w.dim:
            raise ValueError(f"direction {d} outside 1..{w.dim}")
    seq = w.edge_sequence()
    seen: set = set()
    dups = []
    for e in seq:
        if e in seen:
            dups.append(e)
        seen.add(e)
    verts = w.vertices()
    if not seq:
        shape = "neither"
    elif len(set(verts)) == len(verts):
        shape = "path"
    elif not dups and verts[-1] == verts[0]:
        shape = "cycle"
    else:
        shape = "neither"
    return WalkReport(frozenset(seen), shape, tuple(dups))


def is_simple_cycle(w: Walk) -> bool:
    """True when ``w`` closes up and visits no vertex twice before closing."""
    verts = w.vertices()
    return len(w.dirs) >= 3 and verts[0] == verts[-1] and len(set(verts[:-1])) == len(w.dirs)


# isomorphism with Q_n -----------------------------------------------------


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def hypercube_iso_check(g: Graph, n: int) -> dict | None:
    """Return a map ``vertex -> mask`` carrying ``g`` onto ``Q_n``, or None.

    Product graphs are handled by concatenating the factor coordinates
    (first factor in the low bits); anything else goes through a BFS
    labelling that is exact for hypercubes.
    """
    if n < 1 or g.num_vertices != 1 << n or g.num_edges != n << (n - 1):
        return None
    if g.kind == "hypercube":
        return {v: v for v in g.vertices} if g.dim == n else None
    if g.kind == "cycle" and n == 2:
        return {i: _gray(i) for i in range(4)}
    if g.kind == "product":
        g1, g2 = g.factors
        n1 = g1.num_vertices.bit_length() - 1
        n2 = n - n1
        if n1 >= 1 and n2 >= 1:
            m1 = hypercube_iso_check(g1, n1)
            m2 = hypercube_iso_check(g2, n2)
            if m1 is not None and m2 is not None:
                return {(a, b): m1[a] | (m2[b] << n1) for a, b in g.vertices}
    return _bfs_label(g, n)


def _bfs_label(g: Graph, n: int) -> dict | None:
    adj = g.adjacency
    if any(len(nb) != n for nb in adj.values()):
        return None
    root = g.vertices[0]
    label = {root: 0}
    dist = {root: 0}
    for i, nb in enumerate(sorted(adj[root], key=repr)):
        label[nb] = 1 << i
        dist[nb] = 1
    queue = deque(sorted(adj[root], key=repr))
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) != g.num_vertices:
        return None
    for v in sorted(dist, key=lambda v: dist[v]):
        if dist[v] >= 2:
            lab = 0
            for w in adj[v]:
                if dist[w] == dist[v] - 1:
                    lab |= label[w]
            label[v] = lab
    if len(set(label.values())) != g.num_vertices:
        return None
    for e in g.edge_list:
        a, b = endpoints(e)
        diff = label[a] ^ label[b]
        if diff == 0 or diff & (diff - 1):
            return None
    return label


def relabel_edges(edges: Iterable, mapping: dict) -> frozenset:
    """Transport an edge set through a vertex map onto a hypercube."""
    return frozenset(edge_between(mapping[a], mapping[b]) for a, b in map(endpoints, edges))


def degree_counts(edges: Iterable) -> dict:
    deg: dict = {}
    for e in edges:
        for v in endpoints(e):
            deg[v] = deg.get(v, 0) + 1
    return deg


def walk_from_dirs(dirs: Sequence[int], n: int, start: int = 0) -> Walk:
    return Walk(start, tuple(dirs), n)
