"""Ways of building decompositions out of other decompositions."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..cube import Edge, Graph, Walk, bit, cartesian_product, endpoints, hypercube_iso_check, make_hypercube, relabel_edges
from ..trees import LabeledTree
from ..verify import ConstructionError, Cycle, Decomposition, Path, Subcube, classify_piece
from .fundamental import DirectionCycle, fundamental_hamiltonian_pow2, hamiltonian_decomposition_pow2
from .fundamental import _orbit_decomposition, tree_fundamental_decomposition


class UnknownConstructive(LookupError):
    """No explicit construction is available, though the object may exist."""


def whole_graph(g: Graph, shape) -> Decomposition:
    return Decomposition(g, (frozenset(g.edges),), shape, "whole graph").checked()


def product_combine(d1: Decomposition, d2: Decomposition) -> Decomposition:
    """Combine decompositions of G1 and G2 by the same piece into one of G1 x G2.

    Each vertex of G1 carries a copy of d2, each vertex of G2 a copy of d1.
    """
    for d in (d1, d2):
        report = d.verify()
        if not report.ok:
            raise ConstructionError(f"product_combine got an unverified input:\n{report}")
    if d1.shape != d2.shape:
        raise ValueError(f"piece shapes differ: {d1.shape} vs {d2.shape}")
    host = cartesian_product(d1.host, d2.host)
    pieces = []
    for a in d1.host.vertices:
        for p in d2.pieces:
            pieces.append(frozenset(host.second_copy(a, e) for e in p))
    for b in d2.host.vertices:
        for p in d1.pieces:
            pieces.append(frozenset(host.first_copy(e, b) for e in p))
    prov = f"product({d1.provenance}; {d2.provenance})"
    return Decomposition(host, tuple(pieces), d1.shape, prov).checked()


def to_hypercube(d: Decomposition) -> Decomposition:
    """Carry a decomposition of a graph isomorphic to Q_n onto Q_n itself."""
    nv = d.host.num_vertices
    n = nv.bit_length() - 1
    if nv != 1 << n:
        raise ValueError("host is not a hypercube")
    mapping = hypercube_iso_check(d.host, n)
    if mapping is None:
        raise ValueError("host is not isomorphic to a hypercube")
    if d.host.kind == "hypercube":
        return d
    pieces = tuple(relabel_edges(p, mapping) for p in d.pieces)
    return Decomposition(make_hypercube(n), pieces, d.shape, d.provenance, dict(d.meta)).checked()


def subcube_decomposition(k: int, n: int) -> Decomposition:
    """Copies of Q_k partitioning Q_n, by induction on n / k through
    ``Q_{n-k} x Q_k = Q_n``."""
    if k < 1 or n < k or n % k:
        raise ValueError(f"{k} does not divide {n}")
    shape = Subcube(k)
    if n == k:
        return whole_graph(make_hypercube(k), shape)
    inner = subcube_decomposition(k, n - k)
    combined = product_combine(inner, whole_graph(make_hypercube(k), shape))
    out = to_hypercube(combined)
    return Decomposition(out.host, out.pieces, shape, f"subcube Q_{k} | Q_{n}").checked()


def _subcube_frame(piece: Iterable[Edge]) -> tuple[int, list[int]]:
    piece = list(piece)
    dirs = sorted({e.dir for e in piece})
    span = 0
    for d in dirs:
        span |= bit(d)
    base = piece[0].low & ~span
    return base, dirs


def _spread(x: int, dirs: Sequence[int]) -> int:
    out = 0
    for i, d in enumerate(dirs):
        if x >> i & 1:
            out |= bit(d)
    return out


def refine(outer: Decomposition, inner: Decomposition) -> Decomposition:
    """Transitivity: split every Q_k piece of ``outer`` with ``inner`` (a
    decomposition of Q_k), mapping coordinates in increasing order."""
    if outer.shape.kind != "subcube" or inner.host.kind != "hypercube" or inner.host.dim != outer.shape.k:
        raise ValueError("refine needs a Subcube(k) outer decomposition and an inner one of Q_k")
    pieces = []
    for piece in outer.pieces:
        base, dirs = _subcube_frame(piece)
        for p in inner.pieces:
            pieces.append(frozenset(
                Edge(base | _spread(e.low, dirs), dirs[e.dir - 1]) for e in p
            ))
    prov = f"{inner.provenance} inside {outer.provenance}"
    return Decomposition(outer.host, tuple(pieces), inner.shape, prov).checked()


def _cycle_order(c) -> list:
    """Edges of a cycle in traversal order."""
    if isinstance(c, (DirectionCycle, Walk)):
        w = c.walk() if isinstance(c, DirectionCycle) else c
        return w.edge_sequence()
    edges = list(c)
    adj: dict = {}
    for e in edges:
        a, b = endpoints(e)
        adj.setdefault(a, []).append((b, e))
        adj.setdefault(b, []).append((a, e))
    if any(len(v) != 2 for v in adj.values()):
        raise ValueError("edge set is not a cycle")
    start = min(adj, key=repr)
    order = []
    prev_edge = None
    v = start
    while True:
        nxt = [(w, e) for w, e in adj[v] if e != prev_edge]
        w, e = min(nxt, key=lambda t: repr(t[0]))
        order.append(e)
        prev_edge = e
        v = w
        if v == start:
            break
    if len(order) != len(edges):
        raise ValueError("edge set is not a single cycle")
    return order


def cycle_into_paths(c, q: int) -> list[frozenset]:
    """Cut a cycle (edge set, Walk or DirectionCycle) into consecutive q-edge arcs."""
    order = _cycle_order(c)
    m = len(order)
    if q < 1 or m % q or q >= m:
        raise ValueError(f"cannot cut a {m}-cycle into paths of length {q}")
    out = [frozenset(order[i:i + q]) for i in range(0, m, q)]
    for p in out:
        if classify_piece(p) != Path(q):
            raise ConstructionError("cycle arc is not a path")
    return out


def tree_divides_qn(t: LabeledTree, n: int) -> Decomposition:
    """Any tree on k | n edges divides Q_n (fundamental in Q_k, then subcubes)."""
    if n % t.k:
        raise ValueError(f"{t.k} does not divide {n}")
    _, _, inner = tree_fundamental_decomposition(t)
    if n == t.k:
        return inner
    return refine(subcube_decomposition(t.k, n), inner)


def _log2_exact(x: int) -> int:
    if x < 1 or x & (x - 1):
        raise ValueError(f"{x} is not a power of two")
    return x.bit_length() - 1


def m_cycle_divides_qn(m: int, n: int) -> Decomposition:
    """Copies of the fundamental Hamiltonian cycle of Q_m (length 2**m) dividing Q_n."""
    p = _log2_exact(m)
    _log2_exact(n)
    if m > n or m < 2:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    cycle, group = fundamental_hamiltonian_pow2(p)
    inner = _orbit_decomposition(cycle.edges(), group, Cycle(1 << m), f"fundamental Hamiltonian Q_{m}")
    if m == n:
        return inner
    return refine(subcube_decomposition(m, n), inner)


def hamiltonian_cycles(n: int, budget: int | None = None) -> list[DirectionCycle]:
    """An explicit Hamiltonian decomposition of Q_n when one is available."""
    if n >= 2 and not n & (n - 1):
        return hamiltonian_decomposition_pow2(n.bit_length() - 1)
    if n == 6:
        from ..search import SearchConfig, find_hamiltonian_decomposition

        cfg = SearchConfig() if budget is None else SearchConfig(budget=budget)
        found = find_hamiltonian_decomposition(6, cfg)
        if found is not None:
            return found
        raise UnknownConstructive("Q_6 Hamiltonian search ran out of budget")
    raise UnknownConstructive(f"no explicit Hamiltonian decomposition of Q_{n} is implemented")


def p2j_divides_qn(j: int, n: int) -> Decomposition:
    """P_{2^j} divides Q_n (n even, j < n) by cutting Hamiltonian cycles."""
    if n % 2 or n < 2:
        raise ValueError("n must be even")
    if not 0 <= j < n:
        raise ValueError("need 0 <= j < n")
    q = 1 << j
    cycles = hamiltonian_cycles(n)
    pieces = []
    for c in cycles:
        pieces.extend(cycle_into_paths(c, q))
    return Decomposition(make_hypercube(n), tuple(pieces), Path(q),
                         f"Hamiltonian cycles of Q_{n} cut into P_{q}").checked()
