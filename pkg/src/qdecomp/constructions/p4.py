"""P_4 decompositions: the explicit one of Q_5, its lift to Q_3 x C_4k, and
the dispatcher covering every n >= 4."""

from __future__ import annotations

from collections import defaultdict

from ..automorphism import Automorphism, orbit_translates, subgroup_closure, translate_edge_set
from ..cube import (
    Edge,
    Walk,
    bit,
    cartesian_product,
    edge_between,
    endpoints,
    make_cycle_graph,
    make_hypercube,
    vertex_from_bits,
    walk_edges,
)
from ..verify import ConstructionError, Decomposition, Path, classify_piece, verify_fundamental
from .combine import cycle_into_paths, product_combine, to_hypercube
from .fundamental import double_run_cycle, hamiltonian_decomposition_pow2

P4 = Path(4)

# (start x1..x5, directions) for the five paths making up the fundamental set
Q5_PATHS = {
    "A": ("00000", (2, 5, 1, 5)),
    "B": ("10100", (2, 5, 1, 5)),
    "C": ("10000", (2, 3, 1, 3)),
    "D": ("01000", (1, 4, 3, 4)),
    "E": ("00100", (2, 4, 3, 4)),
}

# (x4, x5) for layers G_0..G_3 of Q_5 = Q_3 x C_4: cyclic Gray order 00, 10, 11, 01
LAYER_BITS = (0, bit(4), bit(4) | bit(5), bit(5))


def q5_path(name: str) -> frozenset:
    start, dirs = Q5_PATHS[name]
    rep = walk_edges(Walk(vertex_from_bits(start), dirs, 5))
    if rep.shape != "path" or len(rep.edges) != 4:
        raise ConstructionError(f"path {name} is not a 4-path")
    return rep.edges


def _square_edges(fixed: dict[int, int], free: tuple[int, ...]) -> set[Edge]:
    """All edges of the subcube of Q_5 with coordinates ``fixed`` pinned."""
    base = 0
    for d, v in fixed.items():
        if v:
            base |= bit(d)
    out = set()
    for d in free:
        others = [c for c in free if c != d]
        for bits_ in range(1 << len(others)):
            x = base
            for i, c in enumerate(others):
                if bits_ >> i & 1:
                    x |= bit(c)
            out.add(Edge(x, d))
    return out


def subgraph_g_from_description() -> frozenset:
    """The 20-edge subgraph G of Q_5, assembled from its five-part description."""
    g = _square_edges({4: 0, 5: 0}, (1, 2, 3)) - _square_edges({2: 0, 4: 0, 5: 0}, (1, 3))
    v = vertex_from_bits
    g |= {edge_between(v("01010"), v("01110")), edge_between(v("11010"), v("11110"))}
    g |= {edge_between(v("01101"), v("11101")), edge_between(v("01001"), v("11001"))}
    # matchings from Q5(*1*00) to Q5(*1*10) and to Q5(*1*01)
    for x1 in (0, 1):
        for x3 in (0, 1):
            x = bit(2) | (bit(1) if x1 else 0) | (bit(3) if x3 else 0)
            g.add(Edge(x, 4))
            g.add(Edge(x, 5))
    return frozenset(g)


def p4_of_q5():
    """Returns ``(G, group, decomposition)``: 20 P_4 pieces partitioning Q_5.

    Pieces come in group order, five per translate, in path order A..E;
    piece index + 1 serves as the edge colour used by :func:`lift_p4`.
    """
    paths = [q5_path(name) for name in "ABCDE"]
    g = frozenset().union(*paths)
    if len(g) != 20 or sum(map(len, paths)) != 20:
        raise ConstructionError("paths A-E are not edge-disjoint")
    if g != subgraph_g_from_description():
        raise ConstructionError("union of paths A-E differs from the described subgraph G")
    group = subgroup_closure([Automorphism.sigma(5, (2, 4)), Automorphism.sigma(5, (2, 5))])
    report = verify_fundamental(g, group)
    if not report.ok:
        raise ConstructionError(f"G is not fundamental for Q_5:\n{report}")
    pieces = [translate_edge_set(f, p) for f in group.elements for p in paths]
    d = Decomposition(make_hypercube(5), tuple(pieces), P4, "explicit P_4 | Q_5").checked()
    return g, group, d


def q5_colouring() -> dict[Edge, int]:
    _, _, d = p4_of_q5()
    return {e: i + 1 for i, p in enumerate(d.pieces) for e in p}


def _components(edges) -> list[frozenset]:
    adj = defaultdict(list)
    for e in edges:
        a, b = endpoints(e)
        adj[a].append((b, e))
        adj[b].append((a, e))
    seen = set()
    out = []
    for v0 in sorted(adj, key=repr):
        if v0 in seen:
            continue
        comp = set()
        stack = [v0]
        seen.add(v0)
        while stack:
            v = stack.pop()
            for w, e in adj[v]:
                comp.add(e)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def lift_p4(k: int) -> Decomposition:
    """P_4 decomposition of Q_3 x C_4k pulled back from Q_5 along the layer map."""
    if k < 1:
        raise ValueError("k must be >= 1")
    colour = q5_colouring()
    host = cartesian_product(make_hypercube(3), make_cycle_graph(4 * k))

    def theta(v):
        x, layer = v
        return x | LAYER_BITS[layer % 4]

    classes: dict[int, list] = defaultdict(list)
    for e in host.edge_list:
        a, b = e
        classes[colour[edge_between(theta(a), theta(b))]].append(e)
    pieces = []
    for c in sorted(classes):
        if len(classes[c]) != 4 * k:
            raise ConstructionError(f"colour {c} has {len(classes[c])} edges, expected {4 * k}")
        for comp in _components(classes[c]):
            if classify_piece(comp) != P4:
                raise ConstructionError(f"colour {c} has a component that is not a 4-path")
            pieces.append(comp)
    meta = {"colour_class_sizes": {c: len(v) for c, v in classes.items()}}
    return Decomposition(host, tuple(pieces), P4, f"lift of P_4 | Q_5 to Q_3 x C_{4 * k}", meta).checked()


def p4_odd_via_hamiltonian(k: int) -> Decomposition:
    """P_4 | Q_{2k+3} from a Hamiltonian decomposition of Q_{2k} (2k a power of two).

    One Hamiltonian cycle D of Q_{2k} together with the three top coordinates
    gives D x Q_3 = C_{4^k} x Q_3, handled by :func:`lift_p4`; every other
    cycle appears once per vertex of Q_3 and is cut into 4-paths.
    """
    m = 2 * k
    if k < 2 or m & (m - 1):
        raise ValueError("this route needs 2k a power of two, k >= 2")
    n = m + 3
    cycles = hamiltonian_decomposition_pow2(m.bit_length() - 1)
    d_cycle, spares = cycles[0], cycles[1:]
    pieces = []
    spare_count = 0
    for top in range(8):
        shift = top << m
        for c in spares:
            pieces.extend(cycle_into_paths(Walk(shift, c.dirs, n), 4))
            spare_count += 1
    d_verts = [int(v) for v in d_cycle.vertices()]
    lift = lift_p4(len(d_verts) // 4)
    lift_pieces = 0
    for p in lift.pieces:
        image = set()
        for (x, i), (y, j) in p:
            image.add(edge_between(d_verts[i] | (x << m), d_verts[j] | (y << m)))
        pieces.append(frozenset(image))
        lift_pieces += 1
    meta = {"spare_cycles": spare_count, "spare_cycle_length": len(d_verts),
            "lift_pieces": lift_pieces, "lift_cycle_length": len(d_verts)}
    return Decomposition(make_hypercube(n), tuple(pieces), P4,
                         f"P_4 | Q_{n} via Hamiltonian cycles of Q_{m} and the Q_3 x C_{len(d_verts)} lift",
                         meta).checked()


def p4_divides_qn(n: int) -> Decomposition:
    if n < 4:
        raise ValueError("P_4 divides Q_n only for n >= 4")
    if n % 2 == 0:
        cycle, group, _ = double_run_cycle(n)
        pieces = []
        for f in group.elements:
            pieces.extend(cycle_into_paths(cycle.translate(f), 4))
        return Decomposition(make_hypercube(n), tuple(pieces), P4,
                             f"double-run cycles of Q_{n} cut into P_4").checked()
    if n == 5:
        return p4_of_q5()[2]
    if n == 7:
        return p4_odd_via_hamiltonian(2)
    combined = product_combine(p4_divides_qn(n - 5), p4_of_q5()[2])
    return to_hypercube(combined)
