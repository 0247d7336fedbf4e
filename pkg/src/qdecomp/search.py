"""Exhaustive search for decompositions of small graphs.

``find_decomposition`` is an exact cover over every placement of the piece
in the host, always branching on the lowest-indexed uncovered edge.  With the
budget unspent, an ``impossible`` answer is a proof of non-existence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .automorphism import Automorphism, apply_edge, compose
from .cube import Graph, make_hypercube
from .obstructions import IMPOSSIBLE, POSSIBLE, UNKNOWN, Verdict
from .trees import code_to_edges
from .verify import Decomposition, PieceShape


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 10_000_000
    symmetry: bool = True


class BudgetExhausted(Exception):
    pass


def _pattern(piece: PieceShape) -> list[tuple[int, int]]:
    k = piece.k
    if piece.kind == "path":
        return [(i, i + 1) for i in range(k)]
    if piece.kind == "cycle":
        return [(i, (i + 1) % k) for i in range(k)]
    if piece.kind == "tree":
        return code_to_edges(piece.tree)
    if piece.kind == "subcube":
        q = make_hypercube(k)
        return [e.endpoints() for e in q.edge_list]
    raise ValueError(f"cannot search for pieces of shape {piece}")


def placements(g: Graph, piece: PieceShape) -> list[frozenset]:
    """Every edge set of ``g`` forming a copy of ``piece``, in a fixed order."""
    pat = _pattern(piece)
    padj: dict[int, set] = {}
    for a, b in pat:
        padj.setdefault(a, set()).add(b)
        padj.setdefault(b, set()).add(a)
    # BFS order so every vertex after the first has an earlier neighbour
    order = [pat[0][0]]
    for v in order:
        for w in sorted(padj[v]):
            if w not in order:
                order.append(w)
    parent = {}
    back = {}
    for i, v in enumerate(order):
        earlier = [w for w in padj[v] if order.index(w) < i]
        if earlier:
            parent[v] = min(earlier, key=order.index)
            back[v] = earlier
    nbrs = {v: g.neighbors(v) for v in g.vertices}
    edge_key = g.edge
    found: set = set()
    image: dict = {}
    used: set = set()

    def extend(i):
        if i == len(order):
            found.add(frozenset(edge_key(image[a], image[b]) for a, b in pat))
            return
        v = order[i]
        for cand in nbrs[image[parent[v]]]:
            if cand in used:
                continue
            if all(cand in nbrs_set[image[w]] for w in back[v]):
                image[v] = cand
                used.add(cand)
                extend(i + 1)
                used.discard(cand)
        image.pop(v, None)

    nbrs_set = {v: set(ns) for v, ns in nbrs.items()}
    for start in g.vertices:
        image[order[0]] = start
        used.add(start)
        extend(1)
        used.discard(start)
    return sorted(found, key=lambda s: sorted(map(repr, s)))


def _edge_stabilizer(n: int) -> list[Automorphism]:
    """Automorphisms of Q_n fixing the edge <0, {1}>."""
    out = []
    for rest in itertools.permutations(range(2, n + 1)):
        perm = (1,) + rest
        for comp in (0, 1):
            out.append(Automorphism(n, comp, perm))
    return out


def find_decomposition(g: Graph, piece: PieceShape, cfg: SearchConfig = SearchConfig()) -> Verdict:
    m = piece.num_edges
    if m is not None and g.num_edges % m:
        return Verdict(IMPOSSIBLE, "search", f"exhausted: {m} does not divide {g.num_edges}")
    places = placements(g, piece)
    if not places:
        return Verdict(IMPOSSIBLE, "search", "exhausted: no placement of the piece exists in the host")
    edges = list(g.edge_list)
    index = {e: i for i, e in enumerate(edges)}
    masks = []
    for p in places:
        mask = 0
        for e in p:
            mask |= 1 << index[e]
        masks.append(mask)
    full = (1 << len(edges)) - 1
    by_edge: list[list[int]] = [[] for _ in edges]
    for j, mask in enumerate(masks):
        for i in range(len(edges)):
            if mask >> i & 1:
                by_edge[i].append(j)

    first_choices = by_edge[0]
    pruned = False
    if cfg.symmetry and g.kind == "hypercube" and math.factorial(g.dim - 1) <= 5040:
        stab = _edge_stabilizer(g.dim)
        reps = []
        for j in first_choices:
            orbit = []
            for f in stab:
                img = 0
                for e in places[j]:
                    img |= 1 << index[apply_edge(f, e)]
                orbit.append(img)
            if masks[j] == min(orbit):
                reps.append(j)
        pruned = len(reps) < len(first_choices)
        first_choices = reps

    nodes = 0
    chosen: list[int] = []

    def dfs(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > cfg.budget:
            raise BudgetExhausted
        if covered == full:
            return True
        free = ~covered & full
        i = (free & -free).bit_length() - 1
        cands = first_choices if i == 0 else by_edge[i]
        for j in cands:
            if masks[j] & covered:
                continue
            chosen.append(j)
            if dfs(covered | masks[j]):
                return True
            chosen.pop()
        return False

    try:
        ok = dfs(0)
    except BudgetExhausted:
        return Verdict(UNKNOWN, "search", f"budget of {cfg.budget} nodes exhausted")
    if ok:
        witness = Decomposition(g, tuple(places[j] for j in chosen), piece, "exact-cover search").checked()
        return Verdict(POSSIBLE, "search", f"found after {nodes} nodes", witness)
    note = " (first choice reduced by the edge stabiliser)" if pruned else ""
    return Verdict(IMPOSSIBLE, "search", f"exhausted: {nodes} nodes, {len(places)} placements{note}")


def certify_negative() -> list[tuple[str, Verdict]]:
    """The fixed gallery of Q_3 non-decompositions, each expected Impossible."""
    from .verify import Path, Tree

    q3 = make_hypercube(3)
    gallery = [
        ("Q3 / P4", Path(4)),
        ("Q3 / P6", Path(6)),
        ("Q3 / 4-star", Tree([(0, 1), (0, 2), (0, 3), (0, 4)])),
    ]
    cfg = SearchConfig(symmetry=False)
    return [(name, find_decomposition(q3, shape, cfg)) for name, shape in gallery]


# Hamiltonian decompositions -------------------------------------------------


def _rotation(n: int) -> Automorphism:
    """Coordinate shift i -> i + 2 (mod n): an order n/2 symmetry of Q_n."""
    return Automorphism(n, 0, tuple((i + 1) % n + 1 for i in range(1, n + 1)))


def find_hamiltonian_decomposition(n: int, cfg: SearchConfig = SearchConfig()):
    """Return ``n / 2`` Hamiltonian cycles partitioning Q_n, or None on budget.

    For n = 6 we look for one Hamiltonian cycle C such that C and its images
    under the coordinate shift by two are pairwise edge-disjoint; those three
    images are then the decomposition.
    """
    from .constructions.fundamental import DirectionCycle, hamiltonian_decomposition_pow2, verify_cycle_partition

    if n % 2 or not 2 <= n <= 6:
        raise ValueError("supported for n in {2, 4, 6}")
    if n in (2, 4):
        return hamiltonian_decomposition_pow2(n.bit_length() - 1)
    powers = [Automorphism.identity(n)]
    rot = _rotation(n)
    for _ in range(n // 2 - 1):
        powers.append(compose(rot, powers[-1]))
    # C must meet every rotation orbit of edges exactly once
    orbit = np.full(n << n, -1, dtype=np.int64)
    mem_low, mem_dir = [], []
    n_orbits = 0
    for e in make_hypercube(n).edge_list:
        if orbit[e.low * n + e.dir - 1] >= 0:
            continue
        for f in powers:
            img = apply_edge(f, e)
            for x in (img.low, img.high):
                orbit[x * n + img.dir - 1] = n_orbits
            mem_low.append(img.low)
            mem_dir.append(img.dir)
        n_orbits += 1
    status, dirs, _ = kernels.orbit_hamiltonian(n, orbit, np.array(mem_low), np.array(mem_dir), cfg.budget)
    if status != 1:
        return None
    base = DirectionCycle(n, tuple(int(d) for d in dirs))
    cycles = [base.translate(f) for f in powers]
    if not verify_cycle_partition(cycles, n).ok:
        raise AssertionError("orbit search produced cycles that do not partition Q_n")
    return cycles
