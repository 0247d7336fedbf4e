"""Fundamental sets: labelled trees, the double-run cycle, Ringel doubling."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import kernels
from ..automorphism import (
    Automorphism,
    Subgroup,
    compose,
    even_complement_subgroup,
    group_from_elements,
    half_swap_automorphism,
    orbit_translates,
    product_automorphism,
)
from ..cube import Edge, Walk, bit, make_hypercube
from ..trees import LabeledTree
from ..verify import (
    ConstructionError,
    Cycle,
    Decomposition,
    Failure,
    VerifyReport,
    classify_piece,
    verify_fundamental,
    verify_fundamental_ids,
)

MAX_POW2_LEVEL = 4


@dataclass(frozen=True)
class DirectionCycle:
    """A cycle of ``Q_dim`` walked from the empty set along ``dirs``."""

    dim: int
    dirs: tuple[int, ...]
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "dirs", tuple(int(d) for d in self.dirs))
        if not self.is_simple_cycle():
            raise ValueError("direction sequence does not trace a simple cycle")

    def __len__(self) -> int:
        return len(self.dirs)

    @cached_property
    def _trace(self):
        return kernels.walk_ids(self.start, np.asarray(self.dirs, dtype=np.int64), self.dim)

    def is_simple_cycle(self) -> bool:
        if len(self.dirs) < 4 or any(not 1 <= d <= self.dim for d in self.dirs):
            return False
        verts, _ = self._trace
        if verts[0] != verts[-1]:
            return False
        return len(np.unique(verts[:-1])) == len(self.dirs)

    @property
    def is_hamiltonian(self) -> bool:
        return len(self.dirs) == 1 << self.dim

    def vertices(self) -> np.ndarray:
        """Visited vertices, without the repeated start."""
        return self._trace[0][:-1]

    def edge_ids(self) -> np.ndarray:
        return self._trace[1]

    def walk(self) -> Walk:
        return Walk(self.start, self.dirs, self.dim)

    def edges(self) -> frozenset:
        return frozenset(self.walk().edge_sequence())

    def translate(self, f: Automorphism) -> DirectionCycle:
        return DirectionCycle(self.dim, tuple(f.perm[d - 1] for d in self.dirs), f(self.start))


def _check(report: VerifyReport, what: str) -> None:
    if not report.ok:
        raise ConstructionError(f"{what} failed verification:\n{report}")


def _orbit_decomposition(base: frozenset, group: Subgroup, shape, provenance: str) -> Decomposition:
    pieces = orbit_translates(group, sorted(base))
    return Decomposition(make_hypercube(group.dim), tuple(pieces), shape, provenance).checked()


def trivial_group(n: int) -> Subgroup:
    return Subgroup(n, (Automorphism.identity(n),))


# trees --------------------------------------------------------------------


def embed_labeled_tree(t: LabeledTree, n: int) -> frozenset:
    """Root goes to the empty set; an edge labelled ``i`` runs in direction ``i``."""
    if t.k > n:
        raise ValueError(f"tree with {t.k} edges does not fit in Q_{n} this way")
    adj: dict = {}
    for u, v, lab in t.edges:
        adj.setdefault(u, []).append((v, lab))
        adj.setdefault(v, []).append((u, lab))
    pos = {t.root: 0}
    queue = deque([t.root])
    out = set()
    while queue:
        v = queue.popleft()
        for w, lab in adj[v]:
            if w not in pos:
                pos[w] = pos[v] ^ bit(lab)
                out.add(Edge(pos[v] & ~bit(lab), lab))
                queue.append(w)
    return frozenset(out)


def tree_fundamental_decomposition(t: LabeledTree):
    """Embed ``t`` in ``Q_k`` and spread it with the even-complement group.

    Returns ``(base, group, decomposition)``; the group has order ``2**(k-1)``.
    """
    k = t.k
    base = embed_labeled_tree(t, k)
    group = even_complement_subgroup(k) if k >= 2 else trivial_group(1)
    _check(verify_fundamental(base, group), f"tree fundamental set in Q_{k}")
    shape = classify_piece(base)
    d = _orbit_decomposition(base, group, shape, f"tree-fundamental Q_{k}")
    return base, group, d


# double-run cycle -----------------------------------------------------------


def double_run_cycle(n: int):
    """The 2n-cycle ``(1..n)^2`` from the empty set, fundamental for even ``n``."""
    if n < 2 or n % 2:
        raise ValueError(f"double-run cycle needs even n >= 2, got {n}")
    cycle = DirectionCycle(n, tuple(range(1, n + 1)) * 2)
    group = even_complement_subgroup(n, exclude_coord=n)
    _check(verify_fundamental_ids(cycle.edge_ids(), group), f"double-run cycle of Q_{n}")
    d = _orbit_decomposition(cycle.edges(), group, Cycle(2 * n), f"double-run cycle Q_{n}")
    return cycle, group, d


# Ringel doubling ------------------------------------------------------------


def _cycle_square_ids(c: DirectionCycle) -> np.ndarray:
    """Edge ids of ``C x C`` inside ``Q_2n`` (first factor in the low bits)."""
    n = c.dim
    lows = []
    dirs = []
    x = c.start
    for d in c.dirs:
        lows.append(x & ~bit(d))
        dirs.append(d)
        x ^= bit(d)
    lows = np.asarray(lows, dtype=np.int64)
    dirs = np.asarray(dirs, dtype=np.int64)
    others = np.arange(1 << n, dtype=np.int64)
    first_lows = (lows[:, None] | (others[None, :] << n)).ravel()
    first_dirs = np.repeat(dirs, len(others))
    second_lows = (others[None, :] | (lows[:, None] << n)).ravel()
    second_dirs = np.repeat(dirs + n, len(others))
    return np.concatenate([
        kernels.encode_edges(first_lows, first_dirs, 2 * n),
        kernels.encode_edges(second_lows, second_dirs, 2 * n),
    ])


def ringel_rows(c: DirectionCycle) -> tuple[list[int], list[int]]:
    n = c.dim
    m = len(c.dirs)
    cs = c.dirs
    phi: list[int] = []
    gamma: list[int] = []
    for r in range(1, m + 1):
        run = [cs[(i - 1) % m] for i in range(2 - r, m - r + 1)]
        phi.extend(run)
        phi.append(cs[r - 1] + n)
        gamma.extend(d + n for d in run)
        gamma.append(cs[r - 1])
    return phi, gamma


def ringel_double(c: DirectionCycle):
    """Split ``E(C x C)`` into two Hamiltonian cycles of ``Q_2n``.

    Row ``r`` of Phi runs ``c[2-r] .. c[m-r]`` (cyclic, 1-based) in the first
    factor and then crosses along ``c[r]`` in the second; Gamma mirrors it.
    """
    if c.start != 0 or not c.is_hamiltonian:
        raise ValueError("ringel_double needs a Hamiltonian cycle starting at the empty set")
    n2 = 2 * c.dim
    phi_dirs, gamma_dirs = ringel_rows(c)
    try:
        phi = DirectionCycle(n2, phi_dirs)
        gamma = DirectionCycle(n2, gamma_dirs)
    except ValueError as exc:
        raise ConstructionError(f"Ringel doubling did not produce a cycle: {exc}") from exc
    if not (phi.is_hamiltonian and gamma.is_hamiltonian):
        raise ConstructionError("Ringel doubling produced a non-Hamiltonian cycle")
    ids = np.concatenate([phi.edge_ids(), gamma.edge_ids()])
    if len(np.unique(ids)) != len(ids):
        raise ConstructionError("Phi and Gamma share an edge")
    if not np.array_equal(np.sort(ids), np.sort(_cycle_square_ids(c))):
        raise ConstructionError("Phi and Gamma do not cover E(C x C)")
    return phi, gamma


def _level(k: int) -> None:
    if not 1 <= k <= MAX_POW2_LEVEL:
        raise ValueError(f"k must be in 1..{MAX_POW2_LEVEL}, got {k}")


def verify_cycle_partition(cycles, n: int) -> VerifyReport:
    """Id-based partition check for (possibly huge) cycle decompositions of Q_n."""
    total = n << (n - 1)
    failures = []
    if not cycles:
        return VerifyReport((Failure(None, "missing edges", "no cycles"),))
    counts = kernels.cover_counts(np.concatenate([c.edge_ids() for c in cycles]), total)
    if (counts > 1).any():
        failures.append(Failure(None, "overlap", f"{int((counts > 1).sum())} edge(s) covered twice"))
    if (counts == 0).any():
        failures.append(Failure(None, "missing edges", f"{int((counts == 0).sum())} edge(s) uncovered"))
    return VerifyReport(tuple(failures))


def hamiltonian_decomposition_pow2(k: int) -> list[DirectionCycle]:
    """Ringel's recursion: ``2**(k-1)`` Hamiltonian cycles partitioning ``Q_{2**k}``."""
    _level(k)
    cycles = [DirectionCycle(2, (1, 2, 1, 2))]
    for _ in range(1, k):
        phis, gammas = zip(*(ringel_double(c) for c in cycles))
        cycles = list(phis) + list(gammas)
    n = 1 << k
    _check(verify_cycle_partition(cycles, n), f"Hamiltonian decomposition of Q_{n}")
    return cycles


def hamiltonian_decomposition_as_pieces(k: int) -> Decomposition:
    n = 1 << k
    cycles = hamiltonian_decomposition_pow2(k)
    return Decomposition(make_hypercube(n), tuple(c.edges() for c in cycles),
                         Cycle(1 << n), f"Ringel Hamiltonian decomposition Q_{n}").checked()


def fundamental_hamiltonian_pow2(k: int):
    """A Hamiltonian cycle of ``Q_{2**k}`` with a group of order ``2**(k-1)``
    whose translates of it partition the edges."""
    _level(k)
    cycle = DirectionCycle(2, (1, 2, 1, 2))
    group = trivial_group(2)
    for _ in range(1, k):
        n = cycle.dim
        phi, _ = ringel_double(cycle)
        swap = half_swap_automorphism(n)
        doubled = [product_automorphism(f, f) for f in group.elements]
        elems = doubled + [compose(swap, f) for f in doubled]
        group = group_from_elements(elems)
        cycle = phi
    _check(verify_fundamental_ids(cycle.edge_ids(), group), f"fundamental Hamiltonian cycle of Q_{cycle.dim}")
    return cycle, group
