"""Abstract trees: canonical encoding, enumeration and edge-labelled trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


class NotATree(ValueError):
    pass


def _adjacency(edges: Iterable[tuple]) -> dict:
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def is_tree(edges: Sequence[tuple]) -> bool:
    edges = list(edges)
    if not edges:
        return False
    adj = _adjacency(edges)
    if len(adj) != len(edges) + 1:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _centroids(adj: dict) -> list:
    n = len(adj)
    root = next(iter(adj))
    parent = {root: None}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    size = {v: 1 for v in adj}
    for v in reversed(order):
        if parent[v] is not None:
            size[parent[v]] += size[v]
    best = []
    best_val = n + 1
    for v in adj:
        heaviest = n - size[v]
        for w in adj[v]:
            if parent.get(w) == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best_val:
            best, best_val = [v], heaviest
        elif heaviest == best_val:
            best.append(v)
    return best


def _rooted_code(adj: dict, root) -> str:
    parent = {root: None}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    code: dict = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in adj[v] if parent.get(w) == v and w != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(edges: Iterable[tuple]) -> str:
    """Isomorphism-invariant string for an abstract tree (rooted at its centroid)."""
    edges = list(edges)
    if not is_tree(edges):
        raise NotATree("edge set is not a tree")
    adj = _adjacency(edges)
    return min(_rooted_code(adj, c) for c in _centroids(adj))


def code_to_edges(code: str) -> list[tuple[int, int]]:
    """Rebuild a concrete tree (vertices 0..k, root 0) from a canonical code."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            v = nxt
            nxt += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return edges


def enumerate_trees(k: int) -> list[list[tuple[int, int]]]:
    """All non-isomorphic trees with ``k >= 1`` edges, in canonical-code order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    codes = {canonical_code([(0, 1)])}
    for _ in range(k - 1):
        grown = set()
        for c in codes:
            edges = code_to_edges(c)
            m = len(edges) + 1
            for v in range(m):
                grown.add(canonical_code(edges + [(v, m)]))
        codes = grown
    return [code_to_edges(c) for c in sorted(codes)]


@dataclass(frozen=True)
class LabeledTree:
    """Tree whose ``k`` edges carry the distinct labels ``1..k``.

    ``edges`` holds ``(u, v, label)`` triples over hashable vertex ids.
    """

    edges: tuple[tuple[Hashable, Hashable, int], ...]
    root: Hashable

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        labels = sorted(lab for _, _, lab in self.edges)
        if labels != list(range(1, len(self.edges) + 1)):
            raise ValueError(f"edge labels must be a permutation of 1..{len(self.edges)}, got {labels}")
        pairs = [(u, v) for u, v, _ in self.edges]
        if not is_tree(pairs):
            raise NotATree("labelled edges do not form a tree")
        if self.root not in {x for p in pairs for x in p}:
            raise ValueError(f"root {self.root!r} is not a vertex of the tree")

    @property
    def k(self) -> int:
        return len(self.edges)

    @classmethod
    def bfs_labelled(cls, edges: Sequence[tuple], root=None) -> LabeledTree:
        """Label the edges 1..k in breadth-first order from ``root``."""
        adj = _adjacency(edges)
        if root is None:
            root = edges[0][0]
        out = []
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v], key=repr):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
                    out.append((v, w, len(out) + 1))
        return cls(tuple(out), root)
