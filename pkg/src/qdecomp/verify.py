"""Checking that a list of edge sets partitions a graph, piece by piece."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .automorphism import Subgroup, orbit_translate_ids
from .cube import Edge, Graph, degree_counts, endpoints, hypercube_iso_check, make_graph
from .trees import NotATree, canonical_code, code_to_edges, is_tree

OVERLAP = "overlap"
MISSING = "missing edges"
FOREIGN = "foreign edge"
WRONG_SHAPE = "wrong shape"
CARDINALITY = "cardinality"


@dataclass(frozen=True)
class PieceShape:
    """``kind`` is path, cycle, tree, subcube or any.

    For trees ``tree`` holds the canonical code and ``k`` the edge count.
    """

    kind: str
    k: int | None = None
    tree: str | None = None

    def __post_init__(self):
        if self.kind == "path" and (self.k is None or self.k < 1):
            raise ValueError("Path(k) needs k >= 1")
        if self.kind == "cycle" and (self.k is None or self.k < 3):
            raise ValueError("Cycle(k) needs k >= 3")
        if self.kind == "subcube" and (self.k is None or self.k < 1):
            raise ValueError("Subcube(k) needs k >= 1")
        if self.kind not in ("path", "cycle", "tree", "subcube", "any"):
            raise ValueError(f"unknown piece kind {self.kind!r}")

    @property
    def num_edges(self) -> int | None:
        if self.kind == "subcube":
            return self.k << (self.k - 1)
        return self.k

    @property
    def regular_degree(self) -> int | None:
        if self.kind == "cycle":
            return 2
        if self.kind == "subcube":
            return self.k
        return None

    def __str__(self) -> str:
        if self.kind == "path":
            return f"P{self.k}"
        if self.kind == "cycle":
            return f"C{self.k}"
        if self.kind == "subcube":
            return f"Q{self.k}"
        if self.kind == "tree":
            return "tree:" + ",".join(f"{a}-{b}" for a, b in code_to_edges(self.tree))
        return "any"


def Path(k: int) -> PieceShape:
    return PieceShape("path", k)


def Cycle(k: int) -> PieceShape:
    return PieceShape("cycle", k)


def Subcube(k: int) -> PieceShape:
    return PieceShape("subcube", k)


def Tree(edges: Iterable[tuple]) -> PieceShape:
    edges = list(edges)
    return PieceShape("tree", len(edges), canonical_code(edges))


ANY = PieceShape("any")


def parse_shape(text: str) -> PieceShape:
    """``P4``, ``C8``, ``Q2``, ``tree:1-2,1-3,3-4`` (``:`` also separates) or ``any``."""
    t = text.strip()
    if t.lower() == "any":
        return ANY
    if t.lower().startswith("tree:"):
        edges = []
        for tok in t[5:].split(","):
            a, b = re.split(r"[-:]", tok.strip())
            edges.append((int(a), int(b)))
        return Tree(edges)
    m = re.fullmatch(r"([PCQ])(\d+)", t, flags=re.I)
    if not m:
        raise ValueError(f"cannot parse piece shape {text!r}")
    k = int(m.group(2))
    return {"P": Path, "C": Cycle, "Q": Subcube}[m.group(1).upper()](k)


# classification -----------------------------------------------------------


def _components(edges: Sequence) -> int:
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in endpoints(e):
            parent.setdefault(v, v)
    comps = len(parent)
    for e in edges:
        a, b = (find(v) for v in endpoints(e))
        if a != b:
            parent[a] = b
            comps -= 1
    return comps


def classify_piece(s: Iterable) -> PieceShape:
    edges = list(set(s))
    if not edges:
        raise ValueError("cannot classify an empty edge set")
    deg = degree_counts(edges)
    nv, ne = len(deg), len(edges)
    if _components(edges) != 1:
        return ANY
    if ne == nv - 1:
        degs = Counter(deg.values())
        if degs[1] == 2 and degs[1] + degs[2] == nv:
            return Path(ne)
        return Tree([endpoints(e) for e in edges])
    if ne == nv and ne >= 3 and all(d == 2 for d in deg.values()):
        return Cycle(ne)
    return ANY


def is_subcube_piece(s: Iterable, k: int) -> bool:
    edges = list(set(s))
    if len(edges) != k << (k - 1):
        return False
    verts = sorted({v for e in edges for v in endpoints(e)}, key=repr)
    g = make_graph(verts, [endpoints(e) for e in edges])
    return hypercube_iso_check(g, k) is not None


def matches_shape(s: Iterable, shape: PieceShape) -> bool:
    edges = list(set(s))
    if not edges:
        return False
    if shape.kind == "any":
        return True
    if shape.kind == "subcube":
        return is_subcube_piece(edges, shape.k)
    got = classify_piece(edges)
    if shape.kind == "tree":
        if got.kind not in ("path", "tree"):
            return False
        return canonical_code([endpoints(e) for e in edges]) == shape.tree
    return got == shape


def tree_isomorphic(a: Iterable, b: Iterable) -> bool:
    ea = [endpoints(e) for e in a]
    eb = [endpoints(e) for e in b]
    if not is_tree(ea) or not is_tree(eb):
        raise NotATree("tree_isomorphic needs two trees")
    return canonical_code(ea) == canonical_code(eb)


# reports ------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    piece: int | None
    reason: str
    detail: str = ""

    def __str__(self) -> str:
        where = "decomposition" if self.piece is None else f"piece {self.piece}"
        return f"{where}: {self.reason}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class VerifyReport:
    failures: tuple[Failure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def reasons(self) -> set[str]:
        return {f.reason for f in self.failures}

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "FAILED\n" + "\n".join("  " + str(f) for f in self.failures)


class ConstructionError(RuntimeError):
    """A construction produced output that does not verify."""


@dataclass(frozen=True)
class Decomposition:
    host: Graph
    pieces: tuple[frozenset, ...]
    shape: PieceShape = ANY
    provenance: str = ""
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(frozenset(p) for p in self.pieces))

    def __len__(self) -> int:
        return len(self.pieces)

    def verify(self) -> VerifyReport:
        return verify_partition(self)

    def checked(self) -> Decomposition:
        report = verify_partition(self)
        if not report.ok:
            raise ConstructionError(f"{self.provenance or 'decomposition'} failed verification:\n{report}")
        return self


def verify_partition(d: Decomposition) -> VerifyReport:
    host = d.host
    failures = []
    seen: dict = {}
    total = 0
    for i, piece in enumerate(d.pieces):
        if not piece:
            failures.append(Failure(i, WRONG_SHAPE, "empty piece"))
            continue
        foreign = [e for e in piece if not host.has_edge(e)]
        if foreign:
            failures.append(Failure(i, FOREIGN, f"{len(foreign)} edge(s), e.g. {sorted(foreign, key=repr)[0]}"))
        clash = sorted({seen[e] for e in piece if e in seen})
        if clash:
            failures.append(Failure(i, OVERLAP, f"shares edges with piece(s) {clash}"))
        for e in piece:
            seen.setdefault(e, i)
            total += 1
        if not matches_shape(piece, d.shape):
            failures.append(Failure(i, WRONG_SHAPE, f"expected {d.shape}, got {classify_piece(piece)}"))
    covered = sum(1 for e in seen if host.has_edge(e))
    if covered != host.num_edges:
        missing = host.num_edges - covered
        example = ""
        if host.kind != "hypercube" or host.dim <= 16:
            example = f", e.g. {next(e for e in host.edge_list if e not in seen)}"
        failures.append(Failure(None, MISSING, f"{missing} host edge(s) uncovered{example}"))
    return VerifyReport(tuple(failures))


# fundamental sets ---------------------------------------------------------


def edge_ids(edges: Iterable[Edge], n: int) -> np.ndarray:
    enc = kernels.encode_edge
    return np.fromiter((enc(e.low, e.dir, n) for e in edges), dtype=np.int64)


def verify_fundamental_ids(base_ids: np.ndarray, g: Subgroup) -> VerifyReport:
    n = g.dim
    total = n << (n - 1)
    base_ids = np.asarray(base_ids, dtype=np.int64)
    failures = []
    if len(np.unique(base_ids)) != len(base_ids):
        failures.append(Failure(0, OVERLAP, "base repeats an edge"))
    if len(base_ids) * g.order != total:
        failures.append(Failure(None, CARDINALITY,
                                f"|base|*|G| = {len(base_ids)}*{g.order} != {total} = |E(Q_{n})|"))
    translates = orbit_translate_ids(g, base_ids)
    counts = kernels.cover_counts(np.concatenate(translates), total)
    if (counts > 1).any():
        owner = np.full(total, -1, dtype=np.int64)
        for i, t in enumerate(translates):
            dup = t[owner[t] >= 0]
            if len(dup):
                others = sorted({int(x) for x in owner[dup]})
                failures.append(Failure(i, OVERLAP,
                                        f"translate by {g.elements[i]} meets translate(s) {others}"))
            owner[t] = np.where(owner[t] >= 0, owner[t], i)
    missing = int((counts == 0).sum())
    if missing:
        failures.append(Failure(None, MISSING, f"{missing} edge(s) of Q_{n} uncovered"))
    return VerifyReport(tuple(failures))


def verify_fundamental(base: Iterable[Edge], g: Subgroup) -> VerifyReport:
    base = list(set(base))
    n = g.dim
    bad = [e for e in base if not (1 <= e.dir <= n and e.high < (1 << n) and not e.low >> (e.dir - 1) & 1)]
    if bad:
        return VerifyReport((Failure(0, FOREIGN, f"{bad[0]} is not an edge of Q_{n}"),))
    return verify_fundamental_ids(edge_ids(base, n), g)
