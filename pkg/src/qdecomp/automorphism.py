"""Automorphisms of Q_n in the normal form ``sigma_A . rho_theta``.

The coordinate permutation is applied first, then the complement.  ``perm``
is stored in one-line notation: ``perm[i - 1] == theta(i)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .cube import Edge, bit, vertex_from_set, vertex_to_set


class DimensionMismatch(ValueError):
    pass


class ClosureBoundExceeded(RuntimeError):
    pass


def _permute_mask(x: int, perm: Sequence[int]) -> int:
    out = 0
    i = 0
    while x:
        if x & 1:
            out |= 1 << (perm[i] - 1)
        x >>= 1
        i += 1
    return out


@dataclass(frozen=True, order=False)
class Automorphism:
    dim: int
    comp: int
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(self.perm)
        object.__setattr__(self, "perm", perm)
        if len(perm) != self.dim or sorted(perm) != list(range(1, self.dim + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.dim}")
        if self.comp >> self.dim:
            raise ValueError(f"complement set uses coordinates beyond {self.dim}")

    @classmethod
    def identity(cls, n: int) -> Automorphism:
        return cls(n, 0, tuple(range(1, n + 1)))

    @classmethod
    def sigma(cls, n: int, coords: Iterable[int]) -> Automorphism:
        return cls(n, vertex_from_set(coords), tuple(range(1, n + 1)))

    @classmethod
    def rho(cls, n: int, cycles: Iterable[Sequence[int]]) -> Automorphism:
        """Coordinate permutation given as disjoint cycles."""
        perm = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                perm[a - 1] = b
        return cls(n, 0, tuple(perm))

    @property
    def is_identity(self) -> bool:
        return self.comp == 0 and self.perm == tuple(range(1, self.dim + 1))

    def sort_key(self) -> tuple:
        return (vertex_to_set(self.comp), self.perm)

    def __call__(self, x: int) -> int:
        return _permute_mask(x, self.perm) ^ self.comp

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, self.dim + 1):
            if i in seen or self.perm[i - 1] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.perm[i - 1]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.perm[j - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        parts = []
        if self.comp:
            parts.append("s{" + ",".join(map(str, vertex_to_set(self.comp))) + "}")
        cyc = self.cycles()
        if cyc:
            parts.append("r" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc))
        return ".".join(parts) if parts else "id"

    def to_json(self) -> dict:
        return {"comp": list(vertex_to_set(self.comp)), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, obj: dict, n: int | None = None) -> Automorphism:
        perm = tuple(obj["perm"])
        return cls(n if n is not None else len(perm), vertex_from_set(obj.get("comp", ())), perm)


_TOKEN = re.compile(r"\s*(s\{[^}]*\}|r(?:\([^)]*\))+|id)\s*")


def _parse_cycle(body: str) -> list[int]:
    body = body.strip()
    if " " in body or "," in body:
        return [int(t) for t in re.split(r"[ ,]+", body) if t]
    return [int(ch) for ch in body]


def parse_automorphism(text: str, n: int) -> Automorphism:
    """Parse ``"s{2,4}.r(1 3 2)"``, ``"r(123)"``, ``"s{1,2,3}"`` or ``"id"``."""
    result = Automorphism.identity(n)
    pieces = [p for p in text.replace(" .", ".").split(".") if p.strip()]
    factors = []
    for p in pieces:
        m = _TOKEN.fullmatch(p)
        if not m:
            raise ValueError(f"cannot parse automorphism component {p!r}")
        tok = m.group(1)
        if tok == "id":
            factors.append(Automorphism.identity(n))
        elif tok.startswith("s"):
            inner = tok[2:-1]
            coords = [int(t) for t in re.split(r"[ ,]+", inner) if t]
            if any(not 1 <= c <= n for c in coords):
                raise ValueError(f"complement set {coords} outside 1..{n}")
            factors.append(Automorphism.sigma(n, coords))
        else:
            cycles = [_parse_cycle(c) for c in re.findall(r"\(([^)]*)\)", tok)]
            for c in cycles:
                if any(not 1 <= v <= n for v in c):
                    raise ValueError(f"cycle {c} outside 1..{n}")
            factors.append(Automorphism.rho(n, [c for c in cycles if c]))
    for f in factors:
        result = compose(result, f)
    return result


def _check_dims(*fs: Automorphism) -> int:
    n = fs[0].dim
    for f in fs[1:]:
        if f.dim != n:
            raise DimensionMismatch(f"dimension mismatch: {n} vs {f.dim}")
    return n


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """``f . g`` (g first), reduced with ``rho_t . sigma_B = sigma_t(B) . rho_t``."""
    n = _check_dims(f, g)
    comp = f.comp ^ _permute_mask(g.comp, f.perm)
    perm = tuple(f.perm[g.perm[i] - 1] for i in range(n))
    return Automorphism(n, comp, perm)


def inverse(f: Automorphism) -> Automorphism:
    n = f.dim
    inv = [0] * n
    for i, p in enumerate(f.perm):
        inv[p - 1] = i + 1
    inv = tuple(inv)
    # (s_A r_t)^-1 = r_t^-1 s_A = s_{t^-1(A)} r_t^-1
    return Automorphism(n, _permute_mask(f.comp, inv), inv)


def apply_vertex(f: Automorphism, x: int) -> int:
    if x >> f.dim:
        raise DimensionMismatch(f"vertex {x} is not in Q_{f.dim}")
    return f(x)


def apply_edge(f: Automorphism, e: Edge) -> Edge:
    if e.dir > f.dim or e.high >> f.dim:
        raise DimensionMismatch(f"edge {e} is not in Q_{f.dim}")
    d = f.perm[e.dir - 1]
    return Edge(f(e.low) & ~bit(d), d)


def translate_edge_set(f: Automorphism, s: Iterable[Edge]) -> frozenset:
    return frozenset(apply_edge(f, e) for e in s)


# subgroups ---------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    dim: int
    elements: tuple[Automorphism, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f) -> bool:
        return f in set(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_group(self) -> bool:
        """Full closure-table, identity and inverse check."""
        elems = set(self.elements)
        if Automorphism.identity(self.dim) not in elems:
            return False
        for f in self.elements:
            if inverse(f) not in elems:
                return False
            for g in self.elements:
                if compose(f, g) not in elems:
                    return False
        return True


def _sorted_group(n: int, elems: Iterable[Automorphism]) -> Subgroup:
    return Subgroup(n, tuple(sorted(elems, key=Automorphism.sort_key)))


DEFAULT_BOUND = 1 << 20


def subgroup_closure(generators: Sequence[Automorphism], n: int | None = None,
                     bound: int = DEFAULT_BOUND) -> Subgroup:
    if not generators and n is None:
        raise ValueError("need at least one generator or an explicit dimension")
    if generators:
        n = _check_dims(*generators)
    ident = Automorphism.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        f = queue.popleft()
        for g in generators:
            h = compose(f, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > bound:
                    raise ClosureBoundExceeded(f"subgroup has more than {bound} elements")
                queue.append(h)
    return _sorted_group(n, seen)


def group_from_elements(elements: Sequence[Automorphism]) -> Subgroup:
    """Wrap an explicit element list; raises if it is not closed."""
    n = _check_dims(*elements)
    g = _sorted_group(n, set(elements))
    if not g.is_group():
        raise ValueError("elements are not closed under composition")
    return g


def even_complement_subgroup(n: int, exclude_coord: int | None = None) -> Subgroup:
    if n < 2:
        raise ValueError("need n >= 2")
    coords = [d for d in range(1, n + 1) if d != exclude_coord]
    ident = tuple(range(1, n + 1))
    elems = []
    for bits in range(1 << len(coords)):
        if bin(bits).count("1") % 2:
            continue
        mask = 0
        for i, d in enumerate(coords):
            if bits >> i & 1:
                mask |= bit(d)
        elems.append(Automorphism(n, mask, ident))
    return _sorted_group(n, elems)


def orbit_translates(g: Subgroup, s: Iterable[Edge]) -> list[frozenset]:
    s = list(s)
    return [translate_edge_set(f, s) for f in g.elements]


def orbit_translate_ids(g: Subgroup, base_ids: np.ndarray) -> list[np.ndarray]:
    """Dense-id version of :func:`orbit_translates` for large edge sets."""
    n = g.dim
    return [kernels.translate_ids(base_ids, n, f.comp, np.asarray(f.perm, dtype=np.int64))
            for f in g.elements]


def product_automorphism(f1: Automorphism, f2: Automorphism) -> Automorphism:
    """``(f1, f2)`` acting on ``Q_n x Q_n = Q_2n`` (f2 on coordinates n+1..2n)."""
    n = _check_dims(f1, f2)
    perm = tuple(f1.perm) + tuple(p + n for p in f2.perm)
    return Automorphism(2 * n, f1.comp | (f2.comp << n), perm)


def half_swap_automorphism(n: int) -> Automorphism:
    if n < 1:
        raise ValueError("need n >= 1")
    perm = tuple(i + n for i in range(1, n + 1)) + tuple(range(1, n + 1))
    return Automorphism(2 * n, 0, perm)
