"""Named worked examples: a base edge set, a group, and the expected outcome."""

from __future__ import annotations

from dataclasses import dataclass

from .automorphism import Subgroup, group_from_elements, orbit_translates, parse_automorphism, subgroup_closure
from .cube import edge_between, make_hypercube, vertex_from_bits
from .verify import ANY, Decomposition, classify_piece


@dataclass(frozen=True)
class Fixture:
    name: str
    dim: int
    base: frozenset
    group: Subgroup
    expect_fundamental: bool
    note: str = ""

    def decomposition(self) -> Decomposition:
        shape = classify_piece(self.base) if self.expect_fundamental else ANY
        return Decomposition(make_hypercube(self.dim), tuple(orbit_translates(self.group, self.base)),
                             shape, self.name)


def _edges(n: int, *pairs: tuple[str, str]) -> frozenset:
    return frozenset(edge_between(vertex_from_bits(a), vertex_from_bits(b)) for a, b in pairs)


def _group(n: int, *names: str) -> Subgroup:
    return group_from_elements([parse_automorphism(s, n) for s in names])


def fixtures() -> dict[str, Fixture]:
    from .constructions.p4 import p4_of_q5

    star = _edges(3, ("000", "100"), ("000", "010"))
    star_prime = _edges(3, ("000", "100"), ("000", "001"))
    g6 = _group(3, "id", "s{1,2,3}", "s{1}.r(123)", "s{1,2}.r(132)", "s{3}.r(132)", "s{2,3}.r(123)")
    g6_prime = _group(3, "id", "s{1,2,3}", "s{1}.r(132)", "s{1,3}.r(123)", "s{2}.r(123)", "s{2,3}.r(132)")
    tree4 = _edges(3, ("000", "100"), ("000", "010"), ("000", "001"), ("001", "101"))
    g3 = subgroup_closure([parse_automorphism("s{2,3}.r(123)", 3)])
    g_q5, group_q5, _ = p4_of_q5()
    out = [
        Fixture("two-star", 3, star, g6, True, "2-star at 000 with leaves 100, 010; cyclic group of order 6"),
        Fixture("two-star-prime", 3, star_prime, g6_prime, True, "2-star at 000 with leaves 100, 001"),
        Fixture("two-star-prime-wrong-group", 3, star_prime, g6, False,
                "the order-6 group of the first 2-star does not work for this one"),
        Fixture("four-edge-tree", 3, tree4, g3, True, "3-star at 000 plus edge <001,101>; group of order 3"),
        Fixture("q5-subgraph-g", 5, g_q5, group_q5, True, "20-edge subgraph G with {id, s24, s25, s45}"),
    ]
    return {f.name: f for f in out}
