"""Sound non-divisibility rules, plus a dispatcher that also tries constructions.

Every rule answers ``impossible`` only when its argument applies, and
``unknown`` otherwise; none of them ever claims a piece divides Q_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .verify import Decomposition, PieceShape

POSSIBLE = "possible"
IMPOSSIBLE = "impossible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str = ""
    reason: str = ""
    witness: Decomposition | None = None

    @property
    def impossible(self) -> bool:
        return self.status == IMPOSSIBLE

    @property
    def possible(self) -> bool:
        return self.status == POSSIBLE

    def __str__(self) -> str:
        if self.status == POSSIBLE:
            return f"POSSIBLE [{self.rule}] {self.reason}"
        if self.status == IMPOSSIBLE:
            return f"IMPOSSIBLE [{self.rule}] {self.reason}"
        return "UNKNOWN" + (f" ({self.reason})" if self.reason else "")


def _unknown(reason: str = "") -> Verdict:
    return Verdict(UNKNOWN, reason=reason)


def _q_edges(n: int) -> int:
    return n << (n - 1)


def check_edge_count(piece_edges: int, n: int) -> Verdict:
    if piece_edges < 1:
        raise ValueError("piece must have at least one edge")
    total = _q_edges(n)
    if total % piece_edges:
        return Verdict(IMPOSSIBLE, "edge-count",
                       f"{piece_edges} does not divide |E(Q_{n})| = {n}*2^{n - 1} = {total}")
    return _unknown(f"{piece_edges} divides {total}")


def check_odd_path(k: int, n: int) -> Verdict:
    if k % 2 == 0:
        return _unknown("rule needs k odd")
    if n % k:
        return Verdict(IMPOSSIBLE, "odd-path",
                       f"P_{k} has odd length {k}, so it could only divide Q_{n} if {k} | {n}")
    return _unknown(f"{k} | {n}")


def check_path_odd_dim(k: int, n: int) -> Verdict:
    if n % 2 == 1 and k > n:
        return Verdict(IMPOSSIBLE, "odd-dimension-path-length",
                       f"n = {n} is odd and the path length {k} exceeds it")
    return _unknown()


def check_regular_divisor(h_degree: int, n: int) -> Verdict:
    if h_degree < 1:
        raise ValueError("degree must be >= 1")
    if n % h_degree:
        return Verdict(IMPOSSIBLE, "regular-divisor",
                       f"a {h_degree}-regular piece can only divide the {n}-regular Q_{n} if {h_degree} | {n}")
    return _unknown(f"{h_degree} | {n}")


def check_p2k_counting(k: int) -> Verdict:
    """Degree-1 counting for P_{2^k} in Q_{2k+1}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k + 1
    ones = n * (1 << (k + 1))
    cols = 1 << n
    if ones < cols:
        return Verdict(IMPOSSIBLE, "endpoint-counting",
                       f"(2k+1)*2^(k+1) = {n}*{1 << (k + 1)} = {ones} < {cols} = 2^(2k+1): "
                       f"the {n * (1 << k)} copies of P_{1 << k} have {ones} endpoints, "
                       f"but each of the {cols} vertices needs one")
    return _unknown(f"{ones} >= {cols}")


# degree-array feasibility --------------------------------------------------


@lru_cache(maxsize=None)
def degree_array_feasible(k: int, n: int) -> bool | None:
    """Can ``c`` copies of P_k have degree vectors summing to ``n`` everywhere?

    Rows are permutations of the P_k degree sequence over the 2^n vertices;
    columns must sum to ``n``.  Returns None outside the supported regime.
    """
    nv = 1 << n
    total = _q_edges(n)
    if total % k:
        return False
    c = total // k
    if c > 4 or nv > 32:
        return None
    if k + 1 > nv:
        return False
    twos, ones = k - 1, 2
    types = [t for t in iproduct((0, 1, 2), repeat=c) if sum(t) == n]
    if not types:
        return False

    def search(i, left, need2, need1):
        if i == len(types):
            return left == 0 and not any(need2) and not any(need1)
        t = types[i]
        rest = types[i + 1:]
        for cnt in range(left, -1, -1):
            n2 = tuple(need2[r] - cnt * (t[r] == 2) for r in range(c))
            n1 = tuple(need1[r] - cnt * (t[r] == 1) for r in range(c))
            if min(n2) < 0 or min(n1) < 0:
                continue
            rem = left - cnt
            # a remaining column gives each row either a 2, a 1 or a 0
            if any(a + b > rem for a, b in zip(n2, n1)):
                continue
            if not rest and rem:
                continue
            if search(i + 1, rem, n2, n1):
                return True
        return False

    return search(0, nv, (twos,) * c, (ones,) * c)


def check_degree_sequence(piece: PieceShape, n: int) -> Verdict:
    if piece.kind != "path":
        return _unknown("rule applies to paths only")
    k = piece.k
    feasible = degree_array_feasible(k, n)
    if feasible is None:
        return _unknown("outside the small-array regime (<= 4 copies, <= 32 vertices)")
    if not feasible:
        c = _q_edges(n) // k if _q_edges(n) % k == 0 else None
        return Verdict(IMPOSSIBLE, "degree-array",
                       f"no {c} x {1 << n} array whose rows permute the degree sequence of P_{k} "
                       f"({'2,' * (k - 1)}1,1,0...) has every column summing to {n}")
    return _unknown("degree array is feasible")


# dispatcher ------------------------------------------------------------------


def _rules(piece: PieceShape, n: int) -> list[Verdict]:
    out = []
    m = piece.num_edges
    if m is not None:
        out.append(check_edge_count(m, n))
    if piece.kind == "path":
        k = piece.k
        out.append(check_odd_path(k, n))
        if n % 2 == 1 and k == 1 << ((n - 1) // 2):
            out.append(check_p2k_counting((n - 1) // 2))
        out.append(check_degree_sequence(piece, n))
        # cited without proof, so it goes after the rules that carry their own argument
        out.append(check_path_odd_dim(k, n))
    if piece.regular_degree is not None:
        out.append(check_regular_divisor(piece.regular_degree, n))
    if piece.kind in ("path", "tree", "cycle", "subcube") and m is not None:
        if m > _q_edges(n):
            out.append(Verdict(IMPOSSIBLE, "too-large", f"piece has {m} edges, Q_{n} only {_q_edges(n)}"))
    if piece.kind == "subcube" and piece.k > n:
        out.append(Verdict(IMPOSSIBLE, "too-large", f"Q_{piece.k} is not a subgraph of Q_{n}"))
    return out


def check_rules(piece: PieceShape, n: int) -> Verdict:
    """First firing obstruction, in fixed rule order, else Unknown."""
    for v in _rules(piece, n):
        if v.impossible:
            return v
    return _unknown("no obstruction applies")


MAX_WITNESS_DIM = 12
# hosts this small are settled outright by exhaustive search
SEARCH_DIM = 3


def _cut_double_run(n: int, k: int) -> Decomposition:
    from .constructions import combine, fundamental
    from .cube import make_hypercube
    from .verify import Path

    cycle, group, _ = fundamental.double_run_cycle(n)
    pieces = []
    for f in group.elements:
        pieces.extend(combine.cycle_into_paths(cycle.translate(f), k))
    return Decomposition(make_hypercube(n), tuple(pieces), Path(k),
                         f"double-run cycles of Q_{n} cut into P_{k}").checked()


def _construct(piece: PieceShape, n: int) -> tuple[str, Decomposition] | None:
    from .constructions import combine, fundamental, p4
    from .trees import LabeledTree, code_to_edges
    from .verify import Cycle

    if n > MAX_WITNESS_DIM:
        return None
    kind, k = piece.kind, piece.k
    try:
        if kind == "path":
            if k == 4 and n >= 4:
                return "P_4 | Q_n for n >= 4", p4.p4_divides_qn(n)
            if n % k == 0:
                t = LabeledTree.bfs_labelled([(i, i + 1) for i in range(k)], 0)
                return "k | n: P_k fundamental in Q_k, Q_k | Q_n", combine.tree_divides_qn(t, n)
            if k % 2 == 0 and n % 2 == 0 and n % (k // 2) == 0 and k // 2 < n:
                return "n even, k/2 | n: double-run cycles cut into paths", _cut_double_run(n, k)
            if n % 2 == 0 and k & (k - 1) == 0 and k < (1 << n):
                return ("n even: Hamiltonian cycles cut into P_{2^j}",
                        combine.p2j_divides_qn(k.bit_length() - 1, n))
        elif kind == "tree" and n % k == 0:
            t = LabeledTree.bfs_labelled(code_to_edges(piece.tree), 0)
            return "k | n: tree fundamental in Q_k, Q_k | Q_n", combine.tree_divides_qn(t, n)
        elif kind == "subcube" and n % k == 0:
            return "k | n: Q_k | Q_n", combine.subcube_decomposition(k, n)
        elif kind == "cycle":
            if n % 2 == 0 and k == 2 * n:
                return "n even: double-run 2n-cycle is fundamental", fundamental.double_run_cycle(n)[2]
            if k == 4 and n % 2 == 0:
                d = combine.subcube_decomposition(2, n)
                return "C_4 = Q_2 and 2 | n", Decomposition(d.host, d.pieces, Cycle(4), d.provenance).checked()
            m = k.bit_length() - 1
            if k == 1 << m and m >= 2 and m & (m - 1) == 0 and n & (n - 1) == 0 and m <= n:
                return ("powers of two: fundamental Hamiltonian cycle of Q_m inside Q_n",
                        combine.m_cycle_divides_qn(m, n))
    except combine.UnknownConstructive:
        return None
    return None


def check_all(piece: PieceShape, n: int, construct: bool = True) -> Verdict:
    """Run every rule; the first Impossible wins.  Otherwise try a registered
    construction and return Possible only with a verified witness."""
    v = check_rules(piece, n)
    if v.impossible or not construct:
        return v
    built = _construct(piece, n)
    if built is None:
        if n <= SEARCH_DIM and piece.kind in ("path", "cycle", "tree", "subcube"):
            from .cube import make_hypercube
            from .search import SearchConfig, find_decomposition

            res = find_decomposition(make_hypercube(n), piece, SearchConfig(symmetry=False))
            if res.status != UNKNOWN:
                return Verdict(res.status, "exhaustive search", res.reason, res.witness)
        return v
    rule, witness = built
    report = witness.verify()
    if not report.ok:
        return _unknown(f"construction {rule!r} did not verify")
    return Verdict(POSSIBLE, rule, f"{len(witness)} verified pieces", witness)
