import pytest

from oracles import as_pairs, cube_edges, is_hamiltonian_cycle, is_partition, shape_of
from qdecomp.automorphism import compose, half_swap_automorphism, product_automorphism
from qdecomp.constructions import combine, fundamental
from qdecomp.constructions.fundamental import (
    DirectionCycle,
    double_run_cycle,
    fundamental_hamiltonian_pow2,
    hamiltonian_decomposition_pow2,
    ringel_double,
    ringel_rows,
    tree_fundamental_decomposition,
)
from qdecomp.cube import make_hypercube
from qdecomp.trees import LabeledTree, enumerate_trees
from qdecomp.verify import ConstructionError, Decomposition, Path, Subcube, verify_partition


def cross_product_pairs(c):
    """E(C x C) in Q_2n, built straight from the definition."""
    n = c.dim
    verts = [int(v) for v in c.vertices()]
    if verts[0] == verts[-1]:
        verts.pop()
    on_cycle = {frozenset((verts[i], verts[(i + 1) % len(verts)])) for i in range(len(verts))}
    out = set()
    for a, b in map(tuple, on_cycle):
        for y in verts:
            out.add(frozenset((a | y << n, b | y << n)))
            out.add(frozenset((y | a << n, y | b << n)))
    return out


def test_ringel_rows_base_case():
    phi, gamma = ringel_rows(DirectionCycle(2, (1, 2, 1, 2)))
    assert phi == [1, 2, 1, 3, 2, 1, 2, 4, 1, 2, 1, 3, 2, 1, 2, 4]
    assert gamma == [3, 4, 3, 1, 4, 3, 4, 2, 3, 4, 3, 1, 4, 3, 4, 2]


@pytest.mark.parametrize("k", [1, 2])
def test_ringel_doubling_every_input_cycle(k):
    for c in hamiltonian_decomposition_pow2(k):
        phi, gamma = ringel_double(c)
        p, g = set(as_pairs(phi.edges())), set(as_pairs(gamma.edges()))
        assert is_hamiltonian_cycle(2 * c.dim, phi.edges()) and is_hamiltonian_cycle(2 * c.dim, gamma.edges())
        assert not p & g
        assert p | g == cross_product_pairs(c)


def test_ringel_rejects_non_hamiltonian():
    c = DirectionCycle(3, (1, 2, 1, 2))
    with pytest.raises(ValueError):
        ringel_double(c)


@pytest.mark.parametrize("k,count", [(1, 1), (2, 2), (3, 4)])
def test_hamiltonian_decomposition(k, count):
    n = 1 << k
    cycles = hamiltonian_decomposition_pow2(k)
    assert len(cycles) == count
    assert all(is_hamiltonian_cycle(n, c.edges()) for c in cycles)
    assert is_partition(cube_edges(n), [c.edges() for c in cycles])


def test_direction_cycle_validation():
    with pytest.raises(ValueError):
        DirectionCycle(3, (1, 2, 3))
    with pytest.raises(ValueError):
        DirectionCycle(3, (1, 1, 2, 2))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fundamental_hamiltonian(k):
    cycle, group = fundamental_hamiltonian_pow2(k)
    assert group.order == 2 ** (k - 1) and group.is_group()
    translates = [cycle.translate(f).edges() for f in group.elements]
    assert is_partition(cube_edges(1 << k), translates)


def test_fundamental_group_shape():
    # H = {(f, f)} u {swap . (f, f)} over the previous level's group
    _, g2 = fundamental_hamiltonian_pow2(2)
    _, g3 = fundamental_hamiltonian_pow2(3)
    swap = half_swap_automorphism(4)
    expected = {product_automorphism(f, f) for f in g2.elements}
    expected |= {compose(swap, f) for f in expected}
    assert set(g3.elements) == expected


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_double_run_cycle(n):
    cycle, group, d = double_run_cycle(n)
    assert group.order == 2 ** (n - 2)
    assert len(d) == 2 ** (n - 2)
    assert is_partition(cube_edges(n), d.pieces)
    assert all(shape_of(p) == ("cycle", 2 * n) for p in d.pieces)


@pytest.mark.parametrize("n", [3, 5])
def test_double_run_cycle_odd_rejected(n):
    with pytest.raises(ValueError):
        double_run_cycle(n)


@pytest.mark.parametrize("k", range(1, 6))
def test_trees_fundamental(k):
    for edges in enumerate_trees(k):
        base, group, d = tree_fundamental_decomposition(LabeledTree.bfs_labelled(edges, 0))
        assert group.order == max(1, 2 ** (k - 1))
        assert is_partition(cube_edges(k), d.pieces)


def test_any_root_and_labelling():
    # root in the middle of a path, labels out of BFS order
    t = LabeledTree(((0, 1, 3), (1, 2, 1), (2, 3, 2)), 1)
    _, _, d = tree_fundamental_decomposition(t)
    assert is_partition(cube_edges(3), d.pieces)


@pytest.mark.parametrize("k,n,count", [(1, 3, 12), (2, 4, 8), (2, 6, 48), (3, 6, 16), (1, 8, 1024), (4, 8, 32)])
def test_subcube_decomposition(k, n, count):
    d = combine.subcube_decomposition(k, n)
    assert len(d) == count
    assert is_partition(cube_edges(n), d.pieces)


def test_subcube_needs_divisor():
    with pytest.raises(ValueError):
        combine.subcube_decomposition(3, 4)


def test_product_combine_q2_q4_q2():
    d = combine.product_combine(combine.subcube_decomposition(2, 4), combine.subcube_decomposition(2, 2))
    q = combine.to_hypercube(d)
    assert len(q) == 48 and q.shape == Subcube(2)
    assert is_partition(cube_edges(6), q.pieces)


def test_product_combine_rejects_bad_input():
    good = combine.subcube_decomposition(1, 2)
    bad = Decomposition(good.host, good.pieces[:1], good.shape)
    with pytest.raises(ConstructionError):
        combine.product_combine(bad, good)
    with pytest.raises(ValueError):
        combine.product_combine(good, combine.subcube_decomposition(2, 2))


@pytest.mark.parametrize("q", [1, 2, 4, 8])
def test_cycle_into_paths(q):
    c = hamiltonian_decomposition_pow2(2)[0]
    arcs = combine.cycle_into_paths(c, q)
    assert len(arcs) == 16 // q
    assert all(shape_of(a) == ("path", q) for a in arcs)
    assert is_partition(set(as_pairs(c.edges())), arcs)
    # also from a bare edge set
    assert len(combine.cycle_into_paths(c.edges(), q)) == 16 // q


def test_cycle_into_paths_rejects():
    c = hamiltonian_decomposition_pow2(1)[0]
    with pytest.raises(ValueError):
        combine.cycle_into_paths(c, 3)
    with pytest.raises(ValueError):
        combine.cycle_into_paths(c, 4)


@pytest.mark.parametrize("m,n,count", [(2, 2, 1), (2, 4, 8), (4, 4, 2), (4, 8, 64), (2, 8, 256)])
def test_m_cycle(m, n, count):
    d = combine.m_cycle_divides_qn(m, n)
    assert len(d) == count
    assert all(shape_of(p) == ("cycle", 2 ** m) for p in d.pieces)
    assert is_partition(cube_edges(n), d.pieces)


@pytest.mark.parametrize("j,n", [(0, 2), (1, 4), (2, 4), (3, 4), (2, 6), (5, 6), (3, 8)])
def test_p2j(j, n):
    d = combine.p2j_divides_qn(j, n)
    assert len(d) == n * 2 ** (n - 1) // 2 ** j
    assert all(shape_of(p) == ("path", 2 ** j) for p in d.pieces)
    assert verify_partition(d).ok


def test_hamiltonian_cycles_unknown():
    with pytest.raises(combine.UnknownConstructive):
        combine.hamiltonian_cycles(10)


@pytest.mark.parametrize("k,n", [(1, 2), (2, 4), (3, 6)])
def test_tree_divides_qn(k, n):
    for edges in enumerate_trees(k):
        d = combine.tree_divides_qn(LabeledTree.bfs_labelled(edges, 0), n)
        assert is_partition(cube_edges(n), d.pieces)


def test_refine_maps_pieces_into_subcubes():
    outer = combine.subcube_decomposition(2, 4)
    inner = combine.cycle_into_paths(hamiltonian_decomposition_pow2(1)[0], 2)
    inner_d = Decomposition(make_hypercube(2), tuple(inner), Path(2)).checked()
    d = combine.refine(outer, inner_d)
    assert len(d) == 16 and is_partition(cube_edges(4), d.pieces)


def test_fundamental_module_has_checks():
    # every public builder self-verifies; a broken group must raise
    from qdecomp.automorphism import even_complement_subgroup
    from qdecomp.verify import verify_fundamental

    base = fundamental.embed_labeled_tree(LabeledTree.bfs_labelled([(0, 1), (1, 2)], 0), 3)
    assert not verify_fundamental(base, even_complement_subgroup(3)).ok
