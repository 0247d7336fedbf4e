import pytest

from oracles import cube_edges, is_hamiltonian_cycle, is_partition
from qdecomp.cube import make_cycle_graph, make_hypercube
from qdecomp.obstructions import IMPOSSIBLE, POSSIBLE, UNKNOWN, check_all
from qdecomp.search import SearchConfig, certify_negative, find_decomposition, find_hamiltonian_decomposition, placements
from qdecomp.verify import Cycle, Path, Subcube, Tree, parse_shape

Q3 = make_hypercube(3)


def test_q3_path_spectrum():
    found = {k for k in range(1, 7) if find_decomposition(Q3, Path(k)).status == POSSIBLE}
    assert found == {1, 2, 3}


def test_certify_negative():
    results = dict(certify_negative())
    assert set(results) == {"Q3 / P4", "Q3 / P6", "Q3 / 4-star"}
    assert all(v.status == IMPOSSIBLE for v in results.values())
    assert "no placement" in results["Q3 / 4-star"].reason


def test_example_tree_is_found():
    v = find_decomposition(Q3, Tree([(0, 1), (0, 2), (0, 3), (3, 4)]))
    assert v.status == POSSIBLE
    assert is_partition(cube_edges(3), v.witness.pieces)


def test_placement_counts():
    # 12 edges; 2-paths = sum over vertices of C(3,2) = 24; 4-cycles = 6 faces
    assert len(placements(Q3, Path(1))) == 12
    assert len(placements(Q3, Path(2))) == 24
    assert len(placements(Q3, Cycle(4))) == 6
    assert len(placements(Q3, Subcube(3))) == 1
    assert len(placements(Q3, Cycle(6))) == 16


@pytest.mark.parametrize("symmetry", [True, False])
def test_pruning_does_not_change_answers(symmetry):
    q4 = make_hypercube(4)
    cfg = SearchConfig(symmetry=symmetry)
    for piece in (Path(4), Cycle(8), Path(6), Subcube(2)):
        v = find_decomposition(q4, piece, cfg)
        assert v.status == check_all(piece, 4).status


def test_agrees_with_obstructions_on_small_pieces():
    q4 = make_hypercube(4)
    shapes = [Path(k) for k in range(1, 7)] + [Cycle(k) for k in (4, 6)] + [
        Tree([(0, 1), (0, 2), (0, 3)]), Tree([(0, 1), (0, 2), (0, 3), (0, 4)])]
    for host, n in ((Q3, 3), (q4, 4)):
        for s in shapes:
            a = find_decomposition(host, s, SearchConfig(budget=200_000))
            b = check_all(s, n)
            assert {a.status, b.status} != {POSSIBLE, IMPOSSIBLE}, (s, n, a, b)


def test_budget_gives_unknown():
    v = find_decomposition(make_hypercube(4), Path(8), SearchConfig(budget=3))
    assert v.status == UNKNOWN


def test_deterministic():
    a = find_decomposition(make_hypercube(4), Path(4))
    b = find_decomposition(make_hypercube(4), Path(4))
    assert a.witness.pieces == b.witness.pieces


def test_generic_host():
    v = find_decomposition(make_cycle_graph(12), Path(3))
    assert v.status == POSSIBLE and len(v.witness) == 4
    assert find_decomposition(make_cycle_graph(12), Path(5)).status == IMPOSSIBLE


def test_any_shape_rejected():
    with pytest.raises(ValueError):
        find_decomposition(Q3, parse_shape("any"))


@pytest.mark.parametrize("n,count", [(2, 1), (4, 2), (6, 3)])
def test_hamiltonian_decomposition(n, count):
    cycles = find_hamiltonian_decomposition(n)
    assert len(cycles) == count
    assert all(is_hamiltonian_cycle(n, c.edges()) for c in cycles)
    assert is_partition(cube_edges(n), [c.edges() for c in cycles])


def test_hamiltonian_budget_and_range():
    assert find_hamiltonian_decomposition(6, SearchConfig(budget=5)) is None
    with pytest.raises(ValueError):
        find_hamiltonian_decomposition(8)
