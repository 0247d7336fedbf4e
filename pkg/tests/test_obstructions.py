import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import count_decomposable_paths_bruteforce
from qdecomp.cube import make_hypercube
from qdecomp.obstructions import (
    IMPOSSIBLE,
    POSSIBLE,
    check_all,
    check_degree_sequence,
    check_edge_count,
    check_odd_path,
    check_p2k_counting,
    check_path_odd_dim,
    check_regular_divisor,
    check_rules,
    degree_array_feasible,
)
from qdecomp.search import SearchConfig, find_decomposition
from qdecomp.verify import Cycle, Path, Subcube, Tree, parse_shape


def test_edge_count():
    assert check_edge_count(5, 3).impossible
    assert "12" in check_edge_count(5, 3).reason
    assert not check_edge_count(4, 3).impossible


def test_odd_path():
    assert check_odd_path(3, 4).impossible
    assert not check_odd_path(3, 6).impossible
    assert not check_odd_path(4, 6).impossible


@pytest.mark.parametrize("k", range(1, 21))
def test_p2k_counting_closed_form(k):
    assert check_p2k_counting(k).impossible == (2 * k + 1 < 2 ** k)


def test_p2k_counting_message():
    v = check_p2k_counting(3)
    assert v.rule == "endpoint-counting" and "112 < 128" in v.reason


def test_degree_array():
    assert degree_array_feasible(4, 3) is False
    assert degree_array_feasible(6, 3) is False
    assert degree_array_feasible(3, 3) is True
    assert degree_array_feasible(2, 3) is None  # six copies: outside the small regime
    assert check_degree_sequence(Path(4), 3).rule == "degree-array"
    assert not check_degree_sequence(Cycle(4), 3).impossible


def test_regular_divisor_and_odd_dim():
    assert check_regular_divisor(2, 7).impossible
    assert not check_regular_divisor(2, 8).impossible
    assert check_path_odd_dim(8, 7).impossible
    assert not check_path_odd_dim(4, 5).impossible


@pytest.mark.parametrize("piece,n,status,rule", [
    ("P4", 3, IMPOSSIBLE, "degree-array"),
    ("P6", 3, IMPOSSIBLE, "degree-array"),
    ("P8", 7, IMPOSSIBLE, "endpoint-counting"),
    ("Q2", 7, IMPOSSIBLE, "regular-divisor"),
    ("P5", 3, IMPOSSIBLE, "edge-count"),
    ("P3", 6, POSSIBLE, None),
    ("P4", 7, POSSIBLE, None),
    ("C4", 4, POSSIBLE, None),
    ("C16", 4, POSSIBLE, None),
    ("P2", 3, POSSIBLE, "exhaustive search"),
])
def test_check_all(piece, n, status, rule):
    v = check_all(parse_shape(piece), n)
    assert v.status == status
    if rule:
        assert v.rule == rule
    if status == POSSIBLE:
        assert v.witness is not None and v.witness.verify().ok


def test_never_possible_without_witness():
    for n in range(2, 8):
        for k in range(1, 9):
            v = check_all(Path(k), n)
            if v.status == POSSIBLE:
                assert v.witness is not None and v.witness.verify().ok
    assert check_rules(Path(4), 7).status != POSSIBLE


small_pieces = st.one_of(
    st.integers(1, 6).map(Path),
    st.integers(3, 6).map(Cycle),
    st.integers(1, 2).map(Subcube),
    st.sampled_from([Tree([(0, 1), (0, 2), (0, 3)]), Tree([(0, 1), (0, 2), (0, 3), (3, 4)]),
                     Tree([(0, 1), (0, 2), (2, 3), (2, 4)])]),
)


@given(small_pieces, st.integers(2, 3))
def test_rules_sound_against_search(piece, n):
    """An Impossible from the rules is never contradicted by exhaustive search."""
    v = check_rules(piece, n)
    if v.impossible:
        found = find_decomposition(make_hypercube(n), piece, SearchConfig(symmetry=False))
        assert found.status == IMPOSSIBLE


@pytest.mark.parametrize("k", range(1, 7))
def test_q3_paths_match_bruteforce(k):
    brute = count_decomposable_paths_bruteforce(3, k)
    assert (check_all(Path(k), 3).status == POSSIBLE) == brute
