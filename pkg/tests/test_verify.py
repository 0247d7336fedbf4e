import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import shape_of
from qdecomp.automorphism import Automorphism, even_complement_subgroup, subgroup_closure
from qdecomp.cube import Edge, make_hypercube
from qdecomp.verify import (
    CARDINALITY,
    FOREIGN,
    MISSING,
    OVERLAP,
    WRONG_SHAPE,
    Cycle,
    Decomposition,
    Path,
    Subcube,
    Tree,
    classify_piece,
    is_subcube_piece,
    matches_shape,
    parse_shape,
    verify_fundamental,
    verify_partition,
)

Q3 = make_hypercube(3)


def matching_pieces():
    # the three perfect matchings by direction
    return [frozenset(e for e in Q3.edge_list if e.dir == d) for d in (1, 2, 3)]


def test_valid_partition():
    d = Decomposition(Q3, tuple(matching_pieces()), parse_shape("any"))
    assert verify_partition(d).ok


def test_every_failure_is_reported():
    pieces = matching_pieces()
    e = next(iter(pieces[0]))
    broken = [pieces[0] - {e}, pieces[1] | {e}, pieces[2] | {Edge(0, 4)}]
    rep = verify_partition(Decomposition(Q3, tuple(broken)))
    assert rep.reasons() == {FOREIGN}
    rep = verify_partition(Decomposition(Q3, (pieces[0], pieces[0], pieces[1])))
    assert rep.reasons() == {OVERLAP, MISSING}
    rep = verify_partition(Decomposition(Q3, tuple(pieces), Path(4)))
    assert rep.reasons() == {WRONG_SHAPE}
    assert len(rep.failures) == 3


def test_missing_edge_detected():
    q = make_hypercube(2)
    d = Decomposition(q, (frozenset([Edge(0, 1), Edge(0, 2), Edge(1, 2)]),), Path(3))
    rep = verify_partition(d)
    assert not rep.ok and MISSING in rep.reasons()


@given(st.sets(st.sampled_from(make_hypercube(4).edge_list), min_size=1, max_size=8))
def test_classify_agrees_with_networkx(edges):
    shape = classify_piece(edges)
    kind, k = shape_of(edges)
    if kind in ("path", "cycle"):
        assert (shape.kind, shape.k) == (kind, k)
    elif kind == "tree":
        assert shape.kind == "tree" and shape.k == k
    else:
        assert shape.kind in ("any", "subcube")


def test_subcube_recognition():
    q = make_hypercube(4)
    square = frozenset(e for e in q.edge_list if e.dir in (1, 3) and not e.low & 0b1010)
    assert is_subcube_piece(square, 2)
    assert matches_shape(square, Subcube(2)) and matches_shape(square, Cycle(4))
    assert not is_subcube_piece(square, 3)


def test_parse_shape_forms():
    assert parse_shape("P4") == Path(4)
    assert parse_shape("c8") == Cycle(8)
    assert parse_shape("Q2") == Subcube(2)
    assert parse_shape("tree:1-2,1-3,3-4") == parse_shape("tree:1:2,2:3,3:4")
    assert parse_shape("tree:1-2,1-3,1-4") == Tree([(0, 1), (0, 2), (0, 3)])
    for bad in ("P0", "C2", "X4", "tree:1-2,3-4"):
        with pytest.raises(ValueError):
            parse_shape(bad)


def test_fundamental_checks():
    from qdecomp.cube import Walk, walk_edges

    cycle = walk_edges(Walk(0, (1, 2, 3, 4) * 2, 4)).edges
    assert verify_fundamental(cycle, even_complement_subgroup(4, exclude_coord=4)).ok
    rep = verify_fundamental(cycle, even_complement_subgroup(4))
    assert {CARDINALITY, OVERLAP} <= rep.reasons()
    rep = verify_fundamental([Edge(0, 5)], even_complement_subgroup(3))
    assert rep.reasons() == {FOREIGN}
    shifted = subgroup_closure([Automorphism.sigma(3, [1])])
    assert MISSING in verify_fundamental(frozenset(Q3.edge_list[:3]), shifted).reasons()
