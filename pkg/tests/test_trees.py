import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import labelled_tree_total, nonisomorphic_tree_count, prufer_trees
from qdecomp.trees import LabeledTree, NotATree, canonical_code, code_to_edges, enumerate_trees, is_tree


@pytest.mark.parametrize("k", range(1, 8))
def test_tree_counts_against_networkx(k):
    assert len(enumerate_trees(k)) == nonisomorphic_tree_count(k)


@pytest.mark.parametrize("k", range(1, 8))
def test_tree_list_complete_by_cayley(k):
    """sum (k+1)!/|Aut T| over the list equals the (k+1)^(k-1) labelled trees."""
    assert labelled_tree_total(enumerate_trees(k)) == (k + 1) ** (k - 1)


def test_total_trees_up_to_seven_edges():
    assert sum(len(enumerate_trees(k)) for k in range(1, 8)) == 47


@pytest.mark.parametrize("m", range(2, 8))
def test_canonical_code_classes_match_prufer_classes(m):
    codes = {canonical_code(t) for t in prufer_trees(m)}
    assert len(codes) == nonisomorphic_tree_count(m - 1)


@given(st.integers(2, 9).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(0, m - 1),
                                                                           min_size=m - 2, max_size=m - 2))),
       st.randoms())
def test_canonical_code_is_invariant(data, rnd):
    m, seq = data
    tree = _decode(seq, m)
    relabel = list(range(m))
    rnd.shuffle(relabel)
    other = [(relabel[a], relabel[b]) for a, b in tree]
    assert canonical_code(tree) == canonical_code(other)
    rebuilt = code_to_edges(canonical_code(tree))
    assert nx.is_isomorphic(nx.Graph(rebuilt), nx.Graph(tree))


def _decode(seq, m):
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(m) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(m) if degree[w] == 1]
    return edges + [(u, v)]


def test_is_tree():
    assert is_tree([(0, 1), (1, 2)])
    assert not is_tree([(0, 1), (1, 2), (2, 0)])
    assert not is_tree([(0, 1), (2, 3)])


def test_labeled_tree_validation():
    t = LabeledTree.bfs_labelled([(1, 2), (1, 3), (3, 4)], 1)
    assert sorted(lab for *_, lab in t.edges) == [1, 2, 3]
    with pytest.raises(ValueError):
        LabeledTree(((1, 2, 1), (2, 3, 1)), 1)
    with pytest.raises(NotATree):
        LabeledTree(((1, 2, 1), (2, 3, 2), (3, 1, 3)), 1)
    with pytest.raises(ValueError):
        LabeledTree(((1, 2, 1),), 7)
