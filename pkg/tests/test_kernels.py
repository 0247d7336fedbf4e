import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdecomp import _kernels_py as pure
from qdecomp import kernels
from qdecomp.automorphism import Automorphism, apply_edge
from qdecomp.cube import Edge, make_hypercube

compiled = pytest.importorskip("qdecomp._kernels")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_encode_is_a_bijection(n):
    q = make_hypercube(n)
    ids = [pure.encode_edge(e.low, e.dir, n) for e in q.edge_list]
    assert sorted(ids) == list(range(q.num_edges))
    for e, i in zip(q.edge_list, ids):
        assert pure.decode_edge(i, n) == (e.low, e.dir)
        assert compiled.encode_edge(e.low, e.dir, n) == i
        assert compiled.decode_edge(i, n) == (e.low, e.dir)
    lows = np.array([e.low for e in q.edge_list])
    dirs = np.array([e.dir for e in q.edge_list])
    assert list(pure.encode_edges(lows, dirs, n)) == ids


@given(st.integers(1, 10), st.data())
def test_walk_ids_parity(n, data):
    dirs = data.draw(st.lists(st.integers(1, n), max_size=40))
    start = data.draw(st.integers(0, (1 << n) - 1))
    v1, i1 = pure.walk_ids(start, dirs, n)
    v2, i2 = compiled.walk_ids(start, dirs, n)
    assert np.array_equal(v1, v2) and np.array_equal(i1, i2)


@given(st.integers(1, 10), st.data())
def test_translate_ids_parity_and_reference(n, data):
    perm = tuple(data.draw(st.permutations(range(1, n + 1))))
    comp = data.draw(st.integers(0, (1 << n) - 1))
    ids = np.array(data.draw(st.lists(st.integers(0, n * 2 ** (n - 1) - 1), max_size=30)), dtype=np.int64)
    a = pure.translate_ids(ids, n, comp, np.array(perm))
    b = compiled.translate_ids(ids, n, comp, np.array(perm))
    assert np.array_equal(a, b)
    f = Automorphism(n, comp, perm)
    for i, j in zip(ids, a):
        assert pure.encode_edge(*apply_edge(f, Edge(*pure.decode_edge(int(i), n))), n) == j


def test_cover_counts_parity():
    ids = np.array([0, 3, 3, 5])
    assert list(pure.cover_counts(ids, 6)) == list(compiled.cover_counts(ids, 6)) == [1, 0, 0, 2, 0, 1]
    for mod in (pure, compiled):
        with pytest.raises(ValueError):
            mod.cover_counts(np.array([6]), 6)
    assert list(compiled.vertex_counts(np.array([1, 1]), 3)) == [0, 2, 0]


def test_orbit_hamiltonian_parity():
    from qdecomp.search import SearchConfig, find_hamiltonian_decomposition

    import os
    import subprocess
    import sys

    fast = find_hamiltonian_decomposition(6, SearchConfig())
    code = ("from qdecomp.search import find_hamiltonian_decomposition as f;"
            "print(f(6)[0].dirs)")
    env = dict(os.environ, QDECOMP_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(fast[0].dirs)
