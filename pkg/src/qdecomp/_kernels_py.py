"""Pure-Python/numpy versions of the hot kernels.

Edges of ``Q_n`` are addressed by a dense id in ``[0, n * 2**(n-1))``:
``id = (dir - 1) * 2**(n-1) + squeeze(low, dir)`` where ``squeeze`` drops the
(always zero) bit ``dir`` from ``low``.
"""

import numpy as np


def encode_edge(low, d, n):
    k = d - 1
    squeezed = ((low >> d) << k) | (low & ((1 << k) - 1))
    return (k << (n - 1)) | squeezed


def decode_edge(eid, n):
    half = 1 << (n - 1)
    k = eid // half
    r = eid % half
    low = ((r >> k) << (k + 1)) | (r & ((1 << k) - 1))
    return low, k + 1


def walk_ids(start, dirs, n):
    """Trace a walk; return (visited vertices, dense edge ids)."""
    dirs = np.asarray(dirs, dtype=np.int64)
    m = len(dirs)
    verts = np.empty(m + 1, dtype=np.int64)
    ids = np.empty(m, dtype=np.int64)
    x = int(start)
    verts[0] = x
    for i in range(m):
        d = int(dirs[i])
        b = 1 << (d - 1)
        ids[i] = encode_edge(x & ~b, d, n)
        x ^= b
        verts[i + 1] = x
    return verts, ids


def translate_ids(ids, n, comp, perm):
    """Image of edge ids under ``sigma_comp . rho_perm`` (perm is one-line, 1-based)."""
    ids = np.asarray(ids, dtype=np.int64)
    half = 1 << (n - 1)
    k = ids // half
    r = ids % half
    low = ((r >> k) << (k + 1)) | (r & ((1 << k) - 1))
    img = np.zeros_like(low)
    for i in range(n):
        img |= ((low >> i) & 1) << (perm[i] - 1)
    img ^= comp
    perm_arr = np.asarray(perm, dtype=np.int64)
    nk = perm_arr[k] - 1
    img &= ~(np.int64(1) << nk)
    squeezed = ((img >> (nk + 1)) << nk) | (img & ((np.int64(1) << nk) - 1))
    return (nk << (n - 1)) | squeezed


def cover_counts(ids, total):
    ids = np.asarray(ids, dtype=np.int64)
    if len(ids) and (ids.min() < 0 or ids.max() >= total):
        raise ValueError("edge id out of range")
    return np.bincount(ids, minlength=total)


def vertex_counts(verts, nverts):
    return np.bincount(np.asarray(verts, dtype=np.int64), minlength=nverts)


def encode_edges(lows, dirs, n):
    """Vectorised :func:`encode_edge` over numpy arrays."""
    lows = np.asarray(lows, dtype=np.int64)
    k = np.asarray(dirs, dtype=np.int64) - 1
    squeezed = ((lows >> (k + 1)) << k) | (lows & ((np.int64(1) << k) - 1))
    return (k << (n - 1)) | squeezed


def orbit_hamiltonian(n, orbit, mem_low, mem_dir, budget):
    """DFS for a Hamiltonian cycle from 0 using every edge orbit exactly once.

    ``orbit[v * n + d - 1]`` is the orbit id of the edge at ``v`` in direction
    ``d``; ``mem_low``/``mem_dir`` list the members of each orbit, ``sz`` per
    orbit.  Returns ``(status, dirs, nodes)``, status 1 found, 0 exhausted,
    -1 budget.
    """
    orbit = [int(x) for x in orbit]
    n_orbits = max(orbit) + 1
    sz = len(mem_low) // n_orbits
    mem = [[(int(mem_low[o * sz + j]), int(mem_dir[o * sz + j])) for j in range(sz)] for o in range(n_orbits)]
    nv = 1 << n
    visited = [False] * nv
    used = [False] * n_orbits
    dirs = [0] * nv
    visited[0] = True
    nodes = 0

    def is_open(x, end):
        return not visited[x] or x == end or x == 0

    def free_degree(v, end):
        return sum(1 for d in range(n)
                   if is_open(v ^ (1 << d), end) and not used[orbit[v * n + d]])

    def feasible(end):
        for v in range(1, nv):
            if not visited[v] and free_degree(v, end) < 2:
                return False
        if not any((not visited[1 << d] or 1 << d == end) and not used[orbit[d]] for d in range(n)):
            return False
        for o in range(n_orbits):
            if used[o]:
                continue
            if not any(is_open(a, end) and is_open(a | (1 << (d - 1)), end) for a, d in mem[o]):
                return False
        return True

    class _Budget(Exception):
        pass

    def dfs(v, depth):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if depth == nv - 1:
            if v & (v - 1) == 0:
                d = v.bit_length() - 1
                if not used[orbit[v * n + d]]:
                    dirs[depth] = d + 1
                    return True
            return False
        cands = []
        for d in range(n):
            w = v ^ (1 << d)
            if visited[w] or used[orbit[v * n + d]]:
                continue
            cands.append((free_degree(w, v), d))
        cands.sort()
        for _, d in cands:
            w = v ^ (1 << d)
            o = orbit[v * n + d]
            used[o] = True
            visited[w] = True
            dirs[depth] = d + 1
            if feasible(w) and dfs(w, depth + 1):
                return True
            visited[w] = False
            used[o] = False
        return False

    try:
        status = 1 if dfs(0, 0) else 0
    except _Budget:
        status = -1
    return status, np.asarray(dirs, dtype=np.int64), nodes
