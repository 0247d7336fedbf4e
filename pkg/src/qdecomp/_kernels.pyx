# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; same contracts as _kernels_py."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline i64 _encode(i64 low, i64 d, i64 n) nogil:
    cdef i64 k = d - 1
    cdef i64 squeezed = ((low >> d) << k) | (low & ((<i64>1 << k) - 1))
    return (k << (n - 1)) | squeezed


def encode_edge(low, d, n):
    return _encode(low, d, n)


def decode_edge(eid, n):
    cdef i64 half = <i64>1 << (n - 1)
    cdef i64 k = eid // half
    cdef i64 r = eid % half
    return ((r >> k) << (k + 1)) | (r & ((<i64>1 << k) - 1)), k + 1


def walk_ids(i64 start, dirs, i64 n):
    cdef i64[::1] dv = np.ascontiguousarray(dirs, dtype=np.int64)
    cdef Py_ssize_t m = dv.shape[0], i
    verts_arr = np.empty(m + 1, dtype=np.int64)
    ids_arr = np.empty(m, dtype=np.int64)
    cdef i64[::1] verts = verts_arr
    cdef i64[::1] ids = ids_arr
    cdef i64 x = start, d, b
    with nogil:
        verts[0] = x
        for i in range(m):
            d = dv[i]
            b = <i64>1 << (d - 1)
            ids[i] = _encode(x & ~b, d, n)
            x ^= b
            verts[i + 1] = x
    return verts_arr, ids_arr


def translate_ids(ids, i64 n, i64 comp, perm):
    cdef i64[::1] iv = np.ascontiguousarray(ids, dtype=np.int64)
    cdef i64[::1] pv = np.ascontiguousarray(perm, dtype=np.int64)
    cdef Py_ssize_t m = iv.shape[0], i, j
    cdef i64 nbytes = (n + 7) // 8, b, x
    # image of every byte value at every byte position
    table_arr = np.zeros(nbytes * 256, dtype=np.int64)
    cdef i64[::1] table = table_arr
    for b in range(nbytes):
        for x in range(256):
            for j in range(8):
                if (x >> j) & 1 and 8 * b + j < n:
                    table[b * 256 + x] |= <i64>1 << (pv[8 * b + j] - 1)
    out_arr = np.empty(m, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef i64 half = <i64>1 << (n - 1)
    cdef i64 k, r, low, img, nk
    with nogil:
        for i in range(m):
            k = iv[i] // half
            r = iv[i] % half
            low = ((r >> k) << (k + 1)) | (r & ((<i64>1 << k) - 1))
            img = 0
            for b in range(nbytes):
                img |= table[b * 256 + ((low >> (8 * b)) & 255)]
            img ^= comp
            nk = pv[k]
            out[i] = _encode(img & ~(<i64>1 << (nk - 1)), nk, n)
    return out_arr


def cover_counts(ids, i64 total):
    cdef i64[::1] iv = np.ascontiguousarray(ids, dtype=np.int64)
    cdef Py_ssize_t m = iv.shape[0], i
    out_arr = np.zeros(total, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef bint bad = False
    with nogil:
        for i in range(m):
            if iv[i] < 0 or iv[i] >= total:
                bad = True
                break
            out[iv[i]] += 1
    if bad:
        raise ValueError("edge id out of range")
    return out_arr


def vertex_counts(verts, i64 nverts):
    return cover_counts(verts, nverts)


# orbit-constrained Hamiltonian search ---------------------------------------

cdef struct HamState:
    i64 n
    i64 nv
    i64 sz
    i64 n_orbits
    i64 *orbit
    i64 *mem_low
    i64 *mem_dir
    unsigned char *visited
    unsigned char *used
    i64 *dirs
    i64 depth
    i64 nodes
    i64 budget


cdef inline bint _open(HamState *s, i64 x, i64 end) nogil:
    return (not s.visited[x]) or x == end or x == 0


cdef i64 _free_degree(HamState *s, i64 v, i64 end) nogil:
    cdef i64 d, w, cnt = 0
    for d in range(s.n):
        w = v ^ (<i64>1 << d)
        if _open(s, w, end) and not s.used[s.orbit[v * s.n + d]]:
            cnt += 1
    return cnt


cdef bint _feasible(HamState *s, i64 end) nogil:
    cdef i64 v, o, j, a, b, d, w, cnt
    for v in range(1, s.nv):
        if not s.visited[v] and _free_degree(s, v, end) < 2:
            return False
    cnt = 0
    for d in range(s.n):
        w = <i64>1 << d
        if (not s.visited[w] or w == end) and not s.used[s.orbit[d]]:
            cnt += 1
    if cnt < 1:
        return False
    for o in range(s.n_orbits):
        if s.used[o]:
            continue
        for j in range(s.sz):
            a = s.mem_low[o * s.sz + j]
            b = a | (<i64>1 << (s.mem_dir[o * s.sz + j] - 1))
            if _open(s, a, end) and _open(s, b, end):
                break
        else:
            return False
    return True


cdef int _ham_dfs(HamState *s, i64 v) nogil:
    # 1 found, 0 dead end, -1 budget
    cdef i64 d, w, o, i, j, m = 0, r, t
    cdef i64 cand[64]
    cdef i64 key[64]
    s.nodes += 1
    if s.nodes > s.budget:
        return -1
    if s.depth == s.nv - 1:
        if v & (v - 1) == 0:
            d = 0
            while (<i64>1 << d) != v:
                d += 1
            if not s.used[s.orbit[v * s.n + d]]:
                s.dirs[s.depth] = d + 1
                return 1
        return 0
    for d in range(s.n):
        w = v ^ (<i64>1 << d)
        if s.visited[w] or s.used[s.orbit[v * s.n + d]]:
            continue
        cand[m] = d
        key[m] = _free_degree(s, w, v)
        m += 1
    # insertion sort: fewest onward options first
    for i in range(1, m):
        t = cand[i]
        r = key[i]
        j = i - 1
        while j >= 0 and (key[j] > r or (key[j] == r and cand[j] > t)):
            cand[j + 1] = cand[j]
            key[j + 1] = key[j]
            j -= 1
        cand[j + 1] = t
        key[j + 1] = r
    for i in range(m):
        d = cand[i]
        w = v ^ (<i64>1 << d)
        o = s.orbit[v * s.n + d]
        s.used[o] = 1
        s.visited[w] = 1
        s.dirs[s.depth] = d + 1
        s.depth += 1
        if _feasible(s, w):
            r = _ham_dfs(s, w)
            if r != 0:
                return r
        s.depth -= 1
        s.visited[w] = 0
        s.used[o] = 0
    return 0


def orbit_hamiltonian(i64 n, orbit, mem_low, mem_dir, i64 budget):
    cdef i64[::1] ov = np.ascontiguousarray(orbit, dtype=np.int64)
    cdef i64[::1] lv = np.ascontiguousarray(mem_low, dtype=np.int64)
    cdef i64[::1] dv = np.ascontiguousarray(mem_dir, dtype=np.int64)
    cdef i64 nv = <i64>1 << n
    if n > 16:
        raise ValueError("n too large")
    n_orbits = int(np.max(orbit)) + 1
    visited = np.zeros(nv, dtype=np.uint8)
    used = np.zeros(n_orbits, dtype=np.uint8)
    dirs = np.zeros(nv, dtype=np.int64)
    cdef unsigned char[::1] vis = visited
    cdef unsigned char[::1] us = used
    cdef i64[::1] dr = dirs
    cdef HamState s
    s.n = n
    s.nv = nv
    s.n_orbits = n_orbits
    s.sz = lv.shape[0] // n_orbits
    s.orbit = &ov[0]
    s.mem_low = &lv[0]
    s.mem_dir = &dv[0]
    s.visited = &vis[0]
    s.used = &us[0]
    s.dirs = &dr[0]
    s.depth = 0
    s.nodes = 0
    s.budget = budget
    vis[0] = 1
    cdef int status
    with nogil:
        status = _ham_dfs(&s, 0)
    return status, dirs, s.nodes
