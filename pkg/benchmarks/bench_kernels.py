"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from qdecomp import _kernels_py

try:
    from qdecomp import _kernels
except ImportError:
    _kernels = None


def _orbit_inputs():
    from qdecomp.automorphism import Automorphism, apply_edge, compose
    from qdecomp.cube import make_hypercube

    n = 6
    rot = Automorphism(n, 0, (3, 4, 5, 6, 1, 2))
    powers = [Automorphism.identity(n), rot, compose(rot, rot)]
    orbit = np.full(n << n, -1, dtype=np.int64)
    low, dirs, k = [], [], 0
    for e in make_hypercube(n).edge_list:
        if orbit[e.low * n + e.dir - 1] >= 0:
            continue
        for f in powers:
            img = apply_edge(f, e)
            orbit[img.low * n + img.dir - 1] = orbit[img.high * n + img.dir - 1] = k
            low.append(img.low)
            dirs.append(img.dir)
        k += 1
    return n, orbit, np.array(low), np.array(dirs)


def cases(mod):
    n = 16
    rng = np.random.default_rng(0)
    dirs = rng.integers(1, n + 1, size=200_000)
    ids = rng.integers(0, n << (n - 1), size=200_000)
    perm = np.array(rng.permutation(n) + 1)
    orb = _orbit_inputs()
    return {
        "walk_ids (200k steps, Q_16)": lambda: mod.walk_ids(0, dirs, n),
        "translate_ids (200k ids, Q_16)": lambda: mod.translate_ids(ids, n, 0b1011, perm),
        "cover_counts (200k ids)": lambda: mod.cover_counts(ids, n << (n - 1)),
        "orbit_hamiltonian (Q_6)": lambda: mod.orbit_hamiltonian(*orb, 10**6),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    results = {}
    for name, mod in backends:
        for label, fn in cases(mod).items():
            results.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'kernel':<34}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for label, t in results.items():
        py, cy = t["python"] * 1e3, t.get("cython")
        if cy is None:
            print(f"{label:<34}{py:>14.2f}{'n/a':>14}{'':>10}")
        else:
            print(f"{label:<34}{py:>14.2f}{cy * 1e3:>14.2f}{py / (cy * 1e3):>9.1f}x")


if __name__ == "__main__":
    main()
