"""Hot-loop kernels: the compiled extension when it is built, else pure Python.

Set ``QDECOMP_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("QDECOMP_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

encode_edge = _impl.encode_edge
decode_edge = _impl.decode_edge
walk_ids = _impl.walk_ids
translate_ids = _impl.translate_ids
cover_counts = _impl.cover_counts
vertex_counts = _impl.vertex_counts
orbit_hamiltonian = _impl.orbit_hamiltonian
# vectorised numpy in both backends
encode_edges = _kernels_py.encode_edges

__all__ = [
    "BACKEND",
    "encode_edge",
    "decode_edge",
    "walk_ids",
    "translate_ids",
    "cover_counts",
    "vertex_counts",
    "orbit_hamiltonian",
    "encode_edges",
]
