"""Backend selection for the reachability and path-counting kernels.

The compiled extension is preferred; set ``SIMUG_PURE_PYTHON=1`` to force
the pure-Python fallback (useful for debugging and for the benchmark).
"""
import os

import numpy as np

from . import _pykernels

_compiled = None
if not os.environ.get("SIMUG_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _as_adj(adj):
    return np.ascontiguousarray(adj, dtype=np.uint8)


def _as_mask(mask):
    return np.ascontiguousarray(mask, dtype=np.uint8)


def reach_matrix(adj, backend=None):
    """Reflexive reachability closure of a dense ``[tail, head]`` adjacency matrix."""
    adj = _as_adj(adj)
    if _use_compiled(backend):
        return _compiled.reach_matrix(adj).astype(bool)
    return np.array(_pykernels.reach_matrix(adj.tolist()), dtype=bool).reshape(adj.shape)


def max_vdp(adj, sources, sinks, backend=None):
    """Maximum number of vertex-disjoint paths between two vertex masks."""
    adj = _as_adj(adj)
    sources = _as_mask(sources)
    sinks = _as_mask(sinks)
    if _use_compiled(backend):
        return int(_compiled.max_vdp(adj, sources, sinks))
    return _pykernels.max_vdp(adj.tolist(), sources.tolist(), sinks.tolist())


def _use_compiled(backend):
    if backend is None:
        return _compiled is not None
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")


def available_backends():
    return ("python", "cython") if _compiled is not None else ("python",)
