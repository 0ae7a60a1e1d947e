"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it was built; set ``ZIPF_AUDIT_PURE=1`` to
force the fallback. ``BACKEND`` names the active one.
"""
import os

from . import _pykernels as python

try:
    if os.environ.get("ZIPF_AUDIT_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

active = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

bfs_distances = active.bfs_distances
bfs_distance_totals = active.bfs_distance_totals
ba_attach = active.ba_attach

__all__ = ["BACKEND", "ba_attach", "bfs_distance_totals", "bfs_distances", "compiled", "python"]
