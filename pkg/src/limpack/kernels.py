"""Backend selection for the search kernels.

The compiled Cython module is used when it imports and the graph fits in a
64-bit word; otherwise the pure-Python kernels run.  Set
``LIMPACK_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("LIMPACK_PURE_PYTHON"):
        raise ImportError("pure Python forced by environment")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _kernels_py}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

DEFAULT_BACKEND = "cython" if _ckernels is not None else "python"


def select(n: int, backend: str | None = None):
    """Kernel module for a graph of order ``n``."""
    if backend is not None:
        try:
            mod = BACKENDS[backend]
        except KeyError:
            raise ValueError(f"backend {backend!r} unavailable; have {sorted(BACKENDS)}") from None
        if mod.MAX_N is not None and n > mod.MAX_N:
            raise ValueError(f"{backend} backend supports n <= {mod.MAX_N}")
        return mod
    mod = BACKENDS[DEFAULT_BACKEND]
    if mod.MAX_N is not None and n > mod.MAX_N:
        return _kernels_py
    return mod
