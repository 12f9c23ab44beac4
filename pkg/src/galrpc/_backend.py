"""Kernel selection.

The compiled module is used when it imports; otherwise the pure-Python
twin is. ``GALRPC_BACKEND=python`` forces the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE = {"python": _pykernels}
if _ckernels is not None:
    AVAILABLE["cython"] = _ckernels

kernels = _pykernels
if _ckernels is not None and os.environ.get("GALRPC_BACKEND", "").lower() != "python":
    kernels = _ckernels


def set_backend(name):
    """Switch the active kernel module; returns the previous name."""
    global kernels
    if name not in AVAILABLE:
        raise ValueError(f"backend {name!r} not available (have {sorted(AVAILABLE)})")
    previous = kernels.NAME
    kernels = AVAILABLE[name]
    return previous


def backend_name():
    return kernels.NAME
