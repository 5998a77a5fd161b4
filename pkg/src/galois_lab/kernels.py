"""Kernel selection: the compiled extension when it is importable, the
pure-Python module otherwise. ``GALOIS_LAB_PURE=1`` forces the fallback."""

from __future__ import annotations

import os

from . import _pure_kernels

BACKEND = "python"
descent_inv_counts = _pure_kernels.descent_inv_counts

if os.environ.get("GALOIS_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        descent_inv_counts = _kernels.descent_inv_counts
        BACKEND = "cython"

__all__ = ["BACKEND", "descent_inv_counts"]
