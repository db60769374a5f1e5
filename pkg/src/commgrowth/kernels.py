"""Select the compiled kernels when available, else the pure-Python ones."""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("COMMGROWTH_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

symplectic_kernel_count = _impl.symplectic_kernel_count
heisenberg_tally = _impl.heisenberg_tally
pgl2_canonical_counts = _impl.pgl2_canonical_counts

__all__ = [
    "BACKEND",
    "symplectic_kernel_count",
    "heisenberg_tally",
    "pgl2_canonical_counts",
]
