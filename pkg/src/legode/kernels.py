"""Kernel backend selection.

The compiled extension is preferred when present; the pure-numpy
implementation is the fallback and the reference for equivalence tests.
Set LEGODE_BACKEND=python to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LEGODE_BACKEND", "").lower() == "python":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
basis_block = _impl.basis_block
assemble_band = _impl.assemble_band

__all__ = ["BACKEND", "basis_block", "assemble_band"]
