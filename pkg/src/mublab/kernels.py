"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``MUBLAB_PURE=1`` to force the pure-Python kernels (used by the
benchmark and by tests that exercise both paths).
"""
from __future__ import annotations

import os

from . import _kernels_py

_impl = _kernels_py
if os.environ.get("MUBLAB_PURE") != "1":
    try:
        from . import _accel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = "compiled" if _impl is not _kernels_py else "pure"

scale_row = _impl.scale_row
eliminate_rows = _impl.eliminate_rows
canonical_exponent_table = _impl.canonical_exponent_table
