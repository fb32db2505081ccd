"""Scan-kernel backend selection.

The compiled backend (textfract._speedups, built from the .pyx source when
Cython and a C compiler are available) is preferred; the pure-Python backend
is the fallback. Set TEXTFRACT_PURE=1 to force the pure backend, e.g. for the
parity tests or the kernel benchmark.
"""

from __future__ import annotations

import os

if os.environ.get("TEXTFRACT_PURE"):
    from . import _scan_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _scan_py as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

scan_letters = _impl.scan_letters
scan_tokens = _impl.scan_tokens
count_letters = _impl.count_letters


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND
