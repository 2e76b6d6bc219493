"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
``DORTHO_PURE_PYTHON=1`` forces the pure-Python kernels (useful for the
benchmark and for environments without a compiler).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("DORTHO_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
normalize = _impl.normalize
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
poly_deriv = _impl.poly_deriv
poly_eval = _impl.poly_eval
