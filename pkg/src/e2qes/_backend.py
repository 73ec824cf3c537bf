"""Picks the compiled Hessenberg QR kernel when it imports, else the Python one.

Set ``E2QES_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

if os.environ.get("E2QES_PURE_PYTHON") == "1":
    from . import _hqr_py as _impl
else:
    try:
        from . import _hqr_ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _hqr_py as _impl

BACKEND: str = _impl.BACKEND
hessenberg_eigvals = _impl.hessenberg_eigvals
