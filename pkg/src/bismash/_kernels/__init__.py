"""Backend selection for the hot kernels.

Prefers the compiled Cython extension, falling back to the NumPy reference
implementation.  Override with BISMASH_KERNELS=py (force fallback) or
BISMASH_KERNELS=c (require the extension).
"""

from __future__ import annotations

import os

_forced = os.environ.get("BISMASH_KERNELS", "").strip().lower()

if _forced in {"py", "python", "pyref"}:
    from . import _pyref as _impl
elif _forced in {"c", "core", "cython"}:
    from . import _core as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pyref as _impl

BACKEND = _impl.NAME

rref_mod = _impl.rref_mod
table_assoc_violation = _impl.table_assoc_violation
sparse_assoc_violation = _impl.sparse_assoc_violation
conjugate_rows = _impl.conjugate_rows

__all__ = [
    "BACKEND",
    "rref_mod",
    "table_assoc_violation",
    "sparse_assoc_violation",
    "conjugate_rows",
]
