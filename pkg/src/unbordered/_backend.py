"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
fallback takes over. UNBORDERED_BACKEND=python forces the fallback,
UNBORDERED_BACKEND=cython makes a missing extension an import error.
"""

import os

_requested = os.environ.get("UNBORDERED_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as kernels
elif _requested in ("cython", "compiled", "c"):
    from . import _kernels as kernels  # type: ignore[no-redef]
elif _requested:
    raise ImportError(f"unknown UNBORDERED_BACKEND value: {_requested!r}")
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND = kernels.BACKEND_NAME
