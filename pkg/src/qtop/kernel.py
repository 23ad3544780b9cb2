"""Backend selection: compiled enumeration kernel when available.

Set QTOP_KERNEL=python or QTOP_KERNEL=cython to force a backend; the
default prefers the compiled extension and falls back silently.
"""

from __future__ import annotations

import os

_forced = os.environ.get("QTOP_KERNEL", "")
if _forced not in ("", "python", "cython"):
    raise RuntimeError(f"QTOP_KERNEL must be 'python' or 'cython', got {_forced!r}")

if _forced == "python":
    from . import _pykernel as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        from . import _pykernel as _impl  # type: ignore[no-redef]

        BACKEND = "python"

MAX_N = 5

topology_masks = _impl.topology_masks
count_topology_masks = _impl.count_topology_masks
