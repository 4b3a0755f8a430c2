"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module takes over.  Setting ``E2W_PURE=1`` forces
the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_NAMES = ("all_pairs_bfs", "bfs_masked", "component_labels", "unseparated", "geodesic_scan")

if os.environ.get("E2W_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

all_pairs_bfs = _impl.all_pairs_bfs
bfs_masked = _impl.bfs_masked
component_labels = _impl.component_labels
unseparated = _impl.unseparated
geodesic_scan = _impl.geodesic_scan


def backends() -> dict[str, object]:
    """All importable backends keyed by name (for tests and benchmarks)."""
    out: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
