"""Execution backend selection: compiled extension with pure-python fallback.

The compiled core (``_speedups``, Cython) and the numpy fallback implement
the identical validate-and-execute contract over flat op arrays; which one
runs is decided once at import and can be overridden per call or with the
``XBARPIM_BACKEND`` environment variable ("compiled" | "python").
"""

from __future__ import annotations

import os

from . import _fallback

try:  # pragma: no cover - exercised only where the extension is built
    from . import _speedups
    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _speedups = None
    HAVE_COMPILED = False

_env = os.environ.get("XBARPIM_BACKEND", "").strip().lower()
if _env == "python":
    DEFAULT = "python"
elif _env == "compiled" and not HAVE_COMPILED:
    raise ImportError("XBARPIM_BACKEND=compiled but the extension is not built")
else:
    DEFAULT = "compiled" if HAVE_COMPILED else "python"


def active_backend() -> str:
    return DEFAULT


def run(state, ops, bptr, backend: str | None = None):
    """Dispatch a compiled program to the selected backend.

    Returns None on success or (bundle_index, reason) on the first invalid
    bundle, leaving the state as of just before that bundle.
    """
    choice = backend or DEFAULT
    topo = state.topology
    if choice == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled backend requested but not available")
        status = _speedups.run_arrays(state.cells, ops, bptr, topo.col_group, topo.row_group)
        if status[0] < 0:
            return None
        return int(status[0]), _speedups.reason_text(int(status[1]))
    if choice == "python":
        return _fallback.run_arrays(state.cells, ops, bptr, topo.col_group, topo.row_group)
    raise ValueError(f"unknown backend {choice!r}")
