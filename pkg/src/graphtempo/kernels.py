"""Kernel backend selection: compiled extension when available, pure
Python otherwise. Set GRAPHTEMPO_PURE_PYTHON=1 to force the fallback."""

from __future__ import annotations

import os

from . import _pure_tri

_forced_pure = os.environ.get("GRAPHTEMPO_PURE_PYTHON", "") not in ("", "0")

try:
    from . import _fast_tri  # type: ignore[attr-defined]
except ImportError:
    _fast_tri = None

if _fast_tri is not None and not _forced_pure:
    BACKEND = "compiled"
    enumerate_triangles = _fast_tri.enumerate_triangles
else:
    BACKEND = "python"
    enumerate_triangles = _pure_tri.enumerate_triangles


def backends() -> dict[str, object]:
    """All importable kernel implementations, keyed by backend name."""
    out = {"python": _pure_tri.enumerate_triangles}
    if _fast_tri is not None:
        out["compiled"] = _fast_tri.enumerate_triangles
    return out
