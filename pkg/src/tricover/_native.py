"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
kernels. TRICOVER_PURE=1 forces the pure path regardless; the active
choice is exposed as BACKEND ("compiled" or "pure").
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

try:
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:
    _speedups = None  # type: ignore[assignment]

_FORCE_PURE = os.environ.get("TRICOVER_PURE", "") not in ("", "0")
BACKEND = "pure" if (_FORCE_PURE or _speedups is None) else "compiled"

# compiled kernels use uint64 masks and a fixed scratch budget
_MAX_N = 63
_MAX_M = 512


def _use_compiled(edge_masks: Sequence[int], n: int) -> bool:
    return BACKEND == "compiled" and n <= _MAX_N and len(edge_masks) <= _MAX_M


def min_cover(edge_masks: Sequence[int], n: int, incumbent: Sequence[int]) -> list[int]:
    if _use_compiled(edge_masks, n):
        return _speedups.min_cover(list(edge_masks), n, list(incumbent))
    return _kernels_py.min_cover(edge_masks, n, incumbent)


def max_matching(edge_masks: Sequence[int], n: int, incumbent: Sequence[int]) -> list[int]:
    if _use_compiled(edge_masks, n):
        return _speedups.max_matching(list(edge_masks), n, list(incumbent))
    return _kernels_py.max_matching(edge_masks, n, incumbent)
