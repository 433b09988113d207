"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``PLUMBJSJ_PURE=1`` in the environment to force the interpreted kernels
(useful for benchmarking and for debugging the compiled module).
"""

from __future__ import annotations

import os

from plumbjsj._kernel import pure

if os.environ.get("PLUMBJSJ_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from plumbjsj._kernel import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

propagation_consistent = _impl.propagation_consistent
paths_consistent = _impl.paths_consistent
maximal_consistent_masks = _impl.maximal_consistent_masks

__all__ = [
    "BACKEND",
    "propagation_consistent",
    "paths_consistent",
    "maximal_consistent_masks",
    "pure",
]
