"""Kernel selection.

The compiled extension is preferred when importable; set SEAWEEDSPEC_PURE=1
to force the pure-Python twin (the benchmark and the equivalence tests use
this). Both kernels expose component_counts and spectrum_counts with
identical semantics.
"""

from __future__ import annotations

import os

if os.environ.get("SEAWEEDSPEC_PURE"):
    from . import _kernel as kernel

    IMPLEMENTATION = "pure"
else:
    try:
        from . import _speedups as kernel  # type: ignore[no-redef]

        IMPLEMENTATION = "compiled"
    except ImportError:
        from . import _kernel as kernel  # type: ignore[no-redef]

        IMPLEMENTATION = "pure"


def kernel_implementation() -> str:
    """Which kernel is active: "compiled" or "pure"."""
    return IMPLEMENTATION
