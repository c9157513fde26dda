"""Kernel backend selection.

The compiled Cython extension is preferred when built; otherwise the
pure-Python implementations are used. HYPERFACET_PURE_PYTHON=1 forces the
fallback regardless of what is installed.
"""

import os

if os.environ.get("HYPERFACET_PURE_PYTHON") == "1":
    from . import py_kernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import py_kernels as _impl

        BACKEND = "python"

edge_components = _impl.edge_components
union_rows = _impl.union_rows
group_rows = _impl.group_rows

__all__ = ["BACKEND", "edge_components", "union_rows", "group_rows"]
