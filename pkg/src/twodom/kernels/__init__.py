"""Kernel selection: compiled extension when available, pure Python otherwise.

The environment variable TWODOM_KERNEL forces a choice ("c" or "python");
by default the compiled kernel is used when its import succeeds.  Both
kernels implement the same GreedyEngine contract and produce identical
selection sequences; see benchmarks/compare_kernels.py for the speed gap.
"""

import os

from . import pykernel


def load(name: str):
    """Fetch a kernel module by name ("c" or "python")."""
    if name == "python":
        return pykernel
    if name == "c":
        from . import _ckernel
        return _ckernel
    raise ValueError(f"unknown kernel {name!r}")


def available() -> dict:
    """Name -> module for every kernel importable in this environment."""
    out = {"python": pykernel}
    try:
        from . import _ckernel
        out["c"] = _ckernel
    except ImportError:
        pass
    return out


_forced = os.environ.get("TWODOM_KERNEL")
if _forced:
    _impl = load(_forced)
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = pykernel

GreedyEngine = _impl.GreedyEngine
IMPL = _impl.IMPL
