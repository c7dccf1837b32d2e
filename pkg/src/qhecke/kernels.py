"""Kernel selection: compiled extension if built, else pure Python.

Set QHECKE_PURE=1 in the environment to force the pure-Python kernels
(used by the benchmark to compare both backends).
"""

import os

if os.environ.get("QHECKE_PURE") == "1":
    from . import _kernels as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels as _impl

BACKEND = _impl.BACKEND
conv_trunc = _impl.conv_trunc
inv_unit = _impl.inv_unit
mul_linear = _impl.mul_linear
div_linear = _impl.div_linear
