"""Backend selection for the modular kernels.

The compiled extension is used when it imports and the environment variable
``USEQ_PURE_PYTHON`` is unset; otherwise the pure-Python module is used.
Both expose ``inv_power_sum`` and ``u_residues`` with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

_C_MAX_MODULUS = 1 << 32

if os.environ.get("USEQ_PURE_PYTHON"):
    _impl = None
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = None

BACKEND = "cython" if _impl is not None else "python"


def inv_power_sum(start: int, stop: int, step: int, k: int, m: int, alternate: bool = False) -> int:
    if _impl is not None and 1 < m < _C_MAX_MODULUS and stop < _C_MAX_MODULUS:
        return _impl.inv_power_sum(start, stop, step, k, m, alternate)
    return _pykernels.inv_power_sum(start, stop, step, k, m, alternate)


def u_residues(nmax: int, m: int) -> list[int]:
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if _impl is not None and 1 < m < _C_MAX_MODULUS:
        return _impl.u_residues(nmax, m)
    return _pykernels.u_residues(nmax, m)
