"""Backend selection for the Jacobi kernels.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` module. Set ``XYENTANGLE_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from . import _pycore

if os.environ.get("XYENTANGLE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pycore
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pycore
        BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh
jacobi_svals = _impl.jacobi_svals

BACKENDS = {"python": _pycore}
try:
    from . import _core
    BACKENDS["compiled"] = _core
except ImportError:
    pass
