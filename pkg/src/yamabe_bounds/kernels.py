"""Kernel backend selection.

The compiled Cython module is used when it is importable; setting the
environment variable YAMABE_BOUNDS_PURE_PYTHON=1 forces the pure-Python
fallback.  ``BACKEND`` names the active one.
"""
import os

from . import _kernels_py

_FORCE_PURE = os.environ.get("YAMABE_BOUNDS_PURE_PYTHON", "").strip() not in ("", "0")

try:
    if _FORCE_PURE:
        raise ImportError("pure-Python kernels requested")
    from . import _kernels_c as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

sh = _impl.sh
sh_power_integral = _impl.sh_power_integral
invert_ball_volume = _impl.invert_ball_volume


def available_backends():
    """Mapping of backend name to module, for benchmarks and parity tests."""
    backends = {"python": _kernels_py}
    try:
        from . import _kernels_c
    except ImportError:
        pass
    else:
        backends["cython"] = _kernels_c
    return backends
