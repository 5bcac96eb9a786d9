"""Kernel backend selection.

Set ``NEKBOUND_DISABLE_JIT=1`` before import to run the pure-numpy kernels.
The numba kernels are also skipped when numba cannot be imported.
"""

import logging
import os

from . import _kernels_numpy

log = logging.getLogger(__name__)

JIT_DISABLED = os.environ.get("NEKBOUND_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

_kernels_numba = None
if not JIT_DISABLED:
    try:
        from . import _kernels_numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        log.warning("numba unavailable; falling back to numpy kernels")

kernels = _kernels_numba if _kernels_numba is not None else _kernels_numpy
BACKEND = "numba" if _kernels_numba is not None else "numpy"


def available_backends():
    """Map backend name to kernel module, for benchmarks and cross-checks."""
    out = {"numpy": _kernels_numpy}
    if _kernels_numba is not None:
        out["numba"] = _kernels_numba
    else:
        try:
            from . import _kernels_numba as nb
        except ImportError:  # pragma: no cover
            return out
        out["numba"] = nb
    return out


def set_backend(name):
    """Swap the active kernels (``"numba"`` or ``"numpy"``); returns the previous name."""
    global kernels, BACKEND
    mods = available_backends()
    if name not in mods:
        raise ValueError(f"backend {name!r} unavailable; choose from {sorted(mods)}")
    previous = BACKEND
    kernels, BACKEND = mods[name], name
    return previous


def warmup():
    """Compile (or load from cache) every kernel of the active backend."""
    import numpy as np

    m = np.array([[2.0, 0.5], [0.5, 2.0]])
    kernels.nekrasov_sums(m)
    kernels.z_weights(m)
    kernels.forward_solve(np.tril(m), np.ones((2, 1)))
    lu, piv, _ = kernels.lu_factor(m.astype(np.complex128))
    kernels.lu_solve(lu, piv, np.eye(2, dtype=np.complex128))
    kernels.gudkov_search(m, False, np.int64(10))
    kernels.gudkov_search(m, True, np.int64(10))
