"""Kernel backend selection.

Set REPEATSCAN_BACKEND=numpy to force the pure numpy/Python kernels, or
REPEATSCAN_BACKEND=numba to require the compiled ones.  By default numba is
used when importable and the numpy fallback otherwise.
"""

import os

_flag = os.environ.get("REPEATSCAN_BACKEND", "auto").strip().lower()

if _flag in ("", "auto"):
    try:
        from repeatscan import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        from repeatscan import _kernels_numpy as kernels

        BACKEND = "numpy"
elif _flag == "numba":
    from repeatscan import _kernels_numba as kernels

    BACKEND = "numba"
elif _flag == "numpy":
    from repeatscan import _kernels_numpy as kernels

    BACKEND = "numpy"
else:
    raise RuntimeError(
        f"REPEATSCAN_BACKEND={_flag!r} not recognized (use 'numba' or 'numpy')"
    )

__all__ = ["kernels", "BACKEND"]
