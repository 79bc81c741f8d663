"""Select the reduction kernels: compiled if available, else pure Python.

Set ``CRITINF_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("CRITINF_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import reduce_poly, spoly
else:
    try:
        from ._kernels_cy import reduce_poly, spoly

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import reduce_poly, spoly

__all__ = ["BACKEND", "reduce_poly", "spoly"]
