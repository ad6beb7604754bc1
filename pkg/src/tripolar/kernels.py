"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the numpy
versions are.  Setting ``TRIPOLAR_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
star_product = _kernels_py.star_product
canonical_form = _kernels_py.canonical_form

if os.environ.get("TRIPOLAR_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        star_product = _kernels.star_product
        canonical_form = _kernels.canonical_form
