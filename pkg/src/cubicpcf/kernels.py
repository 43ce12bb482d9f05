"""Backend selection for the integer kernels.

The compiled extension is used when it was built; set
``CUBICPCF_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

if os.environ.get("CUBICPCF_PURE_PYTHON"):
    from ._pykernels import bisect, cf_final, cf_recurrence, poly_sign, sign_variations

    BACKEND = "python"
else:
    try:
        from ._ckernels import bisect, cf_final, cf_recurrence, poly_sign, sign_variations

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import bisect, cf_final, cf_recurrence, poly_sign, sign_variations

        BACKEND = "python"

__all__ = ["BACKEND", "bisect", "cf_final", "cf_recurrence", "poly_sign", "sign_variations"]
