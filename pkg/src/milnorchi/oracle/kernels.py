"""Pick the compiled kernels if available, else the pure-Python twin.

Set ``MILNORCHI_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("MILNORCHI_PURE") == "1":
    from . import _kernels_py as backend

    BACKEND = "python"
else:
    try:
        from . import _kernels as backend

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _kernels_py as backend

        BACKEND = "python"

encode = backend.encode
conjugate_keys = backend.conjugate_keys
commutes = backend.commutes
multiply_keys = backend.multiply_keys
regular_spectra = backend.regular_spectra

__all__ = ["BACKEND", "commutes", "conjugate_keys", "encode", "multiply_keys", "regular_spectra"]
