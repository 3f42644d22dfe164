"""Backend selection for the hot closure kernels.

Prefers the compiled extension; falls back to the pure-Python
implementation when the extension is missing or GENPLANAR_PURE=1 is
set.  Both backends are importable directly for benchmarking.
"""

from __future__ import annotations

import os

if os.environ.get("GENPLANAR_PURE") == "1":
    from . import _purekernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _purekernels as _impl

        BACKEND = "python"

closure_mask = _impl.closure_mask
generation_row_masks = _impl.generation_row_masks
