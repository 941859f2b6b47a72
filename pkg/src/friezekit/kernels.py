"""Backend selection for the hot loops.

Uses the compiled ``_ckernels`` extension when it was built, otherwise the
pure-Python module. Set ``FRIEZEKIT_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
det_bareiss = _pykernels.det_bareiss
evolve_linear = _pykernels.evolve_linear

if not os.environ.get("FRIEZEKIT_PURE"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        det_bareiss = _ckernels.det_bareiss
        evolve_linear = _ckernels.evolve_linear

__all__ = ["BACKEND", "det_bareiss", "evolve_linear"]
