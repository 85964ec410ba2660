"""Backend selection for the hot loops.

Imports the compiled extension when it is available, otherwise the pure
Python fallback.  Set MINSHIFT_PURE=1 to force the fallback regardless;
useful for benchmarking and for debugging suspected extension bugs.
"""

import os

from . import _kernels_py

if os.environ.get("MINSHIFT_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
subword_sets = _impl.subword_sets
search_rules = _impl.search_rules
