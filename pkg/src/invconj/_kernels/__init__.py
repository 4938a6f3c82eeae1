"""Hot scans, compiled when available.

The Cython module ``_ckernels`` is preferred; ``_pykernels`` is the fallback.
Set ``INVCONJ_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("INVCONJ_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

assoc_violations = _impl.assoc_violations
conjugators = _impl.conjugators
conjugacy_matrix = _impl.conjugacy_matrix
n_conjugacy_matrix = _impl.n_conjugacy_matrix
chart_conjugators = _impl.chart_conjugators

__all__ = [
    "BACKEND",
    "assoc_violations",
    "conjugators",
    "conjugacy_matrix",
    "n_conjugacy_matrix",
    "chart_conjugators",
]
