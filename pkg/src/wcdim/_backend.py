"""Kernel selection: the compiled extension if importable, else pure Python.

Set ``WCDIM_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from wcdim import _pure

BACKEND = "python"
if not os.environ.get("WCDIM_PURE_PYTHON"):
    try:
        from wcdim import _kernels as _impl
    except ImportError:
        _impl = _pure
    else:
        BACKEND = "cython"
else:
    _impl = _pure

maximal_independent_sets = _impl.maximal_independent_sets
canonical_bits = _impl.canonical_bits
rank_mod_p = _impl.rank_mod_p
invariant_factors = _impl.invariant_factors
