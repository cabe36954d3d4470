"""Kernel backend selection.

The compiled `_ratcore` extension is preferred; the pure-Python module is
the fallback.  HYPLAB_PURE=1 forces the fallback (used by the benchmark
and the backend-equivalence tests).
"""

import os

from . import pure

if os.environ.get("HYPLAB_PURE"):
    _impl = pure
else:
    try:
        from . import _ratcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

reduce_frac = _impl.reduce_frac
add_frac = _impl.add_frac
mul_frac = _impl.mul_frac
sum_frac = _impl.sum_frac
dot_frac = _impl.dot_frac
scale_terms = _impl.scale_terms
merge_terms = _impl.merge_terms
accumulate_scaled = _impl.accumulate_scaled
finalize_accumulator = _impl.finalize_accumulator

__all__ = [
    "BACKEND",
    "reduce_frac",
    "add_frac",
    "mul_frac",
    "sum_frac",
    "dot_frac",
    "scale_terms",
    "merge_terms",
    "accumulate_scaled",
    "finalize_accumulator",
    "pure",
]
