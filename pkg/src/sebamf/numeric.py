"""Small numeric helpers: extended-precision accumulation and interval math."""

from __future__ import annotations

import math

import numpy as np

# 80-bit extended on x86 Linux; falls back to float64 elsewhere, in which
# case math.fsum is used for every size.
_LONGDOUBLE_OK = np.finfo(np.longdouble).nmant >= 63

_FSUM_CUTOFF = 16384


def xsum(values) -> float:
    """Sum with at least 64-bit-mantissa accumulation.

    Exact (math.fsum) for short inputs, extended-precision pairwise
    summation for long numpy arrays.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        return 0.0
    if arr.size <= _FSUM_CUTOFF or not _LONGDOUBLE_OK:
        return math.fsum(arr.tolist())
    return float(np.sum(arr.astype(np.longdouble)))


def xdot(a, b) -> float:
    """Dot product accumulated in extended precision."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.size <= _FSUM_CUTOFF or not _LONGDOUBLE_OK:
        return math.fsum((a * b).tolist())
    return float(np.dot(a.astype(np.longdouble), b.astype(np.longdouble)))
