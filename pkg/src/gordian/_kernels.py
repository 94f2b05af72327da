"""Loop-counting kernels behind the bracket state sum.

For an ``n``-crossing diagram every smoothing state is a bitmask; the kernel
returns an ``(n+1, n+2)`` histogram ``H[a, loops]`` counting states with
``a`` A-smoothings that close into ``loops`` circles.  Everything downstream
(Laurent assembly) happens in exact integer arithmetic outside the kernel.

Two implementations produce identical histograms: a numba-compiled walk and
a vectorized numpy fallback (pointer-doubling cycle count).  Selection order
is the ``backend`` argument, then the ``GORDIAN_BACKEND`` environment
variable (``numba`` or ``numpy``), then numba when importable.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InputError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without the extra
    njit = None
    HAS_NUMBA = False


def _hist_walk(match, pa, pb, n):
    nd = match.shape[0]
    hist = np.zeros((n + 1, n + 2), np.int64)
    stamp = np.full(nd, -1, np.int64)
    for state in range(1 << n):
        bits = state
        a = 0
        while bits:
            bits &= bits - 1
            a += 1
        loops = 0
        for d0 in range(nd):
            if stamp[d0] == state:
                continue
            loops += 1
            d = d0
            while stamp[d] != state:
                stamp[d] = state
                e = match[d]
                stamp[e] = state
                if (state >> (e >> 2)) & 1:
                    d = pa[e]
                else:
                    d = pb[e]
        hist[a, loops] += 1
    return hist


if HAS_NUMBA:
    _hist_walk_numba = njit(cache=True)(_hist_walk)


def _hist_numpy(match, pa, pb, n):
    nd = match.shape[0]
    hist = np.zeros((n + 1, n + 2), np.int64)
    idx = np.arange(nd, dtype=np.int32)
    crossing_of_match = (match >> 2).astype(np.int64)
    next_a = pa[match].astype(np.int32)
    next_b = pb[match].astype(np.int32)
    doublings = max(1, int(np.ceil(np.log2(nd))) + 1)
    chunk = 4096
    total = 1 << n
    for lo in range(0, total, chunk):
        states = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        take = ((states[:, None] >> crossing_of_match[None, :]) & 1).astype(bool)
        ptr = np.where(take, next_a[None, :], next_b[None, :])
        label = np.broadcast_to(idx, ptr.shape).copy()
        for _ in range(doublings):
            label = np.minimum(label, np.take_along_axis(label, ptr, axis=1))
            ptr = np.take_along_axis(ptr, ptr, axis=1)
        cycles = (label == idx[None, :]).sum(axis=1)
        a_counts = np.bitwise_count(states).astype(np.int64)
        np.add.at(hist, (a_counts, cycles // 2), 1)
    return hist


def backend_name(backend: str | None = None) -> str:
    """Resolve which kernel implementation will run."""
    choice = backend or os.environ.get("GORDIAN_BACKEND", "").strip() or None
    if choice is None:
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise InputError(f"unknown kernel backend {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise InputError("numba backend requested but numba is not installed")
    return choice


def loop_histogram(
    match: np.ndarray,
    pa: np.ndarray,
    pb: np.ndarray,
    n: int,
    backend: str | None = None,
) -> np.ndarray:
    """Histogram ``H[a, loops]`` over all ``2**n`` smoothing states."""
    if n < 1:
        raise InputError("loop_histogram needs at least one crossing")
    if backend_name(backend) == "numba":
        return _hist_walk_numba(match, pa, pb, n)
    return _hist_numpy(match, pa, pb, n)
