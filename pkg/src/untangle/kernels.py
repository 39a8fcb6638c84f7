"""Kernel dispatch: compiled extension when available and safe, else pure Python.

The compiled crossing counter works on int64 coordinates with 128-bit
intermediates; coordinates outside +/- 2^61 (e.g. cleared-denominator Tutte
output) silently route to the big-int Python path.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _speedups

    HAVE_SPEEDUPS = True
except ImportError:  # pure install / build without a C compiler
    _speedups = None
    HAVE_SPEEDUPS = False

_COORD_LIMIT = 1 << 61


def _fits_i64(xs, ys) -> bool:
    return all(-_COORD_LIMIT < v < _COORD_LIMIT for v in xs) and all(
        -_COORD_LIMIT < v < _COORD_LIMIT for v in ys
    )


def crossing_backend(xs, ys) -> str:
    if HAVE_SPEEDUPS and _fits_i64(xs, ys):
        return "speedups"
    return "python"


def count_crossings_ints(xs, ys, eu, ev, force: str | None = None) -> int:
    """Total crossings of the integer-coordinate drawing (see _pykernels)."""
    backend = force or crossing_backend(xs, ys)
    if backend == "speedups":
        if _speedups is None:
            raise RuntimeError("compiled kernels are not available")
        return _speedups.count_crossings(xs, ys, eu, ev)
    return _pykernels.count_crossings(xs, ys, eu, ev)


def max_xyxy_free(labels, force: str | None = None) -> tuple[int, tuple[int, ...]]:
    """(max length, witness positions) over circularly-xyxy-free subsets."""
    compressed, k = _pykernels.compress_labels(labels)
    backend = force or (
        "speedups" if HAVE_SPEEDUPS and len(compressed) <= 32 and k <= 32 else "python"
    )
    if backend == "speedups":
        if _speedups is None:
            raise RuntimeError("compiled kernels are not available")
        return _speedups.max_xyxy_free(compressed)
    return _pykernels.max_xyxy_free(compressed)


# re-exported pure helpers (not performance critical)
crossing_report = _pykernels.crossing_report
crossings_involving = _pykernels.crossings_involving
linear_has_xyxy = _pykernels.linear_has_xyxy
circular_has_xyxy = _pykernels.circular_has_xyxy
