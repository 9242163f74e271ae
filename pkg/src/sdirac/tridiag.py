"""Eigenvalues of real symmetric tridiagonal matrices by Sturm bisection.

This is the one numerically hot loop in the package, so it carries a numba
``@njit`` kernel with a pure-numpy fallback (vectorized over eigenvalue
indices).  The fallback is selected automatically when numba is missing, or
explicitly by setting the environment variable ``SDIRAC_NO_NUMBA=1``.  Both
paths perform the identical sequence of IEEE operations and return
bit-identical results; ``benchmarks/bench_tridiag.py`` compares their speed.

Bisection is deterministic and tolerance-controllable: each eigenvalue is
bracketed from the global Gershgorin interval by counting, via the Sturm
pivot recurrence, how many eigenvalues lie below the midpoint, and halving
until the bracket collapses to adjacent floats (well past 1e-13 relative
accuracy).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

_ENV_OFF = os.environ.get("SDIRAC_NO_NUMBA", "").strip() not in ("", "0")
DEFAULT_BACKEND = "numba" if (_HAVE_NUMBA and not _ENV_OFF) else "numpy"

# Substitute for an exactly-zero Sturm pivot; any overflow it causes is
# benign (the count recurrence is IEEE-stable through +-inf).
_PIVOT_FLOOR = 1e-300

_MAX_BISECT_ITER = 200


def _bisect_numpy(d, bsq, lo0, hi0):
    m = d.shape[0]
    idx = np.arange(m)
    lo = np.full(m, lo0)
    hi = np.full(m, hi0)
    for _ in range(_MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        active = (mid != lo) & (mid != hi)
        if not active.any():
            break
        cnt = np.zeros(m, dtype=np.int64)
        q = d[0] - mid
        cnt += q < 0
        for i in range(1, m):
            q = np.where(q == 0.0, _PIVOT_FLOOR, q)
            q = d[i] - mid - bsq[i - 1] / q
            cnt += q < 0
        below = cnt <= idx
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    return 0.5 * (lo + hi)


if _HAVE_NUMBA:

    @njit(cache=True)
    def _bisect_numba(d, bsq, lo0, hi0):  # pragma: no cover - jitted
        m = d.shape[0]
        out = np.empty(m)
        for idx in range(m):
            lo = lo0
            hi = hi0
            for _ in range(_MAX_BISECT_ITER):
                mid = 0.5 * (lo + hi)
                if mid == lo or mid == hi:
                    break
                cnt = 0
                q = d[0] - mid
                if q < 0:
                    cnt += 1
                for i in range(1, m):
                    if q == 0.0:
                        q = _PIVOT_FLOOR
                    q = d[i] - mid - bsq[i - 1] / q
                    if q < 0:
                        cnt += 1
                if cnt <= idx:
                    lo = mid
                else:
                    hi = mid
            out[idx] = 0.5 * (lo + hi)
        return out


def sturm_count(diag, offdiag, x: float) -> int:
    """Number of eigenvalues strictly below x."""
    d = np.ascontiguousarray(diag, dtype=np.float64)
    b = np.ascontiguousarray(offdiag, dtype=np.float64)
    cnt = 0
    q = d[0] - x
    cnt += q < 0
    for i in range(1, d.shape[0]):
        if q == 0.0:
            q = _PIVOT_FLOOR
        q = d[i] - x - b[i - 1] ** 2 / q
        cnt += q < 0
    return int(cnt)


def eigvalsh_tridiagonal(diag, offdiag, backend: str | None = None) -> np.ndarray:
    """All eigenvalues, ascending, of the real symmetric tridiagonal matrix
    with the given diagonal and off-diagonal.

    backend: None for the module default (numba unless unavailable or
    disabled via SDIRAC_NO_NUMBA), or explicitly "numba" / "numpy".
    """
    d = np.ascontiguousarray(diag, dtype=np.float64)
    b = np.ascontiguousarray(offdiag, dtype=np.float64)
    if d.ndim != 1 or b.ndim != 1:
        raise ValueError("diag and offdiag must be one-dimensional")
    m = d.shape[0]
    if m == 0:
        return np.empty(0)
    if b.shape[0] != m - 1:
        raise ValueError(f"offdiag must have length {m - 1}, got {b.shape[0]}")

    radius = np.zeros(m)
    ab = np.abs(b)
    radius[:-1] += ab
    radius[1:] += ab
    lo0 = float(np.min(d - radius))
    hi0 = float(np.max(d + radius))
    bsq = b * b

    if backend is None:
        backend = DEFAULT_BACKEND
    if backend == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return _bisect_numba(d, bsq, lo0, hi0)
    if backend == "numpy":
        return _bisect_numpy(d, bsq, lo0, hi0)
    raise ValueError(f"unknown backend {backend!r}")
