"""Smooth and rough number counting (Psi and Theta) and the Dickman density
function rho, solved from its delay differential equation.
"""

from __future__ import annotations

import math

import numpy as np

from .arith import sieve_primes

__all__ = ["psi_count", "theta_count", "dickman_rho"]

_MAX_X = 10**8

_lpf_cache: dict[int, np.ndarray] = {}
_spf_cache: dict[int, np.ndarray] = {}


def _largest_prime_factor_table(x: int) -> np.ndarray:
    for cap, arr in _lpf_cache.items():
        if cap >= x:
            return arr
    lpf = np.zeros(x + 1, dtype=np.int64)
    for p in sieve_primes(x):
        lpf[p::p] = p
    _lpf_cache.clear()
    _lpf_cache[x] = lpf
    return lpf


def _smallest_prime_factor_table(x: int) -> np.ndarray:
    for cap, arr in _spf_cache.items():
        if cap >= x:
            return arr
    spf = np.zeros(x + 1, dtype=np.int64)
    for p in sieve_primes(x):
        sl = spf[p::p]
        sl[sl == 0] = p
    _spf_cache.clear()
    _spf_cache[x] = spf
    return spf


def psi_count(x: int, y: int) -> int:
    """#{n <= x : largest prime factor of n <= y}; n=1 counts (empty product)."""
    if x < 1 or y < 2:
        raise ValueError("need x >= 1 and y >= 2")
    if x > _MAX_X:
        raise ValueError(f"x capped at {_MAX_X}")
    if y >= x:
        return x
    lpf = _largest_prime_factor_table(x)
    return int(np.count_nonzero(lpf[1 : x + 1] <= y))


def theta_count(x: int, y: int, z: int) -> int:
    """#{n <= x : every prime factor of n lies in [y, z]}; includes n=1."""
    if y > z:
        raise ValueError("need y <= z")
    if x < 1 or y < 2:
        raise ValueError("need x >= 1, y >= 2")
    if x > _MAX_X:
        raise ValueError(f"x capped at {_MAX_X}")
    lpf = _largest_prime_factor_table(x)[1 : x + 1]
    spf = _smallest_prime_factor_table(x)[1 : x + 1]
    ok = (lpf <= z) & ((spf >= y) | (spf == 0))
    return int(np.count_nonzero(ok))


_RHO_STEP = 1e-4
_RHO_MAX = 20.0
_rho_grid: np.ndarray | None = None


def _build_rho_grid() -> np.ndarray:
    """rho on the grid u = 0, h, 2h, ..., 20 by trapezoid integration of the
    delay equation in its integral form u*rho(u) = int_{u-1}^{u} rho(t) dt.

    Every grid value is a positively weighted average of earlier values, so
    the computed table stays strictly positive and strictly decreasing all
    the way down to rho(20) ~ 1e-29, which the differential form loses to
    roundoff once rho drops below the integrator's absolute error.
    """
    h = _RHO_STEP
    npts = int(round(_RHO_MAX / h)) + 1
    rho = np.empty(npts)
    one_idx = int(round(1.0 / h))
    rho[: one_idx + 1] = 1.0
    # sliding trapezoid of the window [u-1, u]; refreshed from scratch once
    # per unit interval so floating-point drift cannot accumulate
    window = h * (float(np.sum(rho[1:one_idx])) + 1.0)  # integral on [0, 1]
    for i in range(one_idx, npts - 1):
        u1 = (i + 1) * h
        tail = window + (h / 2.0) * rho[i] - (h / 2.0) * (
            rho[i - one_idx] + rho[i + 1 - one_idx]
        )
        # u1 * rho[i+1] = tail + (h/2) * rho[i+1]
        rho[i + 1] = tail / (u1 - h / 2.0)
        window = tail + (h / 2.0) * rho[i + 1]
        if (i + 1) % one_idx == 0:
            lo = i + 1 - one_idx
            window = h * (
                float(np.sum(rho[lo + 1 : i + 1]))
                + (rho[lo] + rho[i + 1]) / 2.0
            )
    return rho


def dickman_rho(u: float) -> float:
    """Dickman density: rho = 1 on (0,1], then the delay equation
    u rho'(u) = rho(u-1) integrated on a 1e-4 grid (linear interpolation)."""
    global _rho_grid
    if u <= 0:
        raise ValueError("u must be positive")
    if u > _RHO_MAX:
        raise ValueError(f"u capped at {_RHO_MAX}")
    if u <= 1:
        return 1.0
    if _rho_grid is None:
        _rho_grid = _build_rho_grid()
    pos = u / _RHO_STEP
    i = int(math.floor(pos))
    if i >= len(_rho_grid) - 1:
        return float(_rho_grid[-1])
    frac = pos - i
    return float(_rho_grid[i] * (1 - frac) + _rho_grid[i + 1] * frac)
