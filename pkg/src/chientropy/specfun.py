"""Log-space special functions used by the density and entropy layers.

Everything here is numerically oriented: densities of the chi-squared
family involve ``Gamma``, ``psi`` and the modified Bessel function
``I_nu``, and the entropy integrands need them evaluated in log space so
that arguments like ``x = 1e8`` or orders like ``nu = 100`` do not
overflow.  The log-Bessel evaluation switches between three regimes:

* power series for small arguments,
* the exponentially scaled library Bessel in a middle band,
* the large-argument asymptotic expansion (DLMF 10.40.1) once it is
  accurate to machine precision.

Also provided: two-sided elementary bounds on ``I_nu`` valid for
``nu > -1/2``, and the closed form of the gamma-weighted logarithmic
integral ``int_0^inf x^(nu-1) exp(-mu x) log(x) dx``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

__all__ = [
    "BesselOrder",
    "log_gamma",
    "digamma",
    "log_bessel_i",
    "bessel_i_bounds",
    "gamma_log_integral",
]

# Below this argument the power series converges to full precision in
# well under 100 terms for every admissible order.
_SERIES_MAX_X = 30.0
_SERIES_MAX_TERMS = 500

# Relative tail size at which a series is considered converged.
_TERM_EPS = 1e-17


@dataclass(frozen=True)
class BesselOrder:
    """Validated order ``nu`` of a modified Bessel function ``I_nu``.

    The power series and the asymptotic expansion are valid for any
    ``nu > -1``.  The elementary two-sided bounds additionally require
    ``nu > -1/2``; that stricter check lives in :func:`bessel_i_bounds`.
    """

    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not math.isfinite(nu) or nu <= -1.0:
            raise ValueError(f"Bessel order must satisfy nu > -1, got {self.nu}")
        object.__setattr__(self, "nu", nu)


def _order_value(nu: float | BesselOrder) -> float:
    if isinstance(nu, BesselOrder):
        return nu.nu
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise ValueError(f"Bessel order must satisfy nu > -1, got {nu}")
    return nu


def log_gamma(x):
    """log Gamma(x) for x > 0, scalar or array."""
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError("log_gamma requires finite x > 0")
    out = _sp.gammaln(arr)
    return float(out) if arr.ndim == 0 else out


def digamma(x):
    """psi(x) = d/dx log Gamma(x) for x > 0, scalar or array."""
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError("digamma requires finite x > 0")
    out = _sp.psi(arr)
    return float(out) if arr.ndim == 0 else out


def _log_i_series(nu: float, x: np.ndarray) -> np.ndarray:
    """Power series sum(m) (x/2)^(nu+2m) / (m! Gamma(nu+m+1)), in log form.

    Only called for 0 < x < _SERIES_MAX_X where the term ratio
    z / ((m+1)(m+1+nu)) with z = x^2/4 decays fast enough that the sum
    converges to full precision within the term cap.  The leading factor
    is kept in log space; the correction series itself stays well inside
    float range (it is bounded by exp(x) < exp(30)).
    """
    z = 0.25 * x * x
    lead = nu * np.log(0.5 * x) - _sp.gammaln(nu + 1.0)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for m in range(_SERIES_MAX_TERMS):
        term = term * z / ((m + 1.0) * (m + 1.0 + nu))
        total += term
        if np.all(term <= _TERM_EPS * total):
            break
    return lead + np.log(total)


def _log_i_asymptotic(nu: float, x: np.ndarray) -> np.ndarray:
    """Large-argument expansion of log I_nu(x) (DLMF 10.40.1).

    I_nu(x) ~ e^x / sqrt(2 pi x) * sum(j) (-1)^j a_j(nu) / x^j.

    Only called for x >= max(30, 2 nu^2), where the expansion parameter
    (4 nu^2) / (8 x) is at most 1/4, so terms decay superexponentially
    and the omitted e^{-2x} contribution is below 1e-26 relative.
    """
    mu4 = 4.0 * nu * nu
    term = np.ones_like(x)
    total = np.ones_like(x)
    prev = np.full_like(x, np.inf)
    for j in range(1, 60):
        term = term * -(mu4 - (2.0 * j - 1.0) ** 2) / (8.0 * j * x)
        mag = np.abs(term)
        if np.all(mag >= prev):
            break  # asymptotic tail started growing; stop at the optimum
        total += term
        prev = mag
        if np.all(mag <= _TERM_EPS * np.abs(total)):
            break
    return x - 0.5 * np.log(2.0 * np.pi * x) + np.log(total)


def _log_i_series_logspace(nu: float, x: np.ndarray) -> np.ndarray:
    """Fallback series evaluated fully in log space via logsumexp.

    Used only if the scaled library Bessel underflows (very large order
    at moderate argument).  Slow but safe: no intermediate can overflow.
    """
    out = np.empty_like(x)
    log_eps = math.log(_TERM_EPS)
    for i, xi in enumerate(x):
        lh = math.log(0.5 * xi)
        logs = []
        for m in range(20000):
            lt = (nu + 2 * m) * lh - _sp.gammaln(m + 1.0) - _sp.gammaln(nu + m + 1.0)
            logs.append(lt)
            # terms decay monotonically once m exceeds x/2; stop when negligible
            if 2 * m > xi and lt < max(logs) + log_eps:
                break
        out[i] = _sp.logsumexp(np.array(logs))
    return out


def log_bessel_i(nu: float | BesselOrder, x):
    """log I_nu(x) for nu > -1 and x >= 0, scalar or array.

    At ``x = 0`` the value is 0 for ``nu = 0`` and ``-inf`` for
    ``nu > 0``; for ``-1 < nu < 0`` the function diverges at the origin
    and ``x = 0`` is rejected.

    Accuracy target is 1e-10 relative on ``log I`` over
    ``nu in (-1, 100], x in (0, 1e8]``; in practice the three regimes
    deliver close to machine precision.
    """
    order = _order_value(nu)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr).astype(float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0):
        raise ValueError("log_bessel_i requires finite x >= 0")
    if order < 0.0 and np.any(arr == 0.0):
        raise ValueError("log_bessel_i at x = 0 requires nu >= 0")

    out = np.empty_like(arr)
    zero = arr == 0.0
    if np.any(zero):
        out[zero] = 0.0 if order == 0.0 else -np.inf

    switch = max(_SERIES_MAX_X, 2.0 * order * order)
    small = (~zero) & (arr < _SERIES_MAX_X)
    large = (~zero) & (arr >= switch)
    mid = (~zero) & ~small & ~large

    if np.any(small):
        out[small] = _log_i_series(order, arr[small])
    if np.any(large):
        out[large] = _log_i_asymptotic(order, arr[large])
    if np.any(mid):
        xm = arr[mid]
        scaled = _sp.ive(order, xm)  # e^{-x} I_nu(x), overflow free
        vals = np.empty_like(xm)
        ok = scaled > 0.0
        vals[ok] = np.log(scaled[ok]) + xm[ok]
        if np.any(~ok):
            vals[~ok] = _log_i_series_logspace(order, xm[~ok])
        out[mid] = vals

    return float(out[0]) if scalar else out


def bessel_i_bounds(nu: float | BesselOrder, x: float) -> tuple[float, float]:
    """Two-sided elementary bounds on I_nu(x) for nu > -1/2, x > 0.

    (x/2)^nu / Gamma(nu+1) < I_nu(x) < (x/2)^nu e^x / Gamma(nu+1)

    Both bounds are strict for ``x > 0``.  They are computed in log
    space and exponentiated, so the lower bound keeps full relative
    accuracy even where the density is tiny; the upper bound may
    overflow to ``inf`` for very large ``x``, which is still a valid
    upper bound.
    """
    order = _order_value(nu)
    if order <= -0.5:
        raise ValueError(f"bessel_i_bounds requires nu > -1/2, got {order}")
    xf = float(x)
    if not math.isfinite(xf) or xf <= 0.0:
        raise ValueError("bessel_i_bounds requires finite x > 0")
    log_lower = order * math.log(0.5 * xf) - _sp.gammaln(order + 1.0)
    return math.exp(log_lower), math.exp(min(log_lower + xf, 709.7))


def gamma_log_integral(nu: float, mu: float) -> float:
    """int_0^inf x^(nu-1) e^(-mu x) log(x) dx for nu > 0, mu > 0.

    Closed form: mu^(-nu) Gamma(nu) (psi(nu) - log mu).  The integral
    exists exactly under the stated parameter constraints; anything else
    is rejected.
    """
    nuf, muf = float(nu), float(mu)
    if not (math.isfinite(nuf) and nuf > 0.0):
        raise ValueError(f"gamma_log_integral requires nu > 0, got {nu}")
    if not (math.isfinite(muf) and muf > 0.0):
        raise ValueError(f"gamma_log_integral requires mu > 0, got {mu}")
    return math.exp(_sp.gammaln(nuf) - nuf * math.log(muf)) * (_sp.psi(nuf) - math.log(muf))
