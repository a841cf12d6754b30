"""Special function tests: frozen high-precision references plus the
bracket, recurrence, and regime-crossover properties."""

import math

import numpy as np
import pytest
import scipy.special as sp

from chientropy.specfun import (
    BesselOrder,
    bessel_i_bounds,
    digamma,
    gamma_log_integral,
    log_bessel_i,
    log_gamma,
)
from chientropy.specfun import _log_i_series

# Reference values computed with mpmath at 40 significant digits and
# frozen here.  Columns: nu, x, log(I_nu(x)).
LOG_I_REFERENCE = [
    (0.0, 0.001, 2.499999843750017465192e-07),
    (-0.9, 0.5, -0.5085648379870769325939),
    (0.5, 1.0, -0.06435199107353179875298),
    (2.5, 10.0, 7.61505817170335168002),
    (6.0, 29.5, 26.27457271316850969613),
    (0.0, 35.0, 32.30701147548523847976),
    (3.0, 45.0, 42.07944035426941549348),
    (-0.49, 80.0, 76.89011041611238361694),
    (10.0, 150.0, 146.242253195982021571),
    (10.0, 199.9, 196.0820785401179869819),
    (22.0, 967.0, 962.3937143018915736409),
    (22.0, 968.5, 963.8933270558045351987),
    (50.0, 3000.0, 2994.66119287429254193),
    (50.0, 5001.0, 4995.57241695644126337),
    (100.0, 15000.0, 14993.93982384991567834),
    (100.0, 20001.0, 19994.87930571148689691),
    (0.0, 10000.0, 9994.475903781432301005),
    (0.5, 1000000.0, 999992.1733061878131902),
    (7.0, 100000000.0, 99999989.87072085106914),
]


@pytest.mark.parametrize("nu,x,expected", LOG_I_REFERENCE)
def test_log_bessel_i_reference(nu, x, expected):
    got = log_bessel_i(nu, x)
    if x <= 1e4:
        # accuracy contract is relative on exp(result), i.e. absolute
        # on the log value
        assert abs(math.expm1(got - expected)) <= 1e-10
    else:
        # beyond the accuracy window the log value itself is
        # representation-limited; require agreement at float64 level
        assert got == pytest.approx(expected, rel=1e-14)


def test_log_bessel_i_half_integer_closed_form():
    # I_{1/2}(x) = sqrt(2/(pi x)) sinh x, an independent route
    for x in [0.05, 0.3, 1.0, 4.0, 12.0, 28.0, 60.0, 300.0]:
        want = 0.5 * math.log(2.0 / (math.pi * x)) + x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)
        assert log_bessel_i(0.5, x) == pytest.approx(want, rel=1e-13, abs=1e-13)


def test_log_bessel_i_matches_truncated_series_below_30():
    # 200-term power series written out independently of the module
    def series(nu, x):
        z = 0.25 * x * x
        term = 1.0
        total = 1.0
        for m in range(1, 200):
            term *= z / (m * (m + nu))
            total += term
        return nu * math.log(x / 2.0) - math.lgamma(nu + 1.0) + math.log(total)

    rng = np.random.default_rng(7)
    for _ in range(150):
        nu = rng.uniform(-0.9, 20.0)
        x = rng.uniform(1e-3, 30.0)
        got = log_bessel_i(nu, x)
        assert abs(math.expm1(got - series(nu, x))) <= 1e-10


def test_log_bessel_i_vectorized_and_scalar():
    xs = np.array([0.5, 3.0, 40.0, 500.0])
    vec = log_bessel_i(1.5, xs)
    assert vec.shape == xs.shape
    for xi, vi in zip(xs, vec):
        assert vi == log_bessel_i(1.5, float(xi))


def test_log_bessel_i_at_zero():
    assert log_bessel_i(0.0, 0.0) == 0.0
    assert log_bessel_i(2.0, 0.0) == -math.inf
    with pytest.raises(ValueError):
        log_bessel_i(-0.3, 0.0)


def test_log_bessel_i_rejects_bad_order():
    with pytest.raises(ValueError):
        log_bessel_i(-1.0, 1.0)
    with pytest.raises(ValueError):
        log_bessel_i(-2.5, 1.0)


def test_bessel_order_type():
    with pytest.raises(ValueError):
        BesselOrder(-1.2)
    nu = BesselOrder(0.5)
    assert log_bessel_i(nu, 1.0) == log_bessel_i(0.5, 1.0)


@pytest.mark.parametrize("nu", [0.0, 0.7, 1.3, 3.0, 3.872, 7.0, 22.0])
def test_regime_crossover_continuity(nu):
    # at the series boundary the dispatched value must agree with the
    # series route evaluated at the same point
    x1 = 30.0
    dispatched = log_bessel_i(nu, x1)
    from_series = float(_log_i_series(nu, np.array([x1]))[0])
    assert abs(math.expm1(dispatched - from_series)) <= 1e-9
    # at the large-argument boundary compare against the scaled-Bessel
    # route evaluated directly
    x2 = max(30.0, 2.0 * nu * nu)
    if x2 > 30.0:
        dispatched = log_bessel_i(nu, x2)
        from_ive = math.log(sp.ive(nu, x2)) + x2
        assert abs(math.expm1(dispatched - from_ive)) <= 1e-9


def test_digamma_log_gamma_reference():
    assert digamma(0.5) == pytest.approx(-1.963510026021423479441, rel=1e-14)
    assert digamma(1.0) == pytest.approx(-0.5772156649015328606065, rel=1e-14)
    assert log_gamma(0.5) == pytest.approx(0.5723649429247000870717, rel=1e-14)
    assert log_gamma(1.0) == 0.0
    assert log_gamma(2.0) == 0.0


def test_digamma_recurrence():
    # psi(x+1) - psi(x) = 1/x
    xs = np.geomspace(0.1, 100.0, 64)
    err = np.abs(digamma(xs + 1.0) - digamma(xs) - 1.0 / xs)
    assert float(err.max()) <= 1e-11


def test_log_gamma_functional_equation():
    # lnGamma(x+1) - lnGamma(x) = ln x
    xs = np.geomspace(0.1, 100.0, 64)
    err = np.abs(log_gamma(xs + 1.0) - log_gamma(xs) - np.log(xs))
    assert float(err.max()) <= 1e-11


def test_digamma_log_gamma_domain():
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(ValueError):
            log_gamma(bad)
        with pytest.raises(ValueError):
            digamma(bad)


def test_bessel_bounds_examples():
    lo, hi = bessel_i_bounds(0.0, 1.0)
    assert lo == pytest.approx(1.0, rel=1e-14)
    assert hi == pytest.approx(math.e, rel=1e-14)
    lo, hi = bessel_i_bounds(0.5, 1.0)
    assert lo == pytest.approx(0.797884560802865355879892119869, rel=1e-13)
    assert hi == pytest.approx(2.16887510283845509322315462685, rel=1e-13)


def test_bessel_bounds_strict_bracket():
    rng = np.random.default_rng(11)
    for _ in range(500):
        nu = rng.uniform(-0.499, 30.0)
        x = rng.uniform(1e-3, 100.0)
        lo, hi = bessel_i_bounds(nu, x)
        val = math.exp(log_bessel_i(nu, x))
        assert lo < val < hi


def test_bessel_bounds_domain_and_overflow():
    with pytest.raises(ValueError):
        bessel_i_bounds(-0.5, 1.0)
    with pytest.raises(ValueError):
        bessel_i_bounds(-0.6, 1.0)
    # far beyond exp overflow the bounds stay finite
    lo, hi = bessel_i_bounds(0.3, 800.0)
    assert math.isfinite(lo) and math.isfinite(hi) and lo < hi


def test_gamma_log_integral_reference():
    # int_0^inf x^{nu-1} e^{-mu x} log x dx, mpmath references
    cases = [
        (1.0, 1.0, -0.5772156649015328606065),
        (2.0, 1.0, 0.4227843350984671393935),
        (1.0, 2.0, -0.6351814227307390850119),
        (0.5, 1.0, -3.480230906913262026939),
        (2.0, 2.0, -0.06759071136536954250594),
        (7.0, 0.25, 38445656.65836593292778),
    ]
    for nu, mu, want in cases:
        assert gamma_log_integral(nu, mu) == pytest.approx(want, rel=1e-13)


def test_gamma_log_integral_domain():
    for nu, mu in [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)]:
        with pytest.raises(ValueError):
            gamma_log_integral(nu, mu)
