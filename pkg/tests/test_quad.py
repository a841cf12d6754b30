"""Quadrature engine tests: gamma-kernel oracles, linearity, failure
modes, and configuration handling."""

import math

import numpy as np
import pytest

from chientropy.quad import (
    IntegrandFailure,
    NonConvergence,
    QuadConfig,
    check_log_weight_integrability,
    integrate_halfline,
)
from chientropy.specfun import gamma_log_integral, log_gamma

NU_GRID = [0.3, 1.0, 2.5, 7.0]
MU_GRID = [0.25, 1.0, 3.0]


@pytest.mark.parametrize("nu", NU_GRID)
@pytest.mark.parametrize("mu", MU_GRID)
def test_gamma_integral_oracle(nu, mu):
    # int_0^inf x^{nu-1} e^{-mu x} dx = Gamma(nu) mu^{-nu}
    res = integrate_halfline(lambda x: x ** (nu - 1.0) * math.exp(-mu * x))
    want = math.exp(log_gamma(nu) - nu * math.log(mu))
    assert res.converged
    assert res.value == pytest.approx(want, rel=1e-9)


@pytest.mark.parametrize("nu", NU_GRID)
@pytest.mark.parametrize("mu", MU_GRID)
def test_gamma_log_integral_oracle(nu, mu):
    res = integrate_halfline(
        lambda x: x ** (nu - 1.0) * math.exp(-mu * x) * math.log(x))
    assert res.converged
    assert res.value == pytest.approx(gamma_log_integral(nu, mu), rel=1e-8)


def test_linearity():
    rng = np.random.default_rng(3)
    for _ in range(10):
        p1, p2 = rng.uniform(0.5, 4.0, size=2)
        q1, q2 = rng.uniform(0.5, 3.0, size=2)
        a, b = rng.uniform(-2.0, 2.0, size=2)

        def f(x, p=p1, q=q1):
            return x ** (p - 1.0) * math.exp(-q * x)

        def g(x, p=p2, q=q2):
            return x ** (p - 1.0) * math.exp(-q * x)

        combined = integrate_halfline(lambda x: a * f(x) + b * g(x)).value
        separate = a * integrate_halfline(f).value + b * integrate_halfline(g).value
        assert combined == pytest.approx(separate, rel=1e-9, abs=1e-12)


def test_endpoint_singularity():
    # integrable singularity x^{-1/2} at the origin
    res = integrate_halfline(lambda x: math.exp(-x) / math.sqrt(x))
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-11)


def test_result_invariant_and_diagnostics():
    cfg = QuadConfig()
    res = integrate_halfline(lambda x: math.exp(-x), cfg)
    assert res.converged
    assert res.error_estimate <= max(cfg.rel_tol * abs(res.value), cfg.abs_tol)
    assert res.subdivisions_used >= 1
    assert res.value == pytest.approx(1.0, rel=1e-12)


def test_split_point_override():
    auto = integrate_halfline(lambda x: x * math.exp(-x))
    fixed = integrate_halfline(lambda x: x * math.exp(-x),
                               QuadConfig(split_point=10.0))
    assert auto.value == pytest.approx(1.0, rel=1e-10)
    assert fixed.value == pytest.approx(1.0, rel=1e-10)


def test_non_convergence_carries_best_estimate():
    # a tiny subdivision budget cannot resolve a wide noncentral
    # Shannon integrand at the default tolerance
    from chientropy.dist import NoncentralChiSq

    law = NoncentralChiSq(4.0, 40.0)

    def shannon_integrand(x):
        lp = law.log_pdf(x)
        return -math.exp(lp) * lp

    with pytest.raises(NonConvergence) as exc:
        integrate_halfline(shannon_integrand, QuadConfig(max_subdivisions=2))
    err = exc.value
    assert math.isfinite(err.value)
    assert err.error_estimate > 0.0


def test_integrand_failure_reports_point():
    def bad(x):
        return math.nan if x > 1.0 else math.exp(-x)

    with pytest.raises(IntegrandFailure) as exc:
        integrate_halfline(bad)
    assert exc.value.x > 1.0


def test_config_validation():
    with pytest.raises(ValueError):
        QuadConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadConfig(abs_tol=-1e-3)
    with pytest.raises(ValueError):
        QuadConfig(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadConfig(split_point=-2.0)


def test_check_log_weight_integrability():
    assert check_log_weight_integrability(0.5, 1.0)
    assert check_log_weight_integrability(3.0, 0.1)
    assert not check_log_weight_integrability(0.0, 1.0)
    assert not check_log_weight_integrability(-1.0, 1.0)
    assert not check_log_weight_integrability(1.0, 0.0)
    with pytest.raises(ValueError):
        check_log_weight_integrability(math.nan, 1.0)
