import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate

from trideph.errors import ContractError
from trideph.noise import (
    NoiseParams,
    correlation,
    decoherence_exponent,
    memory_kernel,
)


class TestNoiseParams:
    def test_validation(self):
        with pytest.raises(ContractError):
            NoiseParams(gamma_rate=0.0, bandwidth=1.0)
        with pytest.raises(ContractError):
            NoiseParams(gamma_rate=1.0, bandwidth=-1.0)

    def test_ratio_and_correlation_time(self):
        p = NoiseParams.from_ratio(0.1, gamma_rate=2.0)
        assert_allclose(p.bandwidth, 0.2)
        assert_allclose(p.ratio, 0.1)
        assert_allclose(p.correlation_time, 5.0)


class TestCorrelation:
    def test_zero_lag(self):
        assert_allclose(correlation(NoiseParams(1.0, 2.0), 0.0), 1.0, atol=0)

    def test_long_lag_vanishes(self):
        assert correlation(NoiseParams(1.0, 2.0), 1e4) == 0.0

    def test_point_value(self):
        assert_allclose(correlation(NoiseParams(1.0, 1.0), 1.0), 0.5 * math.exp(-1.0))

    def test_even_and_decaying(self, rng):
        p = NoiseParams(1.3, 0.7)
        lags = np.sort(rng.uniform(0, 10, size=20))
        vals = [correlation(p, dt) for dt in lags]
        assert all(correlation(p, -dt) == correlation(p, dt) for dt in lags)
        assert all(v1 >= v2 for v1, v2 in zip(vals, vals[1:]))


class TestMemoryKernel:
    def test_zero(self):
        assert memory_kernel(NoiseParams(1.0, 1.0), 0.0) == 0.0

    def test_markovian_plateau(self):
        assert_allclose(memory_kernel(NoiseParams(1.0, 1e9), 0.01), 0.5, rtol=0, atol=1e-12)

    def test_point_value(self):
        assert_allclose(memory_kernel(NoiseParams(1.0, 10.0), 0.1),
                        0.5 * (1 - math.exp(-1.0)))

    def test_monotone_bounded(self):
        p = NoiseParams(2.0, 0.5)
        ts = np.linspace(0, 30, 200)
        g = [memory_kernel(p, t) for t in ts]
        assert all(a <= b + 1e-15 for a, b in zip(g, g[1:]))
        assert g[-1] <= 1.0  # Gamma/2

    def test_negative_time_rejected(self):
        with pytest.raises(ContractError):
            memory_kernel(NoiseParams(1.0, 1.0), -0.1)

    def test_matches_quadrature_of_correlation(self):
        p = NoiseParams(1.7, 0.9)
        for t in (0.3, 1.0, 4.0):
            val, _ = integrate.quad(lambda s: correlation(p, t - s), 0.0, t)
            assert abs(val - memory_kernel(p, t)) < 1e-8


class TestDecoherenceExponent:
    def test_zero(self):
        assert decoherence_exponent(NoiseParams(1.0, 1.0), 0.0) == 0.0

    def test_point_values(self):
        assert_allclose(decoherence_exponent(NoiseParams(1.0, 10.0), 1.0),
                        0.5 * (1 + (math.exp(-10) - 1) / 10))
        assert_allclose(decoherence_exponent(NoiseParams(1.0, 0.1), 1.0),
                        0.5 * (1 + (math.exp(-0.1) - 1) / 0.1))

    def test_negative_time_rejected(self):
        with pytest.raises(ContractError):
            decoherence_exponent(NoiseParams(1.0, 1.0), -1e-9)

    def test_derivative_is_memory_kernel(self):
        p = NoiseParams(1.0, 2.0)
        h = 1e-6
        for t in (0.1, 0.7, 3.0):
            fd = (decoherence_exponent(p, t + h) - decoherence_exponent(p, t - h)) / (2 * h)
            assert abs(fd - memory_kernel(p, t)) < 1e-8

    def test_markovian_limit(self):
        p = NoiseParams.from_ratio(1e13)
        for t in (0.3, 1.0, 2.0):
            assert abs(decoherence_exponent(p, t) - 0.5 * t) < 1e-12

    def test_short_time_quadratic(self):
        p = NoiseParams(1.0, 0.5)
        t = 1e-3
        assert_allclose(decoherence_exponent(p, t), 0.25 * p.bandwidth * t**2, rtol=1e-3)

    def test_convexity(self):
        p = NoiseParams.from_ratio(0.1)
        ts = np.linspace(0, 20, 400)
        f = np.array([decoherence_exponent(p, t) for t in ts])
        assert np.all(np.diff(f, 2) >= -1e-8)

    def test_variance_identity_double_quadrature(self):
        # Var phi(t) = int_0^t int_0^t alpha(s - s') ds ds' = 2 f(t);
        # integrate over the ordered triangle (x2) to keep the integrand smooth
        p = NoiseParams(1.2, 0.8)
        for t in (0.5, 2.0):
            val, _ = integrate.dblquad(
                lambda s2, s1: correlation(p, s1 - s2), 0.0, t, 0.0, lambda s1: s1,
                epsabs=1e-10, epsrel=1e-10,
            )
            assert abs(2.0 * val - 2.0 * decoherence_exponent(p, t)) < 1e-6
