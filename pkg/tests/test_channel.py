import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from trideph.basis import index
from trideph.channel import (
    ChannelParams,
    IDENTITY_PARAMS,
    dephasing_params,
    evolve_dephasing,
    lift_three_qubit,
)
from trideph.errors import ChannelContractError, ContractError
from trideph.noise import NoiseParams, decoherence_exponent
from trideph.states import ghz_state, w_state

from conftest import (
    dephasing_kraus_oracle,
    lift_oracle,
    random_channel_params,
    random_density,
    random_pure_density,
)

# coherence decay classes: one exp(-f) factor per qubit the two basis
# states differ on
SINGLE = [(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 7), (4, 8),
          (5, 6), (5, 7), (6, 8), (7, 8)]
DOUBLE = [(1, 4), (1, 6), (1, 7), (2, 3), (2, 5), (2, 8), (3, 5), (3, 8),
          (4, 6), (4, 7), (5, 8), (6, 7)]
TRIPLE = [(1, 8), (2, 7), (3, 6), (4, 5)]


class TestDephasingParams:
    def test_identity_at_zero(self):
        p = dephasing_params(NoiseParams(1.0, 10.0), 0.0)
        assert (p.u, p.v, p.z) == (1.0, 0.0, 1.0)

    def test_point_value(self):
        p = dephasing_params(NoiseParams(1.0, 10.0), 1.0)
        assert_allclose(p.z, math.exp(-0.5 * (1 + (math.exp(-10) - 1) / 10)))

    def test_markovian_limit(self):
        p = dephasing_params(NoiseParams.from_ratio(1e13), 2.0)
        assert_allclose(p.z, math.exp(-1.0), atol=1e-12)
        assert (p.u, p.v) == (1.0, 0.0)


class TestLift:
    def test_identity_params_exact(self, rng):
        rho = random_density(rng, 8)
        out = lift_three_qubit(rho, IDENTITY_PARAMS, IDENTITY_PARAMS, IDENTITY_PARAMS)
        assert np.array_equal(out, rho)

    def test_matches_transfer_tensor_oracle(self, rng):
        for _ in range(200):
            rho = random_density(rng, 8)
            pa, pb, pc = (random_channel_params(rng) for _ in range(3))
            assert_allclose(
                lift_three_qubit(rho, pa, pb, pc),
                lift_oracle(rho, pa, pb, pc),
                atol=1e-13,
            )

    def test_matches_kraus_oracle_for_dephasing(self, rng):
        for z in (1.0, 0.8, 0.3):
            p = ChannelParams(1.0, 0.0, z)
            rho = random_density(rng, 8)
            assert_allclose(lift_three_qubit(rho, p, p, p),
                            dephasing_kraus_oracle(rho, z), atol=1e-13)

    def test_ghz_top_coherence_scales_cubically(self):
        z = 0.7
        p = ChannelParams(1.0, 0.0, z)
        out = lift_three_qubit(ghz_state(1.0), p, p, p)
        assert_allclose(out[0, 7], 0.5 * z**3, atol=1e-15)

    def test_w_diagonal_invariant(self, rng):
        rho = w_state(0.9)
        p = ChannelParams(1.0, 0.0, float(rng.uniform(0.1, 1.0)))
        out = lift_three_qubit(rho, p, p, p)
        assert_allclose(np.diag(out), np.diag(rho), atol=0)

    def test_trace_hermiticity_psd(self, rng):
        for _ in range(100):
            rho = random_pure_density(rng)
            out = lift_three_qubit(rho, *(random_channel_params(rng) for _ in range(3)))
            assert abs(np.trace(out).real - 1.0) < 1e-12
            assert np.array_equal(out, out.conj().T)
            assert np.linalg.eigvalsh(out).min() > -1e-10

    def test_invalid_params_raise(self):
        bad = ChannelParams(1.0, 0.0, 1.5)
        with pytest.raises(ChannelContractError):
            lift_three_qubit(ghz_state(1.0), bad, bad, bad)

    def test_u_v_range_validated(self):
        with pytest.raises(ContractError):
            ChannelParams(1.2, 0.0, 0.5)

    def test_non_density_input_rejected(self):
        with pytest.raises(ContractError):
            lift_three_qubit(np.eye(8, dtype=complex), IDENTITY_PARAMS,
                             IDENTITY_PARAMS, IDENTITY_PARAMS)


class TestEvolveDephasing:
    def test_time_zero_exact(self, rng):
        rho = random_density(rng, 8)
        assert np.array_equal(evolve_dephasing(rho, NoiseParams(1.0, 1.0), 0.0), rho)

    def test_ghz_half_life_markovian(self):
        # exp(-3f) = 1/2 at Gamma*t = (2/3) ln 2 in the white-noise limit
        noise = NoiseParams.from_ratio(1e13)
        t = (2.0 / 3.0) * math.log(2.0)
        out = evolve_dephasing(ghz_state(1.0), noise, t)
        assert_allclose(out[0, 7].real, 0.25, atol=1e-12)

    def test_literal_index_classes(self, rng):
        rho = random_density(rng, 8)
        noise = NoiseParams.from_ratio(0.7)
        t = 1.3
        f = decoherence_exponent(noise, t)
        out = evolve_dephasing(rho, noise, t)
        for i in range(8):
            assert out[i, i] == rho[i, i]
        for pairs, power in ((SINGLE, 1), (DOUBLE, 2), (TRIPLE, 3)):
            for i, j in pairs:
                assert_allclose(out[i - 1, j - 1], rho[i - 1, j - 1] * math.exp(-power * f),
                                atol=1e-15)

    def test_equivalent_to_lift(self, rng):
        for _ in range(200):
            rho = random_density(rng, 8)
            noise = NoiseParams.from_ratio(float(10 ** rng.uniform(-1, 1)))
            t = float(rng.uniform(0, 4))
            p = dephasing_params(noise, t)
            assert_allclose(evolve_dephasing(rho, noise, t),
                            lift_three_qubit(rho, p, p, p), atol=1e-14)

    def test_markovian_semigroup(self, rng):
        noise = NoiseParams.from_ratio(1e13)
        for _ in range(20):
            rho = random_density(rng, 8)
            t, s = rng.uniform(0.1, 1.5, size=2)
            two_step = evolve_dephasing(evolve_dephasing(rho, noise, t), noise, s)
            one_step = evolve_dephasing(rho, noise, t + s)
            assert np.max(np.abs(two_step - one_step)) <= 1e-12

    def test_non_markovian_memory_breaks_semigroup(self, rng):
        noise = NoiseParams.from_ratio(0.1)
        rho = ghz_state(1.0)
        t = s = 1.0
        two_step = evolve_dephasing(evolve_dephasing(rho, noise, t), noise, s)
        one_step = evolve_dephasing(rho, noise, t + s)
        assert np.max(np.abs(two_step - one_step)) > 1e-3

    def test_monotone_decoherence_no_revival(self, rng):
        noise = NoiseParams.from_ratio(0.1)
        rho = ghz_state(0.9)
        previous = np.inf
        for t in np.linspace(0.0, 8.0, 60):
            value = abs(evolve_dephasing(rho, noise, t)[0, 7])
            assert value <= previous + 1e-15
            previous = value

    def test_w_index_convention(self):
        # |100>, |010>, |001> sit at 1-based indices 4, 6, 7
        assert (index("100"), index("010"), index("001")) == (3, 5, 6)
