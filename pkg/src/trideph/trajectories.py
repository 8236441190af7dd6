"""Stochastic-trajectory oracle for the dephasing dynamics.

Each trajectory draws one realization of the three independent frequency
fluctuations, accumulates the random phases phi_S = int_0^t Omega_S ds and
applies the diagonal propagator exp(-i/2 sum_S phi_S sigma_z^S) to the
initial state.  Averaging the resulting projectors over many trajectories
reproduces the dephased density matrix with O(1/sqrt(n)) statistical error.

Two sampling modes are supported:

* ``ou-path``   -- simulate the Ornstein-Uhlenbeck process with its exact
  AR(1) one-step update (stationary initial condition) and integrate the
  phase with the trapezoid rule; faithful to the noise model.
* ``exact-phase`` -- draw the phases directly from their exact law,
  Gaussian with variance 2 f(t); fast validator.

Trajectory i draws from a counter-based Philox stream keyed by
(seed, i), so results are bit-identical regardless of chunking or
parallel scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import SIGMA_Z_SIGNS
from .errors import ContractError
from .linalg import require_density
from .noise import NoiseParams, decoherence_exponent

MODES = ("ou-path", "exact-phase")

#: trajectories are processed in fixed-size chunks so the reduction order
#: (and hence the floating-point result) does not depend on n_traj.
_CHUNK = 4096

#: ou-path resolution requirement: steps per correlation time.
MAX_GAMMA_DT = 0.1


@dataclass(frozen=True)
class TrajectoryConfig:
    """Ensemble size, integration step, RNG seed and sampling mode."""

    n_traj: int = 10_000
    dt: float = 1e-3
    seed: int = 0
    mode: str = "exact-phase"

    def __post_init__(self):
        if self.n_traj < 1:
            raise ContractError("n_traj must be at least 1")
        if not self.dt > 0:
            raise ContractError("dt must be positive")
        if self.mode not in MODES:
            raise ContractError(f"mode must be one of {MODES}, got {self.mode!r}")

    def validate_resolution(self, noise: NoiseParams):
        """ou-path mode must resolve the noise correlation time."""
        if self.mode == "ou-path" and noise.bandwidth * self.dt > MAX_GAMMA_DT:
            raise ContractError(
                f"ou-path requires gamma*dt <= {MAX_GAMMA_DT}, "
                f"got {noise.bandwidth * self.dt:.3g}"
            )


@dataclass(frozen=True)
class EnsembleStats:
    """Ensemble mean and per-element standard errors of the MC estimate."""

    mean: np.ndarray
    se_real: np.ndarray
    se_imag: np.ndarray
    n_traj: int


def _trajectory_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.array([seed, index], dtype=np.uint64)))


def sample_phase(noise: NoiseParams, t: float, cfg: TrajectoryConfig,
                 rng: np.random.Generator) -> tuple[float, float, float]:
    """Draw one trajectory's accumulated phases (phi_A, phi_B, phi_C).

    The three phases are independent and identically distributed; at t=0
    all are exactly zero.
    """
    if t < 0:
        raise ContractError("time must be non-negative")
    cfg.validate_resolution(noise)
    if t == 0.0:
        return (0.0, 0.0, 0.0)
    if cfg.mode == "exact-phase":
        sigma = math.sqrt(2.0 * decoherence_exponent(noise, t))
        ph = sigma * rng.standard_normal(3)
        return (float(ph[0]), float(ph[1]), float(ph[2]))
    phi = _ou_phases(noise, t, cfg, rng, 1)[0]
    return (float(phi[0]), float(phi[1]), float(phi[2]))


def _ou_steps(t: float, dt_max: float) -> tuple[int, float]:
    steps = max(1, math.ceil(t / dt_max))
    return steps, t / steps


def _ou_phases_from_draws(noise: NoiseParams, t: float, cfg: TrajectoryConfig,
                          draws: np.ndarray) -> np.ndarray:
    """Trapezoid phases from standard-normal draws of shape (n, steps+1, 3).

    Exact AR(1) update with stationary initialization Omega(0) ~
    N(0, Gamma*gamma/2); the trapezoid rule's O(dt^2) bias is the only
    discretization error.  The recursion is element-wise per trajectory, so
    batching does not change any individual result.
    """
    gam = noise.bandwidth
    steps, dt = _ou_steps(t, cfg.dt)
    decay = math.exp(-gam * dt)
    stationary_sd = math.sqrt(0.5 * noise.gamma_rate * gam)
    step_sd = stationary_sd * math.sqrt(-math.expm1(-2.0 * gam * dt))
    omega = stationary_sd * draws[:, 0, :]
    acc = np.zeros_like(omega)
    for k in range(1, steps + 1):
        omega_next = decay * omega + step_sd * draws[:, k, :]
        acc += omega + omega_next
        omega = omega_next
    return 0.5 * dt * acc


def _ou_phases(noise: NoiseParams, t: float, cfg: TrajectoryConfig,
               rng: np.random.Generator, n: int) -> np.ndarray:
    steps, _ = _ou_steps(t, cfg.dt)
    return _ou_phases_from_draws(noise, t, cfg, rng.standard_normal((n, steps + 1, 3)))


def _phase_chunk(noise: NoiseParams, t: float, cfg: TrajectoryConfig,
                 start: int, count: int) -> np.ndarray:
    """Phases for trajectories start .. start+count-1, one stream each."""
    if cfg.mode == "exact-phase":
        out = np.empty((count, 3))
        sigma = math.sqrt(2.0 * decoherence_exponent(noise, t))
        for i in range(count):
            out[i] = sigma * _trajectory_rng(cfg.seed, start + i).standard_normal(3)
        return out
    steps, _ = _ou_steps(t, cfg.dt)
    draws = np.empty((count, steps + 1, 3))
    for i in range(count):
        draws[i] = _trajectory_rng(cfg.seed, start + i).standard_normal((steps + 1, 3))
    return _ou_phases_from_draws(noise, t, cfg, draws)


def ensemble_stats(rho0: np.ndarray, noise: NoiseParams, t: float,
                   cfg: TrajectoryConfig) -> EnsembleStats:
    """Trajectory-averaged density matrix with per-element standard errors.

    Per trajectory the propagator is diagonal, so the sample is
    rho0 o (d d^dagger) with d the vector of basis-state phases; diagonal
    elements are exactly invariant and carry zero statistical error.
    """
    rho0 = require_density(rho0)
    if rho0.shape[0] != 8:
        raise ContractError("ensemble_stats expects an 8x8 state")
    if t < 0:
        raise ContractError("time must be non-negative")
    cfg.validate_resolution(noise)

    n = cfg.n_traj
    sum_x = np.zeros((8, 8), dtype=complex)
    sum_re2 = np.zeros((8, 8))
    sum_im2 = np.zeros((8, 8))
    for start in range(0, n, _CHUNK):
        count = min(_CHUNK, n - start)
        if t == 0.0:
            phases = np.zeros((count, 3))
        else:
            phases = _phase_chunk(noise, t, cfg, start, count)
        d = np.exp(-0.5j * (phases @ SIGMA_Z_SIGNS.T))          # (count, 8)
        samples = rho0[None, :, :] * (d[:, :, None] * d[:, None, :].conj())
        sum_x += samples.sum(axis=0)
        sum_re2 += (samples.real**2).sum(axis=0)
        sum_im2 += (samples.imag**2).sum(axis=0)

    mean = sum_x / n
    if n > 1:
        var_re = np.clip(sum_re2 / n - mean.real**2, 0.0, None) * n / (n - 1)
        var_im = np.clip(sum_im2 / n - mean.imag**2, 0.0, None) * n / (n - 1)
        se_re = np.sqrt(var_re / n)
        se_im = np.sqrt(var_im / n)
    else:
        se_re = np.zeros((8, 8))
        se_im = np.zeros((8, 8))
    return EnsembleStats(mean=mean, se_real=se_re, se_imag=se_im, n_traj=n)


def ensemble_density(rho0: np.ndarray, noise: NoiseParams, t: float,
                     cfg: TrajectoryConfig) -> np.ndarray:
    """Monte-Carlo estimate of the evolved density matrix."""
    return ensemble_stats(rho0, noise, t, cfg).mean
