"""Ornstein-Uhlenbeck noise statistics.

The environment couples to each qubit through a stationary Gaussian
frequency fluctuation with correlation (Gamma*gamma/2) exp(-gamma|t-s|).
Its time integral drives pure dephasing: the memory kernel G(t) enters the
single-qubit master equation and the decoherence exponent f(t) = int G
fixes the coherence decay exp(-f(t)).  gamma/Gamma is the Markovianity
dial: gamma/Gamma >> 1 approaches white noise, gamma/Gamma << 1 keeps a
long memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractError

#: canonical Markovianity ratios used throughout: Markovian and non-Markovian.
MARKOVIAN_RATIO = 10.0
NON_MARKOVIAN_RATIO = 0.1


def exp_decay(x: float) -> float:
    """exp(-x) for x >= 0, flushed to exactly 0 beyond x = 700."""
    return 0.0 if x > 700.0 else math.exp(-x)


@dataclass(frozen=True)
class NoiseParams:
    """Damping rate Gamma and noise bandwidth gamma (both inverse time)."""

    gamma_rate: float
    bandwidth: float

    def __post_init__(self):
        if not self.gamma_rate > 0:
            raise ContractError("gamma_rate must be positive")
        if not self.bandwidth > 0:
            raise ContractError("bandwidth must be positive")

    @classmethod
    def from_ratio(cls, ratio: float, gamma_rate: float = 1.0) -> "NoiseParams":
        """Build from the Markovianity ratio gamma/Gamma."""
        return cls(gamma_rate=gamma_rate, bandwidth=ratio * gamma_rate)

    @property
    def ratio(self) -> float:
        """Markovianity dial gamma/Gamma."""
        return self.bandwidth / self.gamma_rate

    @property
    def correlation_time(self) -> float:
        """Environment correlation time 1/gamma."""
        return 1.0 / self.bandwidth


def correlation(params: NoiseParams, dt: float) -> float:
    """Stationary noise correlation alpha(dt) = (Gamma*gamma/2) exp(-gamma|dt|)."""
    return 0.5 * params.gamma_rate * params.bandwidth * exp_decay(
        params.bandwidth * abs(dt)
    )


def memory_kernel(params: NoiseParams, t: float) -> float:
    """Time-local dephasing rate G(t) = (Gamma/2)(1 - exp(-gamma t)).

    G is the running integral of the correlation function; it starts at 0
    and saturates at Gamma/2 once t exceeds the correlation time.
    """
    if t < 0:
        raise ContractError("time must be non-negative")
    return 0.5 * params.gamma_rate * (1.0 - exp_decay(params.bandwidth * t))


def decoherence_exponent(params: NoiseParams, t: float) -> float:
    """Accumulated exponent f(t) = int_0^t G(s) ds.

    f(t) = (Gamma/2)(t + (exp(-gamma t) - 1)/gamma); single-qubit coherences
    decay as exp(-f(t)).  Quadratic in t for gamma*t << 1, asymptotically
    Gamma*t/2 in the white-noise limit.
    """
    if t < 0:
        raise ContractError("time must be non-negative")
    g = params.bandwidth
    return 0.5 * params.gamma_rate * (t + (exp_decay(g * t) - 1.0) / g)
