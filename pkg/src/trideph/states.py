"""GHZ-type and W-type mixed initial states with purity r.

Both families interpolate between the maximally mixed state (r=0) and a
pure maximally entangled state (r=1):

    rho(0) = (1-r)/8 * I_8 + r |psi><psi|,   psi in {GHZ, W}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import ket
from .errors import ContractError

FAMILIES = ("GHZ", "W")

GHZ_KET = (ket("111") + ket("000")) / math.sqrt(2.0)
W_KET = (ket("100") + ket("010") + ket("001")) / math.sqrt(3.0)


@dataclass(frozen=True)
class PurityMix:
    """A state family name and the purity r of the mixture."""

    family: str
    r: float

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ContractError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not 0.0 <= self.r <= 1.0:
            raise ContractError(f"purity must lie in [0, 1], got {self.r}")


def make_state(mix: PurityMix) -> np.ndarray:
    """8x8 density matrix of the requested purity mixture."""
    psi = GHZ_KET if mix.family == "GHZ" else W_KET
    rho = (1.0 - mix.r) / 8.0 * np.eye(8, dtype=complex)
    rho += mix.r * np.outer(psi, psi.conj())
    return rho


def ghz_state(r: float) -> np.ndarray:
    """GHZ-type mixture of purity r."""
    return make_state(PurityMix("GHZ", r))


def w_state(r: float) -> np.ndarray:
    """W-type mixture of purity r."""
    return make_state(PurityMix("W", r))
