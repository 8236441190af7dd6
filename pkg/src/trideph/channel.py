"""Single-qubit dephasing parameters and the three-qubit channel lift.

A single qubit with known dynamics is described by the triple (u, v, z)
acting element-wise on its density matrix:

    rho_11(t) = u rho_11(0) + v rho_22(0)
    rho_22(t) = (1-u) rho_11(0) + (1-v) rho_22(0)
    rho_12(t) = z rho_12(0)

``lift_three_qubit`` extends three such independent single-qubit maps to
the full 8x8 state, element by element.  ``evolve_dephasing`` is the
specialization to pure dephasing, u=1, v=0, z=exp(-f(t)), where every
coherence decays with one factor exp(-f) per qubit on which the two basis
states differ.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import HAMMING
from .errors import ChannelContractError, ContractError
from .linalg import hermitian_eigenvalues, require_density
from .noise import NoiseParams, decoherence_exponent, exp_decay

#: smallest eigenvalue tolerated in a channel output before flagging the
#: parameters as invalid.
CHANNEL_PSD_TOL = 1e-10


@dataclass(frozen=True)
class ChannelParams:
    """Element-map parameters (u, v, z) of one qubit's evolution."""

    u: float
    v: float
    z: complex

    def __post_init__(self):
        if not (0.0 <= self.u <= 1.0 and 0.0 <= self.v <= 1.0):
            raise ContractError("u and v must lie in [0, 1]")


IDENTITY_PARAMS = ChannelParams(1.0, 0.0, 1.0)


def dephasing_params(noise: NoiseParams, t: float) -> ChannelParams:
    """Dephasing parameters at time t: u=1, v=0, z=exp(-f(t))."""
    return ChannelParams(1.0, 0.0, exp_decay(decoherence_exponent(noise, t)))


def evolve_dephasing(rho0: np.ndarray, noise: NoiseParams, t: float) -> np.ndarray:
    """Evolve a three-qubit state under independent dephasing noise.

    Populations are constant; the coherence between basis states differing
    on n qubits is scaled by exp(-n f(t)).  Hermiticity is exact because
    the decay factors are symmetric and real.
    """
    rho0 = require_density(rho0)
    if rho0.shape[0] != 8:
        raise ContractError("evolve_dephasing expects an 8x8 state")
    f = decoherence_exponent(noise, t)
    return rho0 * np.exp(-f * HAMMING)


def lift_three_qubit(
    rho0: np.ndarray,
    pa: ChannelParams,
    pb: ChannelParams,
    pc: ChannelParams,
) -> np.ndarray:
    """Apply three independent single-qubit maps to an 8x8 state.

    Only the 8 diagonal and 28 upper-triangle elements are computed; the
    lower triangle is filled by conjugation, so the output is Hermitian by
    construction.  The trace is preserved exactly by the diagonal map.

    Raises
    ------
    ChannelContractError
        If the output fails positivity beyond 1e-10, which signals
        inconsistent (u, v, z) triples.
    """
    rho0 = require_density(rho0)
    if rho0.shape[0] != 8:
        raise ContractError("lift_three_qubit expects an 8x8 state")

    uA, vA, zA = pa.u, pa.v, complex(pa.z)
    uB, vB, zB = pb.u, pb.v, complex(pb.z)
    uC, vC, zC = pc.u, pc.v, complex(pc.z)
    wA, xA = 1.0 - uA, 1.0 - vA
    wB, xB = 1.0 - uB, 1.0 - vB
    wC, xC = 1.0 - uC, 1.0 - vC
    zAc, zBc, zCc = zA.conjugate(), zB.conjugate(), zC.conjugate()

    def r(i, j):
        return rho0[i - 1, j - 1]

    out = np.zeros((8, 8), dtype=complex)

    def put(i, j, val):
        if i == j:
            # populations are real by construction; drop float noise the
            # input representation may carry in its imaginary parts
            out[i - 1, i - 1] = complex(val).real
        else:
            out[i - 1, j - 1] = val
            out[j - 1, i - 1] = np.conj(val)

    # populations
    put(1, 1, uA*uB*uC*r(1,1) + uA*uB*vC*r(2,2) + uA*vB*uC*r(3,3) + uA*vB*vC*r(4,4)
            + vA*uB*uC*r(5,5) + vA*uB*vC*r(6,6) + vA*vB*uC*r(7,7) + vA*vB*vC*r(8,8))
    put(2, 2, uA*uB*wC*r(1,1) + uA*uB*xC*r(2,2) + uA*vB*wC*r(3,3) + uA*vB*xC*r(4,4)
            + vA*uB*wC*r(5,5) + vA*uB*xC*r(6,6) + vA*vB*wC*r(7,7) + vA*vB*xC*r(8,8))
    put(3, 3, uA*wB*uC*r(1,1) + uA*wB*vC*r(2,2) + uA*xB*uC*r(3,3) + uA*xB*vC*r(4,4)
            + vA*wB*uC*r(5,5) + vA*wB*vC*r(6,6) + vA*xB*uC*r(7,7) + vA*xB*vC*r(8,8))
    put(4, 4, uA*wB*wC*r(1,1) + uA*wB*xC*r(2,2) + uA*xB*wC*r(3,3) + uA*xB*xC*r(4,4)
            + vA*wB*wC*r(5,5) + vA*wB*xC*r(6,6) + vA*xB*wC*r(7,7) + vA*xB*xC*r(8,8))
    put(5, 5, wA*uB*uC*r(1,1) + wA*uB*vC*r(2,2) + wA*vB*uC*r(3,3) + wA*vB*vC*r(4,4)
            + xA*uB*uC*r(5,5) + xA*uB*vC*r(6,6) + xA*vB*uC*r(7,7) + xA*vB*vC*r(8,8))
    put(6, 6, wA*uB*wC*r(1,1) + wA*uB*xC*r(2,2) + wA*vB*wC*r(3,3) + wA*vB*xC*r(4,4)
            + xA*uB*wC*r(5,5) + xA*uB*xC*r(6,6) + xA*vB*wC*r(7,7) + xA*vB*xC*r(8,8))
    put(7, 7, wA*wB*uC*r(1,1) + wA*wB*vC*r(2,2) + wA*xB*uC*r(3,3) + wA*xB*vC*r(4,4)
            + xA*wB*uC*r(5,5) + xA*wB*vC*r(6,6) + xA*xB*uC*r(7,7) + xA*xB*vC*r(8,8))
    put(8, 8, wA*wB*wC*r(1,1) + wA*wB*xC*r(2,2) + wA*xB*wC*r(3,3) + wA*xB*xC*r(4,4)
            + xA*wB*wC*r(5,5) + xA*wB*xC*r(6,6) + xA*xB*wC*r(7,7) + xA*xB*xC*r(8,8))

    # coherences, upper triangle
    put(1, 2, uA*uB*zC*r(1,2) + uA*vB*zC*r(3,4) + vA*uB*zC*r(5,6) + vA*vB*zC*r(7,8))
    put(1, 3, uA*zB*uC*r(1,3) + uA*zB*vC*r(2,4) + vA*zB*uC*r(5,7) + vA*zB*vC*r(6,8))
    put(1, 4, uA*zB*zC*r(1,4) + vA*zB*zC*r(5,8))
    put(1, 5, zA*uB*uC*r(1,5) + zA*uB*vC*r(2,6) + zA*vB*uC*r(3,7) + zA*vB*vC*r(4,8))
    put(1, 6, zA*uB*zC*r(1,6) + zA*vB*zC*r(3,8))
    put(1, 7, zA*zB*uC*r(1,7) + zA*zB*vC*r(2,8))
    put(1, 8, zA*zB*zC*r(1,8))
    put(2, 3, uA*zB*zCc*r(2,3) + vA*zB*zCc*r(6,7))
    put(2, 4, uA*zB*wC*r(1,3) + uA*zB*xC*r(2,4) + vA*zB*wC*r(5,7) + vA*zB*xC*r(6,8))
    put(2, 5, zA*uB*zCc*r(2,5) + zA*vB*zCc*r(4,7))
    put(2, 6, zA*uB*wC*r(1,5) + zA*uB*xC*r(2,6) + zA*vB*wC*r(3,7) + zA*vB*xC*r(4,8))
    put(2, 7, zA*zB*zCc*r(2,7))
    put(2, 8, zA*zB*wC*r(1,7) + zA*zB*xC*r(2,8))
    put(3, 4, uA*wB*zC*r(1,2) + uA*xB*zC*r(3,4) + vA*wB*zC*r(5,6) + vA*xB*zC*r(7,8))
    put(3, 5, zA*zBc*uC*r(3,5) + zA*zBc*vC*r(4,6))
    put(3, 6, zA*zBc*zC*r(3,6))
    put(3, 7, zA*wB*uC*r(1,5) + zA*wB*vC*r(2,6) + zA*xB*uC*r(3,7) + zA*xB*vC*r(4,8))
    put(3, 8, zA*wB*zC*r(1,6) + zA*xB*zC*r(3,8))
    put(4, 5, zA*zBc*zCc*r(4,5))
    put(4, 6, zA*zBc*wC*r(3,5) + zA*zBc*xC*r(4,6))
    put(4, 7, zA*wB*zCc*r(2,5) + zA*xB*zCc*r(4,7))
    put(4, 8, zA*wB*wC*r(1,5) + zA*wB*xC*r(2,6) + zA*xB*wC*r(3,7) + zA*xB*xC*r(4,8))
    put(5, 6, wA*uB*zC*r(1,2) + wA*vB*zC*r(3,4) + xA*uB*zC*r(5,6) + xA*vB*zC*r(7,8))
    put(5, 7, wA*zB*uC*r(1,3) + wA*zB*vC*r(2,4) + xA*zB*uC*r(5,7) + xA*zB*vC*r(6,8))
    put(5, 8, wA*zB*zC*r(1,4) + xA*zB*zC*r(5,8))
    put(6, 7, wA*zB*zCc*r(2,3) + xA*zB*zCc*r(6,7))
    put(6, 8, wA*zB*wC*r(1,3) + wA*zB*xC*r(2,4) + xA*zB*wC*r(5,7) + xA*zB*xC*r(6,8))
    put(7, 8, wA*wB*zC*r(1,2) + wA*xB*zC*r(3,4) + xA*wB*zC*r(5,6) + xA*xB*zC*r(7,8))

    min_eig = float(hermitian_eigenvalues(out)[-1])
    if min_eig < -CHANNEL_PSD_TOL:
        raise ChannelContractError(
            f"channel output has eigenvalue {min_eig:.3e}; invalid channel parameters"
        )
    return out
