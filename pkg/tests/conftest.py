"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the library's own code paths:
eigenvalues come from LAPACK, the channel lift from a generic
transfer-tensor contraction, and dephasing from an explicit Kraus sum.
"""

import numpy as np
import pytest

from trideph.channel import ChannelParams
from trideph.measures import XStateParams


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_hermitian(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (g + g.conj().T) / 2.0


def random_density(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure_density(rng, dim=8):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_channel_params(rng):
    """Valid (u, v, z): the Choi block condition requires |z|^2 <= u(1-v)."""
    u = rng.uniform()
    v = rng.uniform()
    mag = np.sqrt(u * (1.0 - v)) * np.sqrt(rng.uniform())
    return ChannelParams(u, v, mag * np.exp(2j * np.pi * rng.uniform()))


def random_x_params(rng, equal_bc=False, real_coherences=False):
    pops = rng.dirichlet([1.5, 1.5, 1.5, 1.5])
    a, b, c, d = map(float, pops)
    if equal_bc:
        b = c = 0.5 * (b + c)
    zmag = np.sqrt(b * c) * np.sqrt(rng.uniform())
    wmag = np.sqrt(a * d) * np.sqrt(rng.uniform())
    if real_coherences:
        z, w = complex(zmag), complex(wmag)
    else:
        z = zmag * np.exp(2j * np.pi * rng.uniform())
        w = wmag * np.exp(2j * np.pi * rng.uniform())
    return XStateParams(a, b, c, d, z, w)


def transfer_tensor(p: ChannelParams) -> np.ndarray:
    """Single-qubit transfer tensor T[i, j, l, m]: rho'(i,j) = sum T rho(l,m)."""
    t = np.zeros((2, 2, 2, 2), dtype=complex)
    t[0, 0, 0, 0] = p.u
    t[0, 0, 1, 1] = p.v
    t[1, 1, 0, 0] = 1.0 - p.u
    t[1, 1, 1, 1] = 1.0 - p.v
    t[0, 1, 0, 1] = p.z
    t[1, 0, 1, 0] = np.conj(p.z)
    return t


def lift_oracle(rho0, pa, pb, pc):
    """Independent three-qubit lift: contract one transfer tensor per qubit."""
    r6 = np.asarray(rho0, dtype=complex).reshape(2, 2, 2, 2, 2, 2)
    out = np.einsum(
        "adlo,bemp,cfnq,lmnopq->abcdef",
        transfer_tensor(pa), transfer_tensor(pb), transfer_tensor(pc), r6,
    )
    return out.reshape(8, 8)


def dephasing_kraus_oracle(rho0, z):
    """Dephasing via the explicit Kraus pair K0, K1 applied to each qubit."""
    i2 = np.eye(2, dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    k0 = np.sqrt((1.0 + z) / 2.0) * i2
    k1 = np.sqrt((1.0 - z) / 2.0) * sz
    out = np.zeros((8, 8), dtype=complex)
    for ka in (k0, k1):
        for kb in (k0, k1):
            for kc in (k0, k1):
                k = np.kron(np.kron(ka, kb), kc)
                out += k @ rho0 @ k.conj().T
    return out
