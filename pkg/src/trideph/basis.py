"""Three-qubit computational basis conventions.

The 8-dimensional basis is ordered |111>, |110>, |101>, |100>, |011>,
|010>, |001>, |000>, i.e. each qubit is ordered (|1>, |0>) and qubit A is
the leftmost tensor factor.  Every module that touches matrix indices
(state constructors, the dephasing element map, the trajectory propagator)
goes through the tables defined here so the index conventions cannot drift
apart.
"""

from __future__ import annotations

import numpy as np

#: basis labels in index order; index 0 is |111>, index 7 is |000>.
LABELS: tuple[str, ...] = ("111", "110", "101", "100", "011", "010", "001", "000")

#: per-qubit levels for each basis index, '1' mapped to 1 and '0' to 0.
LEVELS = np.array([[int(ch) for ch in label] for label in LABELS], dtype=int)

#: sigma_z eigenvalue of each qubit in each basis state (+1 for |1>, -1 for |0>).
SIGMA_Z_SIGNS = 2 * LEVELS - 1

#: HAMMING[i, j] = number of qubits whose level differs between basis states
#: i and j; a coherence rho_ij dephases with this many single-qubit factors.
HAMMING = np.array(
    [[int(np.sum(LEVELS[i] != LEVELS[j])) for j in range(8)] for i in range(8)],
    dtype=int,
)

QUBITS = "ABC"


def index(label: str) -> int:
    """Basis index of a three-qubit label such as '100'."""
    return LABELS.index(label)


def ket(label: str) -> np.ndarray:
    """Basis ket |label> as a length-8 complex vector."""
    v = np.zeros(8, dtype=complex)
    v[index(label)] = 1.0
    return v
