"""Dense complex matrix kernel for 2-, 4- and 8-dimensional operators.

Everything the correlation measures need: Kronecker products, Hermitian
eigenvalues (cyclic Jacobi), partial trace, partial transpose and von
Neumann entropy.  All functions are pure and operate on plain numpy
arrays.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ContractError

#: max |M - M^dagger| accepted for Hermitian inputs.
HERMITIAN_TOL = 1e-12
#: eigenvalues below this are treated as contract violations for states.
PSD_TOL = 1e-8
#: eigenvalues in [-CLAMP_TOL, 0) are clamped to 0 before sqrt/log.
CLAMP_TOL = 1e-10
#: eigenvalues below this contribute nothing to entropies (0*log 0 = 0).
ZERO_EIGENVALUE = 1e-14

_JACOBI_OFF_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_ALLOWED_DIMS = (2, 4, 8)
_SUBSYSTEMS = {8: "ABC", 4: "AB"}

# einsum contractions tracing out one subsystem; rows (a,b,c), columns (d,e,f).
_PTRACE = {
    (8, "AB"): ("abcdec->abde", 4),
    (8, "AC"): ("abcdbf->acdf", 4),
    (8, "BC"): ("abcaef->bcef", 4),
    (4, "A"): ("abcb->ac", 2),
    (4, "B"): ("abad->bd", 2),
}


def _as_square(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractError(f"{name} must be square, got shape {m.shape}")
    if m.shape[0] not in _ALLOWED_DIMS:
        raise ContractError(f"{name} dimension must be one of {_ALLOWED_DIMS}")
    return m


def require_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate Hermiticity within ``tol`` and return the array."""
    m = _as_square(m)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise ContractError(f"matrix is not Hermitian: max|M - M^H| = {dev:.3e}")
    return m


def require_density(rho: np.ndarray, trace_tol: float = 1e-8) -> np.ndarray:
    """Validate that ``rho`` is Hermitian with unit trace."""
    rho = require_hermitian(rho)
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise ContractError(f"density matrix trace is {tr}, expected 1")
    return rho


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, restricted to results of dimension <= 8."""
    a = _as_square(a, "kron factor")
    b = _as_square(b, "kron factor")
    if a.shape[0] * b.shape[0] > 8:
        raise ContractError(
            f"kron result dimension {a.shape[0] * b.shape[0]} exceeds 8"
        )
    return np.kron(a, b)


def kron3(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Three-factor Kronecker product A (x) B (x) C."""
    return kron(kron(a, b), c)


def _offdiag_norm(a: np.ndarray) -> float:
    off = np.abs(a) ** 2
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float(np.sum(off)))


def _jacobi(m: np.ndarray, vectors: bool):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix.

    Sweeps all upper-triangle pairs with unitary plane rotations until the
    off-diagonal Frobenius norm drops below 1e-12 (at most 100 sweeps).
    Returns eigenvalues in descending order and, optionally, the matching
    eigenvector columns.
    """
    n = m.shape[0]
    a = np.array(m, dtype=complex)
    v = np.eye(n, dtype=complex) if vectors else None
    for _ in range(_JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) < _JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                ab = abs(apq)
                if ab == 0.0:
                    continue
                phase = apq / ab
                tau = (a[q, q].real - a[p, p].real) / (2.0 * ab)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(phase) * colq
                a[:, q] = s * phase * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * phase * rowq
                a[q, :] = s * np.conj(phase) * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                if vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * np.conj(phase) * vq
                    v[:, q] = s * phase * vp + c * vq
    else:
        raise ArithmeticError("Jacobi eigensolver failed to converge in 100 sweeps")
    w = np.real(np.diag(a))
    order = np.argsort(-w, kind="stable")
    if vectors:
        return w[order], v[:, order]
    return w[order], None


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending."""
    w, _ = _jacobi(require_hermitian(m), vectors=False)
    return w


def hermitian_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvector columns of a Hermitian matrix."""
    w, v = _jacobi(require_hermitian(m), vectors=True)
    return w, v


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced density matrix over the kept subsystems.

    Parameters
    ----------
    rho : ndarray
        8x8 (subsystems A, B, C) or 4x4 (subsystems A, B) matrix.
    keep : str or iterable of str
        Subsystem labels to keep, e.g. "A" or "AB" or ("A", "C").
    """
    rho = _as_square(rho, "partial_trace input")
    dim = rho.shape[0]
    if dim == 2:
        raise ContractError("partial_trace needs a composite system (dim 4 or 8)")
    labels = _SUBSYSTEMS[dim]
    keep = "".join(sorted(set(keep)))
    if not keep or any(k not in labels for k in keep) or keep == labels:
        raise ContractError(
            f"keep must name a proper non-empty subset of {labels!r}, got {keep!r}"
        )
    if dim == 8 and len(keep) == 1:
        # trace out the complement one subsystem at a time (alphabetically),
        # so composing pair traces reproduces the one-shot result exactly
        removed_first = min(set(labels) - set(keep))
        keep_pair = "".join(sorted(set(labels) - {removed_first}))
        reduced = partial_trace(rho, keep_pair)
        return partial_trace(reduced, "AB"[keep_pair.index(keep)])
    spec, out_dim = _PTRACE[(dim, keep)]
    n = len(labels)
    reduced = np.einsum(spec, rho.reshape((2,) * (2 * n)))
    return reduced.reshape(out_dim, out_dim)


def partial_transpose(rho: np.ndarray, part: str) -> np.ndarray:
    """Partial transpose of an 8x8 matrix with respect to one qubit."""
    rho = _as_square(rho, "partial_transpose input")
    if rho.shape[0] != 8:
        raise ContractError("partial_transpose expects an 8x8 matrix")
    if part not in "ABC" or len(part) != 1:
        raise ContractError(f"part must be one of 'A', 'B', 'C', got {part!r}")
    axis = "ABC".index(part)
    r6 = rho.reshape(2, 2, 2, 2, 2, 2)
    return np.swapaxes(r6, axis, axis + 3).reshape(8, 8)


def clamp_spectrum(w: np.ndarray, tol: float = PSD_TOL) -> np.ndarray:
    """Zero out tiny/negative eigenvalues caused by floating-point drift.

    Values below -``tol`` raise; values below ZERO_EIGENVALUE are set to 0.
    """
    w = np.asarray(w, dtype=float)
    if np.any(w < -tol):
        raise ContractError(f"spectrum has negative eigenvalue {w.min():.3e}")
    out = w.copy()
    out[out < ZERO_EIGENVALUE] = 0.0
    return out


def xlog2(p) -> np.ndarray:
    """Elementwise p*log2(p) with the 0*log 0 = 0 convention."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    m = p > ZERO_EIGENVALUE
    out[m] = p[m] * np.log2(p[m])
    return out


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy S(rho) = -Tr rho log2 rho, in bits."""
    rho = require_density(rho)
    w = clamp_spectrum(hermitian_eigenvalues(rho))
    return float(max(0.0, -np.sum(xlog2(w))))
