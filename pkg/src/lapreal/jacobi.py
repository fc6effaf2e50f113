"""Cyclic Jacobi eigensolver for dense symmetric matrices.

Independent of the closed-form cubic route; the two are cross-checked
against each other in the test suite.  The batch variant applies the
same rotation schedule to a stack of equal-order matrices at once.
"""

from __future__ import annotations

import numpy as np

#: off-diagonal convergence threshold relative to the Frobenius norm
OFFDIAG_TOL = 1e-12

MAX_SWEEPS = 100


class JacobiNonConvergence(RuntimeError):
    """The sweep limit was hit before the off-diagonal mass vanished."""


def _rotate_pair(a: np.ndarray, p: int, q: int) -> None:
    """One two-sided Jacobi rotation zeroing entry (p, q) of every matrix."""
    apq = a[:, p, q]
    nonzero = apq != 0.0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        theta = (a[:, q, q] - a[:, p, p]) / (2.0 * apq)
        sgn = np.where(theta >= 0.0, 1.0, -1.0)
        t = sgn / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
    t = np.where(nonzero, t, 0.0)
    t = np.where(np.isfinite(t), t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    cc = c[:, None]
    ss = s[:, None]
    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = cc * row_p - ss * row_q
    a[:, q, :] = ss * row_p + cc * row_q
    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = cc * col_p - ss * col_q
    a[:, :, q] = ss * col_p + cc * col_q
    # the rotation annihilates (p, q) analytically; remove the roundoff residue
    a[:, p, q] = np.where(nonzero, 0.0, a[:, p, q])
    a[:, q, p] = a[:, p, q]


def jacobi_spectra(mats: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a (batch, n, n) stack of symmetric matrices, ascending."""
    a = np.array(mats, dtype=float)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected (batch, n, n) stack, got shape {a.shape}")
    n = a.shape[1]
    norms = np.linalg.norm(a, axis=(1, 2))
    off_mask = ~np.eye(n, dtype=bool)
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    for _ in range(max_sweeps):
        off = np.abs(a[:, off_mask]).max(axis=1) if n > 1 else np.zeros(a.shape[0])
        if not np.any(off > OFFDIAG_TOL * norms):
            diag = a[:, np.arange(n), np.arange(n)].copy()
            diag.sort(axis=1)
            return diag
        for p, q in pairs:
            _rotate_pair(a, p, q)
    raise JacobiNonConvergence(f"no convergence after {max_sweeps} sweeps")


def spectrum_numeric(mat: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Full sorted spectrum of one symmetric matrix via cyclic Jacobi."""
    m = np.asarray(mat, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.allclose(m, m.T, atol=1e-12 * max(1.0, np.abs(m).max())):
        raise ValueError("matrix is not symmetric")
    return jacobi_spectra(m[None, :, :], max_sweeps=max_sweeps)[0]
