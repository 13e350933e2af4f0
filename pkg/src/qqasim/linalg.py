"""Row-vector linear algebra for small quantum systems.

States are unit-norm complex row vectors (bra convention): a gate ``G`` acts
as ``state @ G``, so a pipeline of gates reads left to right.  Everything is
dense and small; nothing here is tuned for dimensions beyond a few hundred.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

#: Tolerance of the unitarity check applied to every gate.
UNITARY_TOL = 1e-10
#: Tolerance for state-vector norm drift during simulation.
NORM_TOL = 1e-9


def is_unitary(matrix, tol: float = UNITARY_TOL) -> bool:
    """True iff ``matrix @ matrix†`` matches the identity entrywise within ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    eye = np.eye(m.shape[0])
    return float(np.abs(m @ m.conj().T - eye).max()) <= tol


def apply(state, matrix) -> np.ndarray:
    """Apply a gate to a row-vector state, returning ``state @ matrix``."""
    s = np.asarray(state, dtype=complex)
    m = np.asarray(matrix, dtype=complex)
    if s.ndim != 1 or m.ndim != 2 or m.shape != (s.shape[0], s.shape[0]):
        raise ValueError(
            f"dimension mismatch: state has shape {s.shape}, matrix has shape {m.shape}"
        )
    return s @ m


def adjoint(matrix) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(matrix, dtype=complex).conj().T


def block_diag(blocks: Sequence) -> np.ndarray:
    """Assemble square blocks into one block-diagonal matrix, zeros elsewhere."""
    mats = [np.asarray(b, dtype=complex) for b in blocks]
    if not mats:
        raise ValueError("block_diag needs at least one block")
    for b in mats:
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValueError("every block must be a square matrix")
    dim = sum(b.shape[0] for b in mats)
    out = np.zeros((dim, dim), dtype=complex)
    at = 0
    for b in mats:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


def permutation_matrix(sigma: Sequence[int]) -> np.ndarray:
    """Matrix that routes the amplitude at position ``i`` to position ``sigma[i]``.

    For a row vector ``s``, ``(s @ P)[sigma[i]] == s[i]``.  ``sigma`` must be a
    permutation of ``0..len(sigma)-1``; the result is always unitary.
    """
    targets = list(sigma)
    n = len(targets)
    if sorted(targets) != list(range(n)):
        raise ValueError(f"sigma is not a permutation of 0..{n - 1}: {targets}")
    out = np.zeros((n, n), dtype=complex)
    for i, j in enumerate(targets):
        out[i, j] = 1.0
    return out
