#!/usr/bin/env python3
"""
Linear-algebra helpers shared by the group, kernel, POVM and extremal code.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist


def max_abs(a: np.ndarray) -> float:
    """Max-entry norm; 0.0 for empty arrays."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(a, -1, -2))


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + dagger(a))


def psd_check(a: np.ndarray, tol: float) -> Tuple[bool, float, Optional[np.ndarray]]:
    """
    Check positive semidefiniteness with a scale-aware threshold.

    Returns:
        (ok, residual, witness): residual is max(0, -lambda_min); the witness
        is the eigenvector of the smallest eigenvalue.
    """
    if a.size == 0:
        return True, 0.0, None
    evals, evecs = scipy.linalg.eigh(hermitian_part(a))
    lam_min = float(evals[0])
    lam_max = float(max(evals[-1], 0.0))
    ok = lam_min >= -tol * (1.0 + lam_max)
    return ok, max(0.0, -lam_min), evecs[:, 0]


def operator_norm(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def vectorize(mats: Sequence[np.ndarray]) -> np.ndarray:
    """Stack matrices as columns of a (n*n) x len(mats) array."""
    if not mats:
        return np.zeros((0, 0), dtype=complex)
    return np.stack([np.asarray(m, dtype=complex).reshape(-1) for m in mats], axis=1)


def orthonormal_span(mats: Sequence[np.ndarray], shape: Tuple[int, int], tol: float = 1e-10) -> List[np.ndarray]:
    """Hilbert-Schmidt orthonormal basis of span(mats)."""
    if not mats:
        return []
    q = scipy.linalg.orth(vectorize(mats), rcond=tol)
    return [q[:, k].reshape(shape) for k in range(q.shape[1])]


def projection_residual(mats: Sequence[np.ndarray], basis: Sequence[np.ndarray]) -> float:
    """Largest HS distance of a matrix in ``mats`` from span(basis); basis must be HS-orthonormal."""
    if not mats:
        return 0.0
    a = vectorize(mats)
    if not basis:
        return float(np.max(np.linalg.norm(a, axis=0)))
    q = vectorize(basis)
    rest = a - q @ (dagger(q) @ a)
    return float(np.max(np.linalg.norm(rest, axis=0)))


def hermitian_basis(n: int) -> List[np.ndarray]:
    """HS-orthonormal real basis of the n x n Hermitian matrices (n^2 elements)."""
    basis = []
    for i in range(n):
        e = np.zeros((n, n), dtype=complex)
        e[i, i] = 1.0
        basis.append(e)
    for i in range(n):
        for j in range(i + 1, n):
            s = np.zeros((n, n), dtype=complex)
            s[i, j] = s[j, i] = 1.0 / np.sqrt(2.0)
            basis.append(s)
            a = np.zeros((n, n), dtype=complex)
            a[i, j] = 1j / np.sqrt(2.0)
            a[j, i] = -1j / np.sqrt(2.0)
            basis.append(a)
    return basis


def complex_gaussian(shape: Tuple[int, ...], rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormalise a rows x cols complex Gaussian matrix (QR with phase fix)."""
    if cols == 0:
        return np.zeros((rows, 0), dtype=complex)
    q, r = np.linalg.qr(complex_gaussian((rows, cols), rng))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[np.newaxis, :]


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    return random_isometry(n, n, rng)


def group_close_values(values: np.ndarray, tol: float) -> np.ndarray:
    """Label nearly equal complex values with the same cluster index."""
    points = np.stack([np.real(values), np.imag(values)], axis=1)
    adjacency = cdist(points, points) < tol
    _, labels = connected_components(adjacency, directed=False)
    return labels


def common_eigenspaces(mats: Sequence[np.ndarray], tol: float = 1e-6) -> List[np.ndarray]:
    """
    Split C^n into joint eigenspaces of commuting normal matrices.

    Each matrix refines the current list of subspaces through its two
    Hermitian parts: restricted to a subspace each part is diagonalised with
    ``eigh`` and the eigenvectors are clustered by eigenvalue.
    """
    n = mats[0].shape[0]
    hermitian = []
    for m in mats:
        hermitian.append(m + dagger(m))
        hermitian.append(1j * (m - dagger(m)))
    spaces = [np.eye(n, dtype=complex)]
    for m in hermitian:
        refined = []
        for q in spaces:
            evals, evecs = scipy.linalg.eigh(dagger(q) @ m @ q)
            labels = group_close_values(evals.astype(complex), tol)
            for label in np.unique(labels):
                refined.append(q @ evecs[:, labels == label])
        spaces = refined
    return spaces
