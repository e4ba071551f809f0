#!/usr/bin/env python3
"""
Operator subspaces on the RKHS C^r: the commutant of U~(H), the push-forward
of the commutant of U, and the Hermitian perturbation space between them.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np
import scipy.linalg

from ..representation.system import matrix_units
from ..utils.linalg import hermitian_basis, orthonormal_span
from .rkhs import RkhsFactorization

logger = logging.getLogger(__name__)

NULL_SPACE_RCOND = 1e-9


def average_over_lift(fact: RkhsFactorization, t: np.ndarray) -> np.ndarray:
    """(1/|H|) sum_h U~(h) T U~(h)^*; an idempotent projection onto the commutant."""
    u = fact.u_tilde
    return np.mean(u @ np.asarray(t, dtype=complex)[np.newaxis] @ u.conj().transpose(0, 2, 1), axis=0)


def basis_T_Utilde(fact: RkhsFactorization) -> List[np.ndarray]:
    """HS-orthonormal basis of {B : B U~(h) = U~(h) B for all h in H}."""
    r = fact.rank
    if r == 0:
        return []
    images = [average_over_lift(fact, e) for e in matrix_units(r)]
    return orthonormal_span(images, (r, r))


def spanning_T_tilde_U(fact: RkhsFactorization) -> List[np.ndarray]:
    """gamma_pi (E_ij (x) I_d) gamma_pi^* for every supported pi and i, j <= m_pi."""
    system = fact.kernel.system
    mats = []
    for label in system.support:
        g = fact.gamma[label]
        d = system.d(label)
        for e in matrix_units(system.m(label)):
            mats.append(g @ np.kron(e, np.eye(d)) @ g.conj().T)
    return mats


def basis_T_tilde_U(fact: RkhsFactorization) -> List[np.ndarray]:
    r = fact.rank
    if r == 0:
        return []
    return orthonormal_span(spanning_T_tilde_U(fact), (r, r))


@dataclass(eq=False)
class PerturbationSpace:
    factorization: RkhsFactorization
    basis: List[np.ndarray] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis


def _real_rows(z: np.ndarray) -> np.ndarray:
    return np.vstack([np.real(z), np.imag(z)])


def perturbation_space(fact: RkhsFactorization) -> PerturbationSpace:
    """
    Hermitian B with B U~(h) = U~(h) B for all h and tr(B T) = 0 for T in
    the push-forward span.

    B is written as sum_k x_k H_k over an HS-orthonormal Hermitian basis, so
    the conditions become a real linear system in x whose null space is the
    answer. Complex conditions contribute their real and imaginary parts.
    """
    r = fact.rank
    if r == 0:
        return PerturbationSpace(fact, [])
    herm = hermitian_basis(r)
    stack = np.array(herm)

    blocks = []
    for u in fact.u_tilde:
        comm = stack @ u[np.newaxis] - u[np.newaxis] @ stack
        blocks.append(_real_rows(comm.reshape(len(herm), -1).T))
    spanning = spanning_T_tilde_U(fact)
    if spanning:
        # tr(H_k T) = sum_ab H_k[a, b] T[b, a]
        traces = np.einsum("kab,tba->tk", stack, np.array(spanning))
        blocks.append(_real_rows(traces))
    system = np.vstack(blocks) if blocks else np.zeros((0, len(herm)))

    if system.shape[0] == 0:
        null = np.eye(len(herm))
    else:
        null = scipy.linalg.null_space(system, rcond=NULL_SPACE_RCOND)
    basis = [np.einsum("k,kab->ab", null[:, j], stack) for j in range(null.shape[1])]
    logger.debug(f"Perturbation space: dim {len(basis)} in {len(herm)} real dimensions")
    return PerturbationSpace(fact, basis)


def perturbation_defects(fact: RkhsFactorization, b: np.ndarray) -> dict:
    """Residuals of the two perturbation conditions (and Hermiticity) for a supplied B."""
    b = np.asarray(b, dtype=complex)
    commutation = max((float(np.max(np.abs(b @ u - u @ b))) for u in fact.u_tilde), default=0.0)
    trace = max((abs(complex(np.trace(b @ t))) for t in spanning_T_tilde_U(fact)), default=0.0)
    return {
        "hermitian": float(np.max(np.abs(b - b.conj().T))) if b.size else 0.0,
        "commutation": commutation,
        "trace": trace,
    }
