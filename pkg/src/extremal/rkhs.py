#!/usr/bin/env python3
"""
Finite-rank reproducing kernel factorisation K(rho, pi) = gamma_rho^* gamma_pi
and the lifted representation U~ of H on the r-dimensional RKHS.

gamma_pi : H_pi (x) K_pi -> C^r plays the role of ev_pi^*, so that
ev_pi^* T ev_pi = gamma_pi T gamma_pi^*.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
import scipy.linalg

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import NonUnitaryLift
from ..kernel.kernel import CovariantKernel, check_kernel
from ..observability.metrics import metrics
from ..utils.linalg import max_abs

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class RkhsFactorization:
    kernel: CovariantKernel
    rank: int
    stacked: np.ndarray
    gamma: Dict[str, np.ndarray]
    u_tilde: np.ndarray
    eigenvalues: np.ndarray
    residual: float

    def lift(self, h: int) -> np.ndarray:
        """U~(h) for a subgroup element h."""
        return self.u_tilde[self.kernel.system.group.subgroup.index(h)]


def _lift_tolerance(tol: Tolerances, scale: float) -> float:
    return max(tol.unitary, tol.rank) * scale


def factorize_kernel(kernel: CovariantKernel, tol: Optional[Tolerances] = None,
                     validate: bool = True) -> RkhsFactorization:
    """
    Eigendecompose the block Gram matrix, keep eigenvalues above
    tol.rank * lambda_max, form Gamma = D^{1/2} V^*, and solve
    Gamma U(h) = U~(h) Gamma for U~ by least squares.

    Raises:
        InvalidKernel: if the kernel fails validation
        NonUnitaryLift: if the solved U~ is not a unitary representation
    """
    tol = tol or DEFAULT_TOLERANCES
    if validate:
        check_kernel(kernel, tol)
    system = kernel.system
    dense = kernel.to_dense()

    evals, evecs = scipy.linalg.eigh(0.5 * (dense + dense.conj().T))
    order = np.argsort(evals)[::-1]
    evals, evecs = evals[order], evecs[:, order]
    lam_max = max(float(evals[0]), 0.0) if evals.size else 0.0
    cutoff = tol.rank * lam_max
    keep = evals > cutoff
    rank = int(np.count_nonzero(keep))
    near = evals[(evals > cutoff / 10) & (evals < cutoff * 10)]
    if near.size:
        logger.warning(f"{near.size} Gram eigenvalue(s) within a factor 10 of the rank cutoff {cutoff:.3g}")

    stacked = np.sqrt(evals[keep])[:, np.newaxis] * evecs[:, keep].conj().T
    gamma = {p: stacked[:, system.block_slice(p)] for p in system.support}
    residual = max_abs(stacked.conj().T @ stacked - dense)

    scale = 1.0 + lam_max
    lift_tol = _lift_tolerance(tol, scale)
    lifts = []
    for h in system.group.subgroup:
        target = stacked @ system.u(h)
        # U~ Gamma = Gamma U(h)  <=>  Gamma^T U~^T = (Gamma U(h))^T
        solution = np.linalg.lstsq(stacked.T, target.T, rcond=None)[0].T
        intertwining = max_abs(solution @ stacked - target)
        unitarity = max_abs(solution @ solution.conj().T - np.eye(rank))
        if intertwining > lift_tol or unitarity > lift_tol:
            raise NonUnitaryLift(
                f"Lift of U({h}) fails (intertwining {intertwining:.3g}, unitarity {unitarity:.3g})",
                {"h": int(h)},
            )
        lifts.append(solution)
    u_tilde = np.array(lifts) if lifts else np.zeros((0, rank, rank), dtype=complex)

    metrics.increment_factorizations()
    logger.debug(f"Factorised kernel: rank {rank}, residual {residual:.3g}")
    return RkhsFactorization(kernel=kernel, rank=rank, stacked=stacked, gamma=gamma,
                             u_tilde=u_tilde, eigenvalues=evals, residual=residual)


def lift_is_representation(fact: RkhsFactorization, tol: Optional[Tolerances] = None) -> bool:
    """U~ is unitary and multiplicative over H."""
    tol = tol or DEFAULT_TOLERANCES
    group = fact.kernel.system.group
    eye = np.eye(fact.rank)
    lift_tol = _lift_tolerance(tol, 1.0 + float(max(fact.eigenvalues[0], 0.0)))
    for a in group.subgroup:
        ua = fact.lift(a)
        if max_abs(ua @ ua.conj().T - eye) > lift_tol:
            return False
        for b in group.subgroup:
            if max_abs(ua @ fact.lift(b) - fact.lift(group.mul(a, b))) > lift_tol:
                return False
    return True


def is_total(fact: RkhsFactorization, tol: float = 1e-10) -> bool:
    """The columns of all gamma_pi span C^r."""
    if fact.rank == 0:
        return True
    s = np.linalg.svd(fact.stacked, compute_uv=False)
    return bool(np.count_nonzero(s > tol * s[0]) == fact.rank)


def regauge(fact: RkhsFactorization, w: np.ndarray) -> RkhsFactorization:
    """The same RKHS seen through a unitary W: Gamma -> W Gamma, U~ -> W U~ W^*."""
    stacked = w @ fact.stacked
    system = fact.kernel.system
    return RkhsFactorization(
        kernel=fact.kernel,
        rank=fact.rank,
        stacked=stacked,
        gamma={p: stacked[:, system.block_slice(p)] for p in system.support},
        u_tilde=w[np.newaxis] @ fact.u_tilde @ w.conj().T[np.newaxis],
        eigenvalues=fact.eigenvalues,
        residual=max_abs(stacked.conj().T @ stacked - fact.kernel.to_dense()),
    )
