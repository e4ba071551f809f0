#!/usr/bin/env python3
"""
Extremality decision for covariant kernels and convex splitting of
non-extremal ones.

A kernel is extremal iff the Hermitian perturbation space is zero, iff the
push-forward of the commutant of U fills the commutant of U~. Both tests are
run and must agree.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import scipy.linalg

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import InternalInconsistency, NotInPerturbationSpace, ZeroPerturbation
from ..kernel.kernel import CovariantKernel, check_kernel
from ..observability.metrics import metrics
from ..utils.formatting import encode_matrix
from ..utils.linalg import operator_norm, orthonormal_span
from .rkhs import RkhsFactorization, factorize_kernel
from .subspaces import basis_T_Utilde, basis_T_tilde_U, perturbation_defects, perturbation_space

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ExtremalityVerdict:
    extremal: bool
    rank: int
    dim_T_tilde_U: int
    dim_commutant: int
    witnesses: List[np.ndarray] = field(default_factory=list)
    factorization: Optional[RkhsFactorization] = None

    def __bool__(self) -> bool:
        return self.extremal

    @property
    def witness(self) -> Optional[np.ndarray]:
        return self.witnesses[0] if self.witnesses else None

    def to_document(self, digits: int = 12) -> Dict[str, Any]:
        doc = {
            "extremal": self.extremal,
            "rank": self.rank,
            "dim_T_tilde_U": self.dim_T_tilde_U,
            "dim_commutant": self.dim_commutant,
            "perturbation_dim": len(self.witnesses),
        }
        if self.witnesses:
            doc["witness"] = encode_matrix(self.witnesses[0], digits)
            doc["witness_basis"] = [encode_matrix(b, digits) for b in self.witnesses]
        return doc


def verdict_from_factorization(fact: RkhsFactorization) -> ExtremalityVerdict:
    """Run both criteria on an existing factorisation."""
    metrics.increment_extremality_checks()
    space = perturbation_space(fact)
    dim_tilde = len(basis_T_tilde_U(fact))
    dim_comm = len(basis_T_Utilde(fact))

    by_perturbation = space.is_zero()
    by_dimension = dim_tilde == dim_comm
    if by_perturbation != by_dimension:
        metrics.increment_internal_inconsistency()
        logger.error(
            "Extremality criteria disagree: perturbation dim %d, dim T~_U %d, dim commutant %d",
            space.dim, dim_tilde, dim_comm,
        )
        raise InternalInconsistency(
            "Perturbation-space and dimension criteria disagree; check the rank threshold",
            {"perturbation_dim": space.dim, "dim_T_tilde_U": dim_tilde, "dim_commutant": dim_comm},
        )
    if space.dim != dim_comm - dim_tilde:
        logger.warning(
            f"Perturbation dim {space.dim} differs from dim commutant - dim T~_U = {dim_comm - dim_tilde}"
        )
    return ExtremalityVerdict(extremal=by_perturbation, rank=fact.rank, dim_T_tilde_U=dim_tilde,
                              dim_commutant=dim_comm, witnesses=space.basis, factorization=fact)


def is_extremal(kernel: CovariantKernel, tol: Optional[Tolerances] = None) -> ExtremalityVerdict:
    """
    Decide whether the kernel is an extreme point of the convex set of kernels.

    Returns a verdict that is truthy iff extremal; when not extremal the
    verdict carries an HS-orthonormal basis of perturbation witnesses.

    Raises:
        InvalidKernel: if the kernel fails validation
        InternalInconsistency: if the two criteria disagree
    """
    verdict = verdict_from_factorization(factorize_kernel(kernel, tol))
    logger.debug(f"Extremality verdict: {verdict.extremal} (rank {verdict.rank})")
    return verdict


def extremality_report(kernel: CovariantKernel, tol: Optional[Tolerances] = None, digits: int = 12) -> Dict[str, Any]:
    return is_extremal(kernel, tol).to_document(digits)


def decompose_along(kernel: CovariantKernel, b: np.ndarray, tol: Optional[Tolerances] = None,
                    factorization: Optional[RkhsFactorization] = None) -> Tuple[CovariantKernel, CovariantKernel]:
    """
    Split K = (K+ + K-) / 2 with K+-(rho, pi) = gamma_rho^* (I +- B / ||B||) gamma_pi.

    B is read in the gauge of ``factorization`` (default: a fresh
    factorisation of the kernel, which is deterministic).

    Raises:
        ZeroPerturbation: if B vanishes
        NotInPerturbationSpace: if B is not Hermitian, does not commute with
            U~ or is not trace-orthogonal to the push-forward span
    """
    tol = tol or DEFAULT_TOLERANCES
    fact = factorization or factorize_kernel(kernel, tol)
    b = np.asarray(b, dtype=complex)
    if b.shape != (fact.rank, fact.rank):
        raise NotInPerturbationSpace(f"B must be {fact.rank}x{fact.rank}, got {b.shape}", {"rank": fact.rank})
    norm = operator_norm(b)
    if norm <= tol.equality:
        raise ZeroPerturbation("Perturbation operator is zero")

    defects = perturbation_defects(fact, b / norm)
    limit = tol.rank * (1.0 + float(max(fact.eigenvalues[0], 0.0)))
    failing = {k: v for k, v in defects.items() if v > limit}
    if failing:
        raise NotInPerturbationSpace(f"B violates {sorted(failing)}", defects)

    gamma = fact.stacked
    eye = np.eye(fact.rank)
    system = kernel.system
    plus = CovariantKernel.from_dense(system, gamma.conj().T @ (eye + b / norm) @ gamma)
    minus = CovariantKernel.from_dense(system, gamma.conj().T @ (eye - b / norm) @ gamma)
    check_kernel(plus, tol)
    check_kernel(minus, tol)
    metrics.increment_decompositions()
    return plus, minus


@dataclass(eq=False)
class Decomposition:
    leaves: List[Tuple[float, CovariantKernel]]
    steps: int
    complete: bool

    def weights(self) -> List[float]:
        return [w for w, _ in self.leaves]

    def recombine(self) -> np.ndarray:
        return sum(w * k.to_dense() for w, k in self.leaves)


def decompose_to_extremals(kernel: CovariantKernel, max_steps: int = 8,
                           tol: Optional[Tolerances] = None) -> Decomposition:
    """
    Experimental: repeatedly halve every non-extremal leaf along its first
    witness. Stops when every leaf is extremal or after ``max_steps`` rounds;
    ``complete`` records which one happened.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    leaves = [(1.0, kernel)]
    for step in range(max_steps):
        next_leaves = []
        split = False
        for weight, leaf in leaves:
            verdict = is_extremal(leaf, tol)
            if verdict.extremal:
                next_leaves.append((weight, leaf))
                continue
            plus, minus = decompose_along(leaf, verdict.witness, tol, verdict.factorization)
            next_leaves.extend([(weight / 2, plus), (weight / 2, minus)])
            split = True
        leaves = next_leaves
        if not split:
            return Decomposition(leaves=leaves, steps=step, complete=True)
        logger.debug(f"Decomposition step {step + 1}: {len(leaves)} leaves")
    complete = all(is_extremal(leaf, tol).extremal for _, leaf in leaves)
    return Decomposition(leaves=leaves, steps=max_steps, complete=complete)


def correlation_extremal(matrix: np.ndarray, tol: Optional[Tolerances] = None) -> bool:
    """
    Extremality of a unit-diagonal PSD correlation matrix (abelian G, trivial
    H, multiplicity one): write it as the Gram matrix of eta_pi in C^r and
    test whether the projectors |eta_pi><eta_pi| span all r x r matrices.
    """
    tol = tol or DEFAULT_TOLERANCES
    matrix = np.asarray(matrix, dtype=complex)
    evals, evecs = scipy.linalg.eigh(0.5 * (matrix + matrix.conj().T))
    keep = evals > tol.rank * max(float(evals[-1]), 0.0)
    etas = np.sqrt(evals[keep])[:, np.newaxis] * evecs[:, keep].conj().T
    r = etas.shape[0]
    projectors = [np.outer(etas[:, k], etas[:, k].conj()) for k in range(etas.shape[1])]
    return len(orthonormal_span(projectors, (r, r))) == r * r
