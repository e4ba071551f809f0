#!/usr/bin/env python3
"""
Covariant kernels K(rho, pi): construction from isometry families,
validation of the kernel conditions and convex mixing.
"""

import logging
from typing import Optional

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import BadWeight, InvalidKernel, ShapeMismatch, SystemMismatch
from ..observability.metrics import metrics
from ..povm.report import ValidationReport
from ..representation.blocks import BlockOperator
from ..representation.system import RepSystem, partial_trace_block, same_system
from ..utils.linalg import max_abs, operator_norm, psd_check
from .isometries import IsometryFamily, check_isometries, evaluation_map, random_isometries

logger = logging.getLogger(__name__)


class CovariantKernel(BlockOperator):
    """A kernel stored as its full block Gram matrix over supported pairs."""

    @classmethod
    def from_dense(cls, system: RepSystem, matrix: np.ndarray, drop_zero: bool = False) -> "CovariantKernel":
        op = BlockOperator.from_dense(system, matrix, drop_zero=drop_zero)
        return cls(system, op.blocks)


def kernel_from_dense(system: RepSystem, matrix: np.ndarray) -> CovariantKernel:
    return CovariantKernel.from_dense(system, matrix)


def kernel_from_isometries(fam: IsometryFamily, tol: Optional[Tolerances] = None) -> CovariantKernel:
    """
    K = (1/|H|) sum_h W(h)^* W(h), i.e.

        <w|K(rho,pi) v> = sqrt(d_pi d_rho) (1/|H|) sum_h <ctr_rho(V U(h) w), ctr_pi(V U(h) v)>.
    """
    check_isometries(fam, tol)
    system = fam.system
    gram = np.zeros((system.dim, system.dim), dtype=complex)
    for h in system.group.subgroup:
        w = evaluation_map(fam, h)
        gram += w.conj().T @ w
    gram /= system.group.subgroup_order
    metrics.increment_kernels_built()
    return CovariantKernel.from_dense(system, gram)


def random_kernel(system: RepSystem, seed: int, aux_dim: Optional[int] = None) -> CovariantKernel:
    return kernel_from_isometries(random_isometries(system, seed, aux_dim))


def validate_kernel(kernel: CovariantKernel, tol: Optional[Tolerances] = None) -> ValidationReport:
    """
    Check the kernel conditions, each with a residual:

    bounded (automatic in finite dimension), h_covariance, positive, trace,
    support, hermitian and norm_bound.
    """
    tol = tol or DEFAULT_TOLERANCES
    system = kernel.system
    report = ValidationReport("kernel")
    dense = kernel.to_dense()
    scale = 1.0 + max_abs(dense)

    report.add("bounded", True, note="automatic in finite dimension")

    worst, witness = 0.0, None
    for h in system.group.subgroup:
        for (rho, pi), block in kernel.items():
            residual = max_abs(block @ system.u_block(pi, h) - system.u_block(rho, h) @ block)
            if residual > worst:
                worst, witness = residual, {"h": int(h), "pair": [rho, pi]}
    report.add("h_covariance", worst <= tol.equality * scale, worst, witness)

    ok, residual, vec = psd_check(dense, tol.psd)
    report.add("positive", ok, residual, None if ok or vec is None else {"eigenvector": vec})

    worst, witness = 0.0, None
    for p in system.support:
        d, m = system.d(p), system.m(p)
        residual = max_abs(partial_trace_block(kernel.block(p, p), d, m) - d * np.eye(m))
        if residual > worst:
            worst, witness = residual, {"label": p}
    report.add("trace", worst <= tol.equality * scale, worst, witness)

    stray = [f"{rho},{pi}" for (rho, pi) in kernel.blocks if rho not in system.blocks or pi not in system.blocks]
    report.add("support", not stray, float(len(stray)), {"pairs": stray} if stray else None,
               note="blocks live on supported pairs by construction")

    worst, witness = 0.0, None
    for (rho, pi), block in kernel.items():
        residual = max_abs(block.conj().T - kernel.block(pi, rho))
        if residual > worst:
            worst, witness = residual, {"pair": [rho, pi]}
    report.add("hermitian", worst <= tol.equality * scale, worst, witness)

    worst, witness = 0.0, None
    for (rho, pi), block in kernel.items():
        excess = operator_norm(block) - system.d(rho) * system.d(pi)
        if excess > worst:
            worst, witness = excess, {"pair": [rho, pi]}
    report.add("norm_bound", worst <= tol.equality * scale, worst, witness)

    metrics.increment_kernels_validated()
    if not report.ok:
        metrics.increment_validation_failures()
        logger.debug(f"Kernel validation failed: {report.failed()}")
    return report


def check_kernel(kernel: CovariantKernel, tol: Optional[Tolerances] = None) -> None:
    report = validate_kernel(kernel, tol)
    if not report.ok:
        raise InvalidKernel(f"Kernel fails {report.failed()}", report.to_document())


def mix_kernels(k1: CovariantKernel, k2: CovariantKernel, t: float) -> CovariantKernel:
    """Blockwise t K1 + (1 - t) K2."""
    if not same_system(k1.system, k2.system):
        raise SystemMismatch("Kernels belong to different systems")
    if not 0.0 <= t <= 1.0:
        raise BadWeight(f"Mixing weight must lie in [0, 1], got {t}", {"t": t})
    return CovariantKernel.from_dense(k1.system, t * k1.to_dense() + (1.0 - t) * k2.to_dense())


def _require_scalar_blocks(system: RepSystem) -> None:
    wide = [p for p in system.support if system.d(p) != 1 or system.m(p) != 1]
    if wide:
        raise ShapeMismatch(f"Correlation form needs d = m = 1 on the support, not for {wide}", {"labels": wide})


def correlation_matrix(kernel: CovariantKernel) -> np.ndarray:
    """K~ with K(rho, pi) = K~(rho, pi) |e_rho><e_pi| (characters of multiplicity one)."""
    _require_scalar_blocks(kernel.system)
    return kernel.to_dense()


def kernel_from_correlation(system: RepSystem, matrix: np.ndarray, tol: Optional[Tolerances] = None) -> CovariantKernel:
    """Kernel from a unit-diagonal PSD matrix indexed by the support."""
    tol = tol or DEFAULT_TOLERANCES
    _require_scalar_blocks(system)
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (system.dim, system.dim):
        raise ShapeMismatch(f"Correlation matrix must be {system.dim}x{system.dim}")
    if max_abs(np.diag(matrix) - 1.0) > tol.equality:
        raise InvalidKernel("Correlation matrix must have unit diagonal")
    return CovariantKernel.from_dense(system, matrix)
