#!/usr/bin/env python3
"""
The Davies construction E(X) = (1/|G|) sum_{g in q^-1(X)} U(g) C U(g)^*.
"""

import logging
from typing import Optional, Union

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import NotHCommuting, NotNormalized, NotPositive, ShapeMismatch
from ..kernel.kernel import CovariantKernel
from ..observability.metrics import metrics
from ..representation.blocks import BlockOperator
from ..representation.system import RepSystem
from ..utils.linalg import max_abs, psd_check
from .povm import CovariantPovm

logger = logging.getLogger(__name__)


def group_average(system: RepSystem, c: np.ndarray) -> np.ndarray:
    """(1/|G|) sum_g U(g) C U(g)^*."""
    u = system.unitaries
    return (u @ c[np.newaxis] @ np.conj(np.transpose(u, (0, 2, 1)))).mean(axis=0)


def davies_povm(system: RepSystem, seed: Union[BlockOperator, np.ndarray],
                tol: Optional[Tolerances] = None) -> CovariantPovm:
    """
    Covariant POVM from a positive, H-commuting, normalised seed operator C.

    Raises:
        NotPositive, NotHCommuting, NotNormalized (details carry the defect operator)
    """
    tol = tol or DEFAULT_TOLERANCES
    c = seed.to_dense() if isinstance(seed, BlockOperator) else np.asarray(seed, dtype=complex)
    if c.shape != (system.dim, system.dim):
        raise ShapeMismatch(f"Seed must be {system.dim}x{system.dim}, got {c.shape}")
    scale = 1.0 + max_abs(c)

    ok, residual, _ = psd_check(c, tol.psd)
    if not ok or max_abs(c - c.conj().T) > tol.equality * scale:
        raise NotPositive(f"Seed operator is not positive (min eigenvalue -{residual:.3g})")

    for h in system.group.subgroup:
        u = system.u(h)
        residual = max_abs(c @ u - u @ c)
        if residual > tol.equality * scale:
            raise NotHCommuting(f"Seed does not commute with U({h})", {"h": int(h), "residual": residual})

    defect = group_average(system, c) - np.eye(system.dim)
    if max_abs(defect) > tol.equality * scale:
        raise NotNormalized("Group average of the seed is not the identity", {"defect": defect})

    group = system.group
    effects = np.zeros((group.num_cosets, system.dim, system.dim), dtype=complex)
    for g in range(group.order):
        u = system.u(g)
        effects[group.q(g)] += u @ c @ u.conj().T
    effects /= group.order
    metrics.increment_povms_built()
    return CovariantPovm(system, effects)


def seed_from_kernel(kernel: CovariantKernel) -> np.ndarray:
    """A valid kernel is itself an admissible seed: davies_povm(K) = povm_from_kernel(K)."""
    return kernel.to_dense()
