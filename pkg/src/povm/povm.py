#!/usr/bin/env python3
"""
Covariant POVMs and their conversion to and from kernels.

Omega is finite, so a POVM is stored by its atoms E({omega}); E(X) for a
subset X is assembled on demand.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import NotAState, ShapeMismatch
from ..kernel.isometries import IsometryFamily, check_isometries, evaluation_map
from ..kernel.kernel import CovariantKernel, check_kernel
from ..observability.metrics import metrics
from ..representation.system import RepSystem
from ..utils.linalg import max_abs, psd_check

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class CovariantPovm:
    system: RepSystem
    effects: np.ndarray

    def __post_init__(self):
        expected = (self.system.group.num_cosets, self.system.dim, self.system.dim)
        self.effects = np.asarray(self.effects, dtype=complex)
        if self.effects.shape != expected:
            raise ShapeMismatch(f"Effects must have shape {expected}, got {self.effects.shape}")

    @property
    def num_outcomes(self) -> int:
        return self.effects.shape[0]

    def effect(self, outcomes: Iterable[int]) -> np.ndarray:
        """E(X) = sum_{omega in X} E({omega})."""
        total = np.zeros((self.system.dim, self.system.dim), dtype=complex)
        for omega in set(int(o) for o in outcomes):
            total += self.effects[omega]
        return total


def povm_from_kernel(kernel: CovariantKernel, tol: Optional[Tolerances] = None,
                     representatives: Optional[Sequence[int]] = None) -> CovariantPovm:
    """
    E({omega}) = (1/|Omega|) U(g) K U(g)^*  with g a representative of omega.

    ``representatives`` overrides the default smallest-index choice; any
    element of each coset gives the same POVM for a valid kernel.

    Raises:
        InvalidKernel: if the kernel fails validation
    """
    check_kernel(kernel, tol)
    system = kernel.system
    group = system.group
    reps = list(group.representatives) if representatives is None else [int(r) for r in representatives]
    for omega, g in enumerate(reps):
        if group.q(g) != omega:
            raise ValueError(f"Element {g} does not lie in coset {omega}")

    k = kernel.to_dense()
    u = system.unitaries[reps]
    effects = u @ k[np.newaxis, :, :] @ np.conj(np.transpose(u, (0, 2, 1))) / group.num_cosets
    metrics.increment_povms_built()
    return CovariantPovm(system, effects)


def kernel_from_povm(povm: CovariantPovm, tol: Optional[Tolerances] = None) -> CovariantKernel:
    """
    K = |Omega| * E({q(e)}), split into blocks.

    Raises:
        InvalidPovm: if the POVM fails validation
    """
    from .validation import check_povm

    check_povm(povm, tol)
    group = povm.system.group
    return CovariantKernel.from_dense(povm.system, group.num_cosets * povm.effects[group.q(group.identity)])


def povm_from_isometries(fam: IsometryFamily, tol: Optional[Tolerances] = None) -> CovariantPovm:
    """
    E({omega}) = (1/|G|) sum_{g in q^-1(omega)} W(g)^* W(g), with
    W(g) v_pi = sqrt(d_pi) ctr_pi((pi(g)^-1 (x) V_pi) v_pi).
    """
    check_isometries(fam, tol)
    system = fam.system
    group = system.group
    effects = np.zeros((group.num_cosets, system.dim, system.dim), dtype=complex)
    for g in range(group.order):
        w = evaluation_map(fam, g)
        effects[group.q(g)] += w.conj().T @ w
    effects /= group.order
    metrics.increment_povms_built()
    return CovariantPovm(system, effects)


def outcome_distribution(povm: CovariantPovm, state: np.ndarray, tol: Optional[Tolerances] = None) -> np.ndarray:
    """
    p(omega) = tr(T E({omega})).

    Raises:
        NotAState: if T is not a positive trace-one dim H x dim H matrix
    """
    tol = tol or DEFAULT_TOLERANCES
    state = np.asarray(state, dtype=complex)
    n = povm.system.dim
    if state.shape != (n, n):
        raise NotAState(f"State must be {n}x{n}, got {state.shape}")
    if max_abs(state - state.conj().T) > tol.equality:
        raise NotAState("State is not Hermitian")
    ok, residual, _ = psd_check(state, tol.psd)
    if not ok:
        raise NotAState(f"State is not positive (min eigenvalue -{residual:.3g})")
    if abs(np.trace(state) - 1.0) > tol.equality:
        raise NotAState(f"State has trace {np.trace(state).real:.6g}, expected 1")
    probs = np.real(np.einsum("ij,wji->w", state, povm.effects))
    return probs


def is_projective(povm: CovariantPovm, tol: Optional[Tolerances] = None) -> bool:
    """True iff every atom is idempotent and distinct atoms multiply to zero."""
    tol = tol or DEFAULT_TOLERANCES
    effects = povm.effects
    products = np.einsum("aij,bjk->abik", effects, effects)
    for a in range(povm.num_outcomes):
        for b in range(povm.num_outcomes):
            target = effects[a] if a == b else 0.0
            if max_abs(products[a, b] - target) > tol.equality * 10:
                return False
    return True
