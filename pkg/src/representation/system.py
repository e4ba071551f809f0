#!/usr/bin/env python3
"""
The representation system: multiplicities m_pi, the space
H = (+)_pi H_pi (x) K_pi and U = (+)_pi pi (x) I_{K_pi}, together with the
contraction, embedding and partial trace maps.

Basis convention inside a block H_pi (x) K_pi: index j * d_pi + a, where a
runs over H_pi (fast) and j over K_pi (slow). Hence pi(g) (x) I_m is stored
as kron(I_m, pi(g)) and I_d (x) T as kron(T, I_d).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
import scipy.linalg

from ..errors import SchemaError, ShapeMismatch, UnsupportedIrrep
from ..group.core import GroupData, generating_set
from ..group.irreps import IrrepSet
from .blocks import BlockOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RepSystem:
    group: GroupData
    irreps: IrrepSet
    mult: Dict[str, int]
    support: Tuple[str, ...]
    blocks: Dict[str, Tuple[int, int]]
    dim: int
    unitaries: np.ndarray

    def d(self, label: str) -> int:
        return self.irreps.get(label).dim

    def m(self, label: str) -> int:
        return self.mult.get(label, 0)

    def block_dim(self, label: str) -> int:
        return self.d(label) * self.m(label)

    def block_slice(self, label: str) -> slice:
        if label not in self.blocks:
            raise UnsupportedIrrep(f"Irrep {label} has multiplicity 0", {"label": label})
        start, stop = self.blocks[label]
        return slice(start, stop)

    def u_block(self, label: str, g: int) -> np.ndarray:
        """pi(g) (x) I_{m_pi} in the block basis."""
        return np.kron(np.eye(self.m(label)), self.irreps.get(label).matrices[g])

    def u(self, g: int) -> np.ndarray:
        return self.unitaries[g]

    def subgroup_unitaries(self) -> np.ndarray:
        return self.unitaries[list(self.group.subgroup)]


def build_system(group: GroupData, irreps: IrrepSet, multiplicities: Mapping[str, int]) -> RepSystem:
    """
    Assemble H and U from validated irreps and a multiplicity map.

    Labels missing from ``multiplicities`` get multiplicity 0. Blocks follow
    the irrep input order.
    """
    labels = irreps.labels
    unknown = sorted(set(multiplicities) - set(labels))
    if unknown:
        raise SchemaError(f"Multiplicities for unknown irreps: {unknown}", pointer="/mult")
    mult = {}
    for label in labels:
        m = multiplicities.get(label, 0)
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
            raise SchemaError(f"Multiplicity of {label} must be a non-negative integer", pointer=f"/mult/{label}")
        mult[label] = int(m)

    support = tuple(label for label in labels if mult[label] > 0)
    blocks = {}
    offset = 0
    for label in support:
        size = irreps.get(label).dim * mult[label]
        blocks[label] = (offset, offset + size)
        offset += size
    dim = offset

    unitaries = np.zeros((group.order, dim, dim), dtype=complex)
    for label in support:
        start, stop = blocks[label]
        eye = np.eye(mult[label])
        mats = irreps.get(label).matrices
        for g in range(group.order):
            unitaries[g, start:stop, start:stop] = np.kron(eye, mats[g])
    unitaries.setflags(write=False)

    logger.debug(f"Built system with support {support}, dim H = {dim}")
    return RepSystem(group=group, irreps=irreps, mult=mult, support=support,
                     blocks=blocks, dim=dim, unitaries=unitaries)


def apply_U(system: RepSystem, g: int) -> BlockOperator:
    """Block-diagonal operator with pi-block pi(g) (x) I_{m_pi}."""
    if not 0 <= g < system.group.order:
        raise ValueError(f"Element {g} out of range")
    return BlockOperator(system, {(p, p): system.u_block(p, g) for p in system.support})


def contract_pi(system: RepSystem, label: str, x: np.ndarray) -> np.ndarray:
    """
    Contraction over H_pi (x) H_pi*: x[i, j, :] -> sum_i x[i, i, :].

    Raises:
        ShapeMismatch: if x is not a d_pi x d_pi x dim(K_aux) array
    """
    d = system.d(label)
    x = np.asarray(x)
    if x.ndim != 3 or x.shape[0] != d or x.shape[1] != d:
        raise ShapeMismatch(f"Expected a {d}x{d}xK array for {label}, got {x.shape}", {"label": label})
    return np.einsum("iik->k", x)


def _dense(system: RepSystem, a: Union[BlockOperator, np.ndarray]) -> np.ndarray:
    if isinstance(a, BlockOperator):
        return a.to_dense()
    a = np.asarray(a, dtype=complex)
    if a.shape != (system.dim, system.dim):
        raise ShapeMismatch(f"Operator must be {system.dim}x{system.dim}, got {a.shape}")
    return a


def partial_trace_pi(system: RepSystem, label: str, a: Union[BlockOperator, np.ndarray]) -> np.ndarray:
    """Tr_{H_pi} of the (pi, pi) block, an m_pi x m_pi matrix."""
    if system.m(label) == 0:
        raise UnsupportedIrrep(f"Irrep {label} has multiplicity 0", {"label": label})
    if isinstance(a, BlockOperator):
        block = a.block(label, label)
    else:
        sl = system.block_slice(label)
        block = _dense(system, a)[sl, sl]
    return partial_trace_block(block, system.d(label), system.m(label))


def partial_trace_block(block: np.ndarray, d: int, m: int) -> np.ndarray:
    return np.einsum("iaja->ij", block.reshape(m, d, m, d))


def embed_pi(system: RepSystem, label: str, t: np.ndarray) -> BlockOperator:
    """I_{H_pi} (x) T placed in the (pi, pi) block."""
    m = system.m(label)
    if m == 0:
        raise UnsupportedIrrep(f"Irrep {label} has multiplicity 0", {"label": label})
    t = np.asarray(t, dtype=complex)
    if t.shape != (m, m):
        raise ShapeMismatch(f"T must be {m}x{m} for {label}, got {t.shape}", {"label": label})
    return BlockOperator(system, {(label, label): np.kron(t, np.eye(system.d(label)))})


def matrix_units(m: int) -> List[np.ndarray]:
    units = []
    for i in range(m):
        for j in range(m):
            e = np.zeros((m, m), dtype=complex)
            e[i, j] = 1.0
            units.append(e)
    return units


def basis_TU(system: RepSystem) -> List[BlockOperator]:
    """{I (x) E_ij on the pi block}: spans the commutant of U, sum_pi m_pi^2 elements."""
    return [embed_pi(system, label, e) for label in system.support for e in matrix_units(system.m(label))]


def commutant_dimension(system: RepSystem, tol: Optional[float] = 1e-9) -> int:
    """
    Dimension of {X : U(g) X = X U(g) for all g}, from the null space of the
    vectorised commutation equations over a generating set of G.
    """
    n = system.dim
    if n == 0:
        return 0
    eye = np.eye(n)
    rows = []
    for g in generating_set(system.group) or (0,):
        u = system.u(g)
        # row-major vec: vec(U X) = (U (x) I) vec X, vec(X U) = (I (x) U^T) vec X
        rows.append(np.kron(u, eye) - np.kron(eye, u.T))
    null = scipy.linalg.null_space(np.vstack(rows), rcond=tol)
    return int(null.shape[1])


def same_system(a: RepSystem, b: RepSystem) -> bool:
    """Structural equality of two systems (identity short-circuits)."""
    if a is b:
        return True
    if a.support != b.support or a.mult != b.mult or a.irreps.labels != b.irreps.labels:
        return False
    if a.group.subgroup != b.group.subgroup or not np.array_equal(a.group.mult, b.group.mult):
        return False
    return all(
        np.allclose(pa.matrices, pb.matrices)
        for pa, pb in zip(a.irreps.irreps, b.irreps.irreps)
    )
