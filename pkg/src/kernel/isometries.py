#!/usr/bin/env python3
"""
Isometry families V_pi : K_pi -> H_pi* (x) K and the K-valued evaluation maps
they induce on G.

Row layout of V_pi: index b * aux_dim + c, with b running over H_pi* and c
over the auxiliary space K.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import AuxTooSmall, IsometryViolation, ShapeMismatch
from ..povm.report import ValidationReport
from ..representation.system import RepSystem
from ..utils.linalg import max_abs, random_isometry

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class IsometryFamily:
    system: RepSystem
    aux_dim: int
    maps: Dict[str, np.ndarray]

    def reshaped(self, label: str) -> np.ndarray:
        """V_pi as a (d_pi, aux_dim, m_pi) array."""
        d = self.system.d(label)
        return self.maps[label].reshape(d, self.aux_dim, self.system.m(label))


def default_aux_dim(system: RepSystem) -> int:
    """Smallest auxiliary dimension admitting isometries: max ceil(m_pi / d_pi)."""
    return max([math.ceil(system.m(p) / system.d(p)) for p in system.support] or [1])


def validate_isometries(fam: IsometryFamily, tol: Optional[Tolerances] = None) -> ValidationReport:
    tol = tol or DEFAULT_TOLERANCES
    report = ValidationReport("isometries")
    system = fam.system

    too_small = [p for p in system.support if fam.aux_dim * system.d(p) < system.m(p)]
    report.add("aux_dimension", not too_small, float(len(too_small)),
               {"labels": too_small} if too_small else None)

    shapes_ok = set(fam.maps) == set(system.support) and all(
        fam.maps[p].shape == (system.d(p) * fam.aux_dim, system.m(p)) for p in fam.maps
    )
    report.add("shapes", shapes_ok)
    if not shapes_ok:
        return report

    worst, worst_label = 0.0, None
    for p in system.support:
        v = fam.maps[p]
        residual = max_abs(v.conj().T @ v - np.eye(system.m(p)))
        if residual > worst:
            worst, worst_label = residual, p
    report.add("isometry", worst <= tol.unitary, worst, {"label": worst_label} if worst_label else None)
    return report


def check_isometries(fam: IsometryFamily, tol: Optional[Tolerances] = None) -> None:
    report = validate_isometries(fam, tol)
    if not report.ok:
        raise IsometryViolation(f"Invalid isometry family: failed {report.failed()}", report.to_document())


def make_family(system: RepSystem, aux_dim: int, maps: Mapping[str, np.ndarray]) -> IsometryFamily:
    arrays = {p: np.asarray(maps[p], dtype=complex) for p in system.support if p in maps}
    missing = [p for p in system.support if p not in maps]
    if missing:
        raise ShapeMismatch(f"No isometry given for {missing}", {"labels": missing})
    return IsometryFamily(system=system, aux_dim=int(aux_dim), maps=arrays)


def random_isometries(system: RepSystem, seed: int, aux_dim: Optional[int] = None) -> IsometryFamily:
    """
    Orthonormalised complex Gaussian (d_pi * aux_dim) x m_pi matrices,
    deterministic in ``seed``.

    Raises:
        AuxTooSmall: if aux_dim * d_pi < m_pi for some supported pi
    """
    aux = default_aux_dim(system) if aux_dim is None else int(aux_dim)
    for p in system.support:
        if aux * system.d(p) < system.m(p):
            raise AuxTooSmall(
                f"aux_dim {aux} too small for {p}: {aux}*{system.d(p)} < {system.m(p)}",
                {"label": p, "aux_dim": aux},
            )
    rng = np.random.default_rng(seed)
    maps = {p: random_isometry(system.d(p) * aux, system.m(p), rng) for p in system.support}
    return IsometryFamily(system=system, aux_dim=aux, maps=maps)


def isometries_from_vectors(system: RepSystem, vectors: Mapping[str, Sequence[complex]]) -> IsometryFamily:
    """
    V_pi = |v_pi><e_pi| for systems whose supported irreps are characters of
    multiplicity one; each v_pi must be a unit vector of a common length.
    """
    for p in system.support:
        if system.d(p) != 1 or system.m(p) != 1:
            raise ShapeMismatch(f"Vector parameterisation needs d = m = 1, not for {p}", {"label": p})
    arrays = {p: np.asarray(vectors[p], dtype=complex).reshape(-1, 1) for p in system.support}
    lengths = {a.shape[0] for a in arrays.values()}
    if len(lengths) != 1:
        raise ShapeMismatch(f"Vectors must share one length, got {sorted(lengths)}")
    fam = IsometryFamily(system=system, aux_dim=lengths.pop(), maps=arrays)
    check_isometries(fam)
    return fam


def evaluation_map(fam: IsometryFamily, g: int) -> np.ndarray:
    """
    W(g): H -> K with W(g) v_pi = sqrt(d_pi) ctr_pi((pi(g)^-1 (x) V_pi) v_pi),
    an aux_dim x dim H matrix.
    """
    system = fam.system
    out = np.zeros((fam.aux_dim, system.dim), dtype=complex)
    for p in system.support:
        d, m = system.d(p), system.m(p)
        inv = system.irreps.get(p).matrices[g].conj().T
        # out[c, j*d + a] = sqrt(d) * sum_b inv[b, a] V[b, c, j]
        block = np.sqrt(d) * np.einsum("ba,bcj->cja", inv, fam.reshaped(p))
        out[:, system.block_slice(p)] = block.reshape(fam.aux_dim, m * d)
    return out
