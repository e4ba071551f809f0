#!/usr/bin/env python3
"""
Irreducible unitary representations supplied as matrices, and their validation.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import EquivalentPair, NotHomomorphism, NotUnitary, Reducible, ShapeMismatch
from ..utils.linalg import dagger, max_abs
from .core import GroupData

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Irrep:
    """An irrep pi: ``matrices[g]`` is the d x d unitary pi(g)."""

    label: str
    dim: int
    matrices: np.ndarray

    def character(self) -> np.ndarray:
        return np.trace(self.matrices, axis1=1, axis2=2)

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]


@dataclass(frozen=True, eq=False)
class IrrepSet:
    irreps: Tuple[Irrep, ...]
    inequivalent: bool
    complete: bool

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(p.label for p in self.irreps)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def get(self, label: str) -> Irrep:
        return self.irreps[self.index(label)]

    def __iter__(self):
        return iter(self.irreps)

    def __len__(self) -> int:
        return len(self.irreps)


def make_irrep(label: str, matrices: Sequence, dim: Optional[int] = None) -> Irrep:
    """Build an Irrep from nested matrices; checks shapes only."""
    arr = np.asarray(matrices, dtype=complex)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1, 1)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ShapeMismatch(f"Irrep {label}: matrices must be square", {"label": label, "shape": list(arr.shape)})
    d = arr.shape[1] if dim is None else dim
    if arr.shape[1] != d:
        raise ShapeMismatch(f"Irrep {label}: declared dim {d} but matrices are {arr.shape[1]}x{arr.shape[1]}",
                            {"label": label})
    arr = arr.copy()
    arr.setflags(write=False)
    return Irrep(label=str(label), dim=int(d), matrices=arr)


def character_inner(group: GroupData, chi_a: np.ndarray, chi_b: np.ndarray) -> complex:
    """(1/|G|) sum_g conj(chi_a(g)) chi_b(g)."""
    return complex(np.vdot(chi_a, chi_b) / group.order)


def check_irrep(group: GroupData, irrep: Irrep, tol: Tolerances) -> None:
    """Raise if ``irrep`` is not a unitary irreducible homomorphism of ``group``."""
    mats = irrep.matrices
    d = irrep.dim
    if mats.shape[0] != group.order:
        raise ShapeMismatch(
            f"Irrep {irrep.label}: {mats.shape[0]} matrices for a group of order {group.order}",
            {"label": irrep.label},
        )

    eye = np.eye(d)
    defects = np.abs(mats @ dagger(mats) - eye).max(axis=(1, 2))
    worst = int(np.argmax(defects))
    if defects[worst] > tol.unitary:
        raise NotUnitary(f"Irrep {irrep.label} is not unitary at element {worst}",
                         {"label": irrep.label, "element": worst, "residual": float(defects[worst])})

    if max_abs(mats[0] - eye) > tol.unitary:
        raise NotHomomorphism(f"Irrep {irrep.label} does not map the identity to I", {"label": irrep.label})
    products = np.einsum("aij,bjk->abik", mats, mats)
    defects = np.abs(products - mats[group.mult]).max(axis=(2, 3))
    a, b = np.unravel_index(int(np.argmax(defects)), defects.shape)
    if defects[a, b] > tol.unitary:
        raise NotHomomorphism(
            f"Irrep {irrep.label}: pi({a})pi({b}) != pi({group.mult[a, b]})",
            {"label": irrep.label, "pair": [int(a), int(b)], "residual": float(defects[a, b])},
        )

    chi = irrep.character()
    norm = character_inner(group, chi, chi).real
    if abs(norm - 1.0) > tol.unitary * max(1, d):
        raise Reducible(f"Irrep {irrep.label} is reducible (character norm {norm:.6g})",
                        {"label": irrep.label, "norm": norm})


def validate_irreps(group: GroupData, raw: Sequence[Irrep], tol: Optional[Tolerances] = None) -> IrrepSet:
    """
    Validate a list of irreps against ``group``.

    Raises:
        NotUnitary, NotHomomorphism, Reducible, EquivalentPair, ShapeMismatch
    """
    tol = tol or DEFAULT_TOLERANCES
    labels: Dict[str, int] = {}
    for i, irrep in enumerate(raw):
        if irrep.label in labels:
            raise EquivalentPair(f"Duplicate irrep label {irrep.label}", {"pair": [irrep.label, irrep.label]})
        labels[irrep.label] = i
        check_irrep(group, irrep, tol)

    chars = [p.character() for p in raw]
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            overlap = abs(character_inner(group, chars[i], chars[j]))
            if overlap > tol.unitary * max(1, raw[i].dim * raw[j].dim):
                raise EquivalentPair(
                    f"Irreps {raw[i].label} and {raw[j].label} are equivalent",
                    {"pair": [raw[i].label, raw[j].label], "overlap": overlap},
                )

    complete = sum(p.dim ** 2 for p in raw) == group.order
    logger.debug(f"Validated {len(raw)} irreps (complete={complete})")
    return IrrepSet(irreps=tuple(raw), inequivalent=True, complete=complete)
