#!/usr/bin/env python3
"""
Characters: the annihilator of H, the Fourier transform on Omega = G/H and the
one-dimensional characters of the subgroup H.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import CharacterNotInAnnihilator, NotAbelian
from ..utils.linalg import common_eigenspaces
from .core import GroupData, commutator_subgroup
from .irreps import Irrep, IrrepSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SubgroupCharacter:
    """A one-dimensional unitary character lambda of H, indexed like ``elements``."""

    elements: Tuple[int, ...]
    values: np.ndarray

    def __call__(self, h: int) -> complex:
        return complex(self.values[self.elements.index(h)])

    def is_trivial(self, tol: float = 1e-9) -> bool:
        return bool(np.all(np.abs(self.values - 1.0) <= tol))


def character_values(chi: Union[Irrep, np.ndarray]) -> np.ndarray:
    """Values chi(g) for g in G of a character given as an Irrep or an array."""
    if isinstance(chi, Irrep):
        return chi.character()
    return np.asarray(chi, dtype=complex)


def character_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=complex) * np.asarray(b, dtype=complex)


def character_inverse(a: np.ndarray) -> np.ndarray:
    """Pointwise inverse of a unit-modulus character."""
    return np.conj(np.asarray(a, dtype=complex))


def _require_abelian(group: GroupData, irreps: Optional[IrrepSet] = None) -> None:
    if not group.is_abelian():
        raise NotAbelian("Group is not abelian")
    if irreps is not None:
        wide = [p.label for p in irreps if p.dim != 1]
        if wide:
            raise NotAbelian(f"Characters expected, found irreps of dimension > 1: {wide}", {"labels": wide})


def in_annihilator(group: GroupData, chi: np.ndarray, tol: float) -> bool:
    return bool(np.all(np.abs(chi[list(group.subgroup)] - 1.0) <= tol))


def annihilator(group: GroupData, irreps: IrrepSet, tol: Optional[Tolerances] = None) -> List[str]:
    """
    Labels of H-perp = {pi : pi(h) = 1 for all h in H}.

    Raises:
        NotAbelian: if the group is not abelian or an irrep is not a character
    """
    tol = tol or DEFAULT_TOLERANCES
    _require_abelian(group, irreps)
    labels = [p.label for p in irreps if in_annihilator(group, p.character(), tol.unitary)]
    logger.debug(f"Annihilator of H has {len(labels)} of {len(irreps)} characters")
    return labels


def fourier_on_quotient(group: GroupData, f: Sequence[complex], chi: Union[Irrep, np.ndarray],
                        tol: Optional[Tolerances] = None) -> complex:
    """
    (1/|Omega|) sum_omega f(omega) chi(omega)^-1 for chi in H-perp,
    with chi(omega) := chi(rep(omega)).

    Raises:
        NotAbelian: for a non-abelian group
        CharacterNotInAnnihilator: if chi is not constant on cosets
    """
    tol = tol or DEFAULT_TOLERANCES
    _require_abelian(group)
    values = character_values(chi)
    if not in_annihilator(group, values, tol.unitary):
        raise CharacterNotInAnnihilator("Character is not trivial on H")
    f = np.asarray(f, dtype=complex)
    if f.shape != (group.num_cosets,):
        raise ValueError(f"f must have one value per coset ({group.num_cosets}), got shape {f.shape}")
    on_cosets = values[list(group.representatives)]
    return complex(np.mean(f * np.conj(on_cosets)))


def _snap_to_root_of_unity(z: complex, n: int) -> complex:
    k = int(np.round(np.angle(z) * n / (2 * np.pi))) % n
    return complex(np.exp(2j * np.pi * k / n)) if k else 1.0 + 0.0j


def characters_of_subgroup(group: GroupData) -> List[SubgroupCharacter]:
    """
    All one-dimensional characters of H, via its abelianisation H/[H,H].

    The commutator subgroup is closed up, the quotient table is built, and the
    translation operators of the quotient's regular representation are
    simultaneously diagonalised; each joint eigenvector is one character.
    Trivial character first, the rest ordered by their phase pattern.
    """
    h = group.subgroup
    derived = set(commutator_subgroup(group, h))

    # cosets of [H,H] inside H
    class_of = {}
    classes: List[Tuple[int, ...]] = []
    for x in h:
        if x in class_of:
            continue
        members = tuple(sorted(group.mul(x, c) for c in derived))
        for m in members:
            class_of[m] = len(classes)
        classes.append(members)
    k = len(classes)

    # regular representation of the quotient: L(c) e_x = e_{c x}
    reps = [c[0] for c in classes]
    translations = []
    for a in reps:
        op = np.zeros((k, k), dtype=complex)
        for x, rx in enumerate(reps):
            op[class_of[group.mul(a, rx)], x] = 1.0
        translations.append(op)

    spaces = common_eigenspaces(translations) if k > 1 else [np.ones((1, 1), dtype=complex)]
    characters = []
    for space in spaces:
        for col in range(space.shape[1]):
            v = space[:, col]
            quotient_values = [_snap_to_root_of_unity(np.vdot(v, op @ v), k) for op in translations]
            values = np.array([quotient_values[class_of[x]] for x in h], dtype=complex)
            characters.append(values)

    def _phase_key(values: np.ndarray):
        return tuple(int(np.round(np.angle(z) * k / (2 * np.pi))) % k for z in values)

    characters.sort(key=_phase_key)
    result = [SubgroupCharacter(elements=tuple(h), values=v) for v in characters]
    if len(result) != k:
        logger.warning(f"Expected {k} characters of H, found {len(result)}")
    logger.debug(f"|H|={len(h)}, |[H,H]|={len(derived)}, {k} characters")
    return result
