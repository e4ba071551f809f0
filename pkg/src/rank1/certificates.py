#!/usr/bin/env python3
"""
Rank-one kernels K(rho, pi) = |f(rho)><f(pi)|.

They exist iff there is a character lambda of H such that, for every
supported rho, m_rho <= d_rho and the lambda-isotypic subspace of rho|_H has
dimension at least m_rho. Every rank-one kernel is extremal.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import scipy.linalg

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import CertificateViolation
from ..extremal.rkhs import factorize_kernel
from ..group.abelian import SubgroupCharacter, characters_of_subgroup
from ..kernel.kernel import CovariantKernel, check_kernel
from ..observability.metrics import metrics
from ..representation.system import RepSystem
from ..utils.formatting import encode_matrix
from ..utils.linalg import max_abs, random_unitary

logger = logging.getLogger(__name__)

PROJECTOR_THRESHOLD = 0.5

REASON_MULTIPLICITY = "multiplicity exceeds dimension"
REASON_NO_CHARACTER = "no common character of H"


@dataclass(frozen=True, eq=False)
class Rank1Certificate:
    system: RepSystem
    character: SubgroupCharacter
    isotypic: Dict[str, np.ndarray]
    vectors: Dict[str, np.ndarray]

    def to_document(self, digits: int = 12) -> Dict[str, Any]:
        return {
            "lambda": {str(h): [float(np.real(z)), float(np.imag(z))]
                       for h, z in zip(self.character.elements, self.character.values)},
            "isotypic": {label: encode_matrix(basis, digits) for label, basis in self.isotypic.items()},
            "vectors": {label: encode_matrix(f, digits) for label, f in self.vectors.items()},
        }


def isotypic_projector(system: RepSystem, label: str, character: SubgroupCharacter) -> np.ndarray:
    """P = (1/|H|) sum_h conj(lambda(h)) rho(h)."""
    mats = system.irreps.get(label).matrices[list(character.elements)]
    return np.einsum("h,hab->ab", np.conj(character.values), mats) / len(character.elements)


def _phase_fixed(v: np.ndarray, tol: float) -> np.ndarray:
    """Rotate by a unit phase so that the first entry above ``tol`` is real positive."""
    lead = np.flatnonzero(np.abs(v) > tol)
    if lead.size == 0:
        return v
    z = v[lead[0]]
    return v * (abs(z) / z)


def _lex_key(v: np.ndarray, digits: int = 9) -> Tuple[float, ...]:
    # larger entries sort first
    return tuple(x for z in v for x in (-round(float(z.real), digits), -round(float(z.imag), digits)))


def isotypic_basis(projector: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """
    Orthonormal basis of ran P, d x k.

    Eigenvectors of P by descending eigenvalue; eigenvectors sharing an
    eigenvalue are phase-fixed and ordered lexicographically. The rank is
    the number of eigenvalues above one half.
    """
    evals, evecs = scipy.linalg.eigh(0.5 * (projector + projector.conj().T))
    k = int(np.count_nonzero(evals > PROJECTOR_THRESHOLD))
    vecs = [_phase_fixed(evecs[:, i].astype(complex), tol) for i in range(evecs.shape[1])]
    order = sorted(range(len(vecs)), key=lambda i: (-round(float(evals[i]), 6), _lex_key(vecs[i])))
    basis = np.zeros((projector.shape[0], k), dtype=complex)
    for col, i in enumerate(order[:k]):
        basis[:, col] = vecs[i]
    return basis


def rank1_obstruction(system: RepSystem) -> Optional[str]:
    """A reason no rank-one kernel exists, or None if one does."""
    if any(system.m(p) > system.d(p) for p in system.support):
        return REASON_MULTIPLICITY
    if not rank1_existence(system):
        return REASON_NO_CHARACTER
    return None


def rank1_existence(system: RepSystem) -> List[Rank1Certificate]:
    """One certificate per admissible character of H, in character order."""
    if any(system.m(p) > system.d(p) for p in system.support):
        logger.debug("No rank-one kernels: some multiplicity exceeds its dimension")
        return []
    certificates = []
    for character in characters_of_subgroup(system.group):
        isotypic = {}
        for label in system.support:
            basis = isotypic_basis(isotypic_projector(system, label, character))
            if basis.shape[1] < system.m(label):
                break
            isotypic[label] = basis
        else:
            vectors = {label: isotypic[label][:, :system.m(label)] for label in system.support}
            certificates.append(Rank1Certificate(system=system, character=character,
                                                 isotypic=isotypic, vectors=vectors))
    metrics.increment_rank1_certificates(len(certificates))
    logger.debug(f"{len(certificates)} rank-one certificate(s)")
    return certificates


def check_certificate(cert: Rank1Certificate, tol: Optional[Tolerances] = None) -> None:
    """
    Raises:
        CertificateViolation: if some f_n^rho is not an orthonormal
            lambda-eigenvector or the shapes are inconsistent
    """
    tol = tol or DEFAULT_TOLERANCES
    system = cert.system
    for label in system.support:
        d, m = system.d(label), system.m(label)
        f = cert.vectors.get(label)
        if f is None or f.shape != (d, m):
            raise CertificateViolation(f"Certificate vectors for {label} must be {d}x{m}", {"label": label})
        if max_abs(f.conj().T @ f - np.eye(m)) > tol.unitary:
            raise CertificateViolation(f"Vectors for {label} are not orthonormal", {"label": label})
        mats = system.irreps.get(label).matrices
        for h, lam in zip(cert.character.elements, cert.character.values):
            residual = max_abs(mats[h] @ f - lam * f)
            if residual > tol.unitary:
                raise CertificateViolation(
                    f"rho(h) f != lambda(h) f for {label} at h={h}",
                    {"label": label, "h": int(h), "residual": residual},
                )


def rank1_feature(system: RepSystem, vectors: Dict[str, np.ndarray]) -> np.ndarray:
    """f = (+)_rho d_rho^{1/2} sum_n f_n^rho (x) k_n^rho, a vector of length dim H."""
    f = np.zeros(system.dim, dtype=complex)
    for label in system.support:
        f[system.block_slice(label)] = np.sqrt(system.d(label)) * vectors[label].T.reshape(-1)
    return f


def build_rank1(cert: Rank1Certificate, tol: Optional[Tolerances] = None) -> CovariantKernel:
    tol = tol or DEFAULT_TOLERANCES
    check_certificate(cert, tol)
    f = rank1_feature(cert.system, cert.vectors)
    kernel = CovariantKernel.from_dense(cert.system, np.outer(f, f.conj()))
    check_kernel(kernel, tol)
    metrics.increment_kernels_built()
    return kernel


def random_rank1(cert: Rank1Certificate, seed: int, tol: Optional[Tolerances] = None) -> CovariantKernel:
    """Rank-one kernel from a random orthonormal choice inside each isotypic subspace."""
    rng = np.random.default_rng(seed)
    vectors = {}
    for label, basis in cert.isotypic.items():
        q = random_unitary(basis.shape[1], rng)
        vectors[label] = basis @ q[:, :cert.system.m(label)]
    rotated = Rank1Certificate(system=cert.system, character=cert.character,
                               isotypic=cert.isotypic, vectors=vectors)
    return build_rank1(rotated, tol)


def is_rank1(kernel: CovariantKernel, tol: Optional[Tolerances] = None) -> bool:
    return factorize_kernel(kernel, tol).rank == 1


def rank1_vector(kernel: CovariantKernel, tol: Optional[Tolerances] = None) -> np.ndarray:
    """f with K = |f><f|, up to a global phase."""
    fact = factorize_kernel(kernel, tol)
    if fact.rank != 1:
        raise ValueError(f"Kernel has rank {fact.rank}, not 1")
    return fact.stacked[0].conj()
