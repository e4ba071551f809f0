#!/usr/bin/env python3
"""
Small finite groups and their irreps, in the element numbering used by the
fixtures (identity is element 0).
"""

from itertools import permutations
from typing import List, Tuple

import numpy as np

from ..group.irreps import Irrep, make_irrep


def cyclic_table(n: int) -> np.ndarray:
    g = np.arange(n)
    return (g[:, np.newaxis] + g[np.newaxis, :]) % n


def direct_product_table(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Table of A x B with (x, y) numbered x * |B| + y."""
    na, nb = a.shape[0], b.shape[0]
    x = np.arange(na * nb) // nb
    y = np.arange(na * nb) % nb
    return a[x[:, None], x[None, :]] * nb + b[y[:, None], y[None, :]]


def cyclic_characters(n: int, prefix: str = "chi") -> List[Irrep]:
    """chi_k(g) = exp(2 pi i k g / n), k = 0..n-1."""
    g = np.arange(n)
    return [make_irrep(f"{prefix}{k}", np.exp(2j * np.pi * k * g / n)) for k in range(n)]


def s3_elements() -> List[Tuple[int, ...]]:
    """Permutations of (0, 1, 2) in lexicographic order; the identity comes first."""
    return list(permutations(range(3)))


def s3_table() -> np.ndarray:
    """(a b)(i) = a(b(i))."""
    elements = s3_elements()
    index = {p: k for k, p in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=int)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[tuple(a[b[k]] for k in range(3))]
    return table


def _permutation_matrix(p: Tuple[int, ...]) -> np.ndarray:
    m = np.zeros((3, 3))
    for i, j in enumerate(p):
        m[j, i] = 1.0
    return m


def _sign(p: Tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def s3_irreps() -> List[Irrep]:
    """Trivial, sign and the two-dimensional standard representation."""
    elements = s3_elements()
    # orthonormal basis of the complement of (1, 1, 1)
    basis = np.array([[1.0, 1.0], [-1.0, 1.0], [0.0, -2.0]]) / np.array([np.sqrt(2.0), np.sqrt(6.0)])
    standard = [basis.T @ _permutation_matrix(p) @ basis for p in elements]
    return [
        make_irrep("trivial", np.ones(len(elements))),
        make_irrep("sign", np.array([_sign(p) for p in elements], dtype=float)),
        make_irrep("standard", np.array(standard)),
    ]


def s3_transposition() -> int:
    """Element index of the transposition swapping 0 and 1."""
    return s3_elements().index((1, 0, 2))
