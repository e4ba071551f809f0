#!/usr/bin/env python3
"""
Fixture catalogue: named systems written as group / irreps / system
documents plus reference kernels (and, for z4-h2, a reference POVM).

Reference kernels carry an ``expected`` entry with their known extremality.
"""

import logging
import os
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Sequence

import numpy as np

from ..errors import UnknownFixture
from ..group.core import build_group
from ..group.irreps import Irrep, validate_irreps
from ..kernel.isometries import isometries_from_vectors
from ..kernel.kernel import CovariantKernel, kernel_from_dense, kernel_from_isometries
from ..povm.povm import povm_from_kernel
from ..representation.system import RepSystem, build_system
from ..storage import documents
from .groups import cyclic_characters, cyclic_table, s3_irreps, s3_table, s3_transposition

logger = logging.getLogger(__name__)

GROUP_FILE = "group.json"
IRREPS_FILE = "irreps.json"
SYSTEM_FILE = "system.json"


@dataclass(eq=False)
class Fixture:
    name: str
    system: RepSystem
    kernels: Dict[str, CovariantKernel]
    expected: Dict[str, bool]


def _system(table: np.ndarray, subgroup: Sequence[int], irreps: List[Irrep],
            mult: Mapping[str, int]) -> RepSystem:
    group = build_group(table, subgroup)
    return build_system(group, validate_irreps(group, irreps), mult)


def z2_kernel(system: RepSystem, c: complex) -> CovariantKernel:
    """K~ = [[1, c], [conj(c), 1]] on Z2 with trivial H."""
    return kernel_from_dense(system, np.array([[1.0, c], [np.conj(c), 1.0]], dtype=complex))


def _z2_std() -> Fixture:
    system = _system(cyclic_table(2), [0], cyclic_characters(2), {"chi0": 1, "chi1": 1})
    kernels = {"c0": z2_kernel(system, 0.0), "c05": z2_kernel(system, 0.5), "c1": z2_kernel(system, 1.0)}
    return Fixture("z2-std", system, kernels, {"c0": False, "c05": False, "c1": True})


def z3_gram_vectors() -> Dict[str, np.ndarray]:
    return {
        "chi0": np.array([1.0, 0.0]),
        "chi1": np.array([0.0, 1.0]),
        "chi2": np.array([1.0, 1.0]) / np.sqrt(2.0),
    }


def _z3_std() -> Fixture:
    system = _system(cyclic_table(3), [0], cyclic_characters(3), {"chi0": 1, "chi1": 1, "chi2": 1})
    etas = z3_gram_vectors()
    labels = system.support
    gram = np.array([[np.vdot(etas[r], etas[p]) for p in labels] for r in labels])
    kernels = {
        "gram": kernel_from_dense(system, gram),
        "ones": kernel_from_dense(system, np.ones((3, 3), dtype=complex)),
        "identity": kernel_from_dense(system, np.eye(3, dtype=complex)),
    }
    return Fixture("z3-std", system, kernels, {"gram": False, "ones": True, "identity": False})


def _z4_h2() -> Fixture:
    system = _system(cyclic_table(4), [0, 2], cyclic_characters(4), {f"chi{k}": 1 for k in range(4)})
    vectors = {
        "chi0": [1.0, 0.0],
        "chi1": [0.0, 1.0],
        "chi2": [1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0)],
        "chi3": [1.0 / np.sqrt(2.0), -1.0j / np.sqrt(2.0)],
    }
    kernel = kernel_from_isometries(isometries_from_vectors(system, vectors))
    return Fixture("z4-h2", system, {"vectors": kernel}, {})


def _z2_m2() -> Fixture:
    system = _system(cyclic_table(2), [0], cyclic_characters(2), {"chi0": 2, "chi1": 1})
    return Fixture("z2-m2", system, {"identity": kernel_from_dense(system, np.eye(3, dtype=complex))}, {})


def _s3_m2() -> Fixture:
    system = _system(s3_table(), [0, s3_transposition()], s3_irreps(),
                     {"trivial": 1, "sign": 1, "standard": 2})
    return Fixture("s3-m2", system, {"identity": kernel_from_dense(system, np.eye(system.dim, dtype=complex))}, {})


FIXTURES: Dict[str, Callable[[], Fixture]] = {
    "z2-std": _z2_std,
    "z3-std": _z3_std,
    "z4-h2": _z4_h2,
    "z2-m2": _z2_m2,
    "s3-m2": _s3_m2,
}


def build_fixture(name: str) -> Fixture:
    """
    Raises:
        UnknownFixture: if ``name`` is not in the catalogue
    """
    if name not in FIXTURES:
        raise UnknownFixture(f"Unknown fixture '{name}' (known: {sorted(FIXTURES)})", {"name": name})
    return FIXTURES[name]()


def emit_fixture(name: str, digits: int = 12) -> Dict[str, Dict[str, Any]]:
    """All documents of a fixture keyed by file name; references are sibling file names."""
    fixture = build_fixture(name)
    system = fixture.system
    docs = {
        GROUP_FILE: documents.encode_group(system.group),
        IRREPS_FILE: documents.encode_irreps(system.irreps, GROUP_FILE, digits),
        SYSTEM_FILE: documents.encode_system(system, GROUP_FILE, IRREPS_FILE),
    }
    for key, kernel in fixture.kernels.items():
        doc = documents.encode_kernel(kernel, SYSTEM_FILE, digits)
        if key in fixture.expected:
            doc["expected"] = {"extremal": fixture.expected[key]}
        docs[f"kernel-{key}.json"] = doc
    if name == "z4-h2":
        povm = povm_from_kernel(fixture.kernels["vectors"])
        docs["povm-reference.json"] = documents.encode_povm(povm, SYSTEM_FILE, digits)
    logger.info(f"Fixture {name}: {len(docs)} documents")
    return docs


def write_fixture(name: str, directory: str, digits: int = 12) -> List[str]:
    docs = emit_fixture(name, digits)
    os.makedirs(directory, exist_ok=True)
    written = []
    for filename, doc in sorted(docs.items()):
        path = os.path.join(directory, filename)
        documents.write_json(path, doc, digits)
        written.append(path)
    return written
