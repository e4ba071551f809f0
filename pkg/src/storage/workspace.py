#!/usr/bin/env python3
"""
Workspace: loads documents from disk, resolves their ``*-ref`` fields
relative to the referring file and keeps every loaded object keyed by its
absolute path.
"""

import logging
import os
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import SchemaError, SystemMismatch
from ..group.core import GroupData
from ..group.irreps import IrrepSet
from ..kernel.kernel import CovariantKernel, check_kernel
from ..povm.povm import CovariantPovm
from ..povm.validation import check_povm
from ..representation.system import RepSystem, same_system
from . import documents

logger = logging.getLogger(__name__)


def resolve_ref(referrer: str, ref: str) -> str:
    """Absolute path of ``ref`` read relative to the directory of ``referrer``."""
    if os.path.isabs(ref):
        return os.path.normpath(ref)
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(referrer)), ref))


def relative_ref(target: str, referrer: str) -> str:
    """Reference to write into ``referrer`` so that it resolves to ``target``."""
    base = os.path.dirname(os.path.abspath(referrer))
    return os.path.relpath(os.path.abspath(target), base).replace(os.sep, "/")


class Workspace:
    """Loaded groups, irreps, systems, kernels and POVMs keyed by absolute path."""

    def __init__(self, tol: Optional[Tolerances] = None):
        self.tol = tol or DEFAULT_TOLERANCES
        self.groups: Dict[str, GroupData] = {}
        self.irreps: Dict[str, IrrepSet] = {}
        self.systems: Dict[str, RepSystem] = {}
        self.kernels: Dict[str, CovariantKernel] = {}
        self.povms: Dict[str, CovariantPovm] = {}
        self.system_paths: Dict[int, str] = {}

    def _ref(self, path: str, document: Dict[str, Any], key: str) -> str:
        ref = documents.require(document, key)
        if not isinstance(ref, str) or not ref:
            raise SchemaError(f"{key} must be a non-empty path", pointer=f"/{key}")
        return resolve_ref(path, ref)

    def load_group(self, path: str) -> GroupData:
        key = os.path.abspath(path)
        if key not in self.groups:
            self.groups[key] = documents.decode_group(documents.read_json(path))
            logger.debug(f"Loaded group {key}")
        return self.groups[key]

    def load_irreps(self, path: str) -> IrrepSet:
        key = os.path.abspath(path)
        if key not in self.irreps:
            doc = documents.read_json(path)
            documents.check_header(doc, "irreps")
            group = self.load_group(self._ref(path, doc, "group-ref"))
            self.irreps[key] = documents.decode_irreps(doc, group, self.tol)
        return self.irreps[key]

    def load_system(self, path: str) -> RepSystem:
        key = os.path.abspath(path)
        if key not in self.systems:
            doc = documents.read_json(path)
            documents.check_header(doc, "system")
            group = self.load_group(self._ref(path, doc, "group-ref"))
            irreps = self.load_irreps(self._ref(path, doc, "irreps-ref"))
            system = documents.decode_system(doc, group, irreps)
            self.systems[key] = system
            self.system_paths[id(system)] = key
            logger.info(f"Loaded system {key} (dim H = {system.dim})")
        return self.systems[key]

    def _owning_system(self, path: str, doc: Dict[str, Any], expected: Optional[RepSystem]) -> RepSystem:
        system = self.load_system(self._ref(path, doc, "system-ref"))
        if expected is not None and not same_system(system, expected):
            raise SystemMismatch(f"{path} refers to a different system")
        return system

    def load_kernel(self, path: str, validate: bool = True, system: Optional[RepSystem] = None) -> CovariantKernel:
        """
        Raises:
            InvalidKernel: if ``validate`` and the kernel fails validation
        """
        key = os.path.abspath(path)
        if key not in self.kernels:
            doc = documents.read_json(path)
            documents.check_header(doc, "kernel")
            owner = self._owning_system(path, doc, system)
            self.kernels[key] = documents.decode_kernel(doc, owner)
        kernel = self.kernels[key]
        if validate:
            check_kernel(kernel, self.tol)
        return kernel

    def load_povm(self, path: str, validate: bool = True, system: Optional[RepSystem] = None) -> CovariantPovm:
        key = os.path.abspath(path)
        if key not in self.povms:
            doc = documents.read_json(path)
            documents.check_header(doc, "povm")
            owner = self._owning_system(path, doc, system)
            self.povms[key] = documents.decode_povm(doc, owner)
        povm = self.povms[key]
        if validate:
            check_povm(povm, self.tol)
        return povm

    def load_operator(self, path: str, kind: str = "operator",
                      system: Optional[RepSystem] = None) -> Tuple[np.ndarray, RepSystem]:
        """A dense operator document and the system it refers to."""
        doc = documents.read_json(path)
        documents.check_header(doc, kind)
        owner = self._owning_system(path, doc, system)
        return documents.decode_operator(doc, owner, kind), owner

    def system_path(self, system: RepSystem) -> Optional[str]:
        return self.system_paths.get(id(system))
