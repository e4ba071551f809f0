#!/usr/bin/env python3
"""
JSON document codecs.

Every document carries ``"format": 1`` and a ``"kind"``. Complex matrices
are nested ``[re, im]`` arrays. References to other documents (``group-ref``,
``irreps-ref``, ``system-ref``) are resolved by the workspace; the decoders
here take already-loaded objects.
"""

import json
import logging
from typing import Any, Dict, Mapping, Optional

import numpy as np

from ..config.models import Tolerances
from ..errors import FileError, SchemaError, ShapeMismatch
from ..group.core import GroupData, load_group
from ..group.irreps import IrrepSet, make_irrep, validate_irreps
from ..kernel.kernel import CovariantKernel
from ..povm.povm import CovariantPovm
from ..representation.system import RepSystem, build_system
from ..utils.formatting import decode_matrix, encode_matrix, to_jsonable

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _header(kind: str) -> Dict[str, Any]:
    return {"format": FORMAT_VERSION, "kind": kind}


def check_header(document: Any, kind: str) -> None:
    """
    Raises:
        SchemaError: if the document is not an object of the given kind and format
    """
    if not isinstance(document, Mapping):
        raise SchemaError(f"{kind} document must be a JSON object", pointer="")
    if document.get("format") != FORMAT_VERSION:
        raise SchemaError(f"Unsupported format {document.get('format')!r}, expected {FORMAT_VERSION}",
                          pointer="/format")
    if "kind" in document and document["kind"] != kind:
        raise SchemaError(f"Expected a {kind} document, got {document['kind']!r}", pointer="/kind")


def require(document: Mapping[str, Any], key: str, pointer: str = "") -> Any:
    if key not in document:
        raise SchemaError(f"Missing '{key}'", pointer=f"{pointer}/{key}")
    return document[key]


def read_matrix(raw: Any, pointer: str, shape: Optional[tuple] = None) -> np.ndarray:
    try:
        matrix = decode_matrix(raw)
    except (TypeError, ValueError, IndexError) as e:
        raise SchemaError(f"Malformed matrix: {e}", pointer=pointer)
    if not np.isfinite(matrix).all():
        raise SchemaError("Matrix entries must be finite", pointer=pointer)
    if shape is not None and matrix.shape != shape:
        raise SchemaError(f"Matrix must be {shape[0]}x{shape[1]}, got {matrix.shape[0]}x{matrix.shape[1]}",
                          pointer=pointer)
    return matrix


# group / irreps / system

def encode_group(group: GroupData) -> Dict[str, Any]:
    return {**_header("group"), "order": group.order, "mult": group.mult.tolist(),
            "subgroup": list(group.subgroup)}


def decode_group(document: Mapping[str, Any]) -> GroupData:
    check_header(document, "group")
    return load_group(document)


def encode_irreps(irreps: IrrepSet, group_ref: str, digits: int = 12) -> Dict[str, Any]:
    return {
        **_header("irreps"),
        "group-ref": group_ref,
        "irreps": [
            {"label": p.label, "dim": p.dim, "matrices": [encode_matrix(m, digits) for m in p.matrices]}
            for p in irreps
        ],
    }


def decode_irreps(document: Mapping[str, Any], group: GroupData,
                  tol: Optional[Tolerances] = None) -> IrrepSet:
    check_header(document, "irreps")
    entries = require(document, "irreps")
    if not isinstance(entries, list):
        raise SchemaError("irreps must be a list", pointer="/irreps")
    raw = []
    for i, entry in enumerate(entries):
        pointer = f"/irreps/{i}"
        if not isinstance(entry, Mapping):
            raise SchemaError("Irrep entry must be an object", pointer=pointer)
        label = require(entry, "label", pointer)
        matrices = require(entry, "matrices", pointer)
        if not isinstance(matrices, list) or len(matrices) != group.order:
            raise SchemaError(f"Irrep needs one matrix per element ({group.order})", pointer=f"{pointer}/matrices")
        mats = [read_matrix(m, f"{pointer}/matrices/{g}") for g, m in enumerate(matrices)]
        shapes = {m.shape for m in mats}
        if len(shapes) != 1:
            raise SchemaError("Irrep matrices differ in shape", pointer=f"{pointer}/matrices")
        try:
            raw.append(make_irrep(label, np.array(mats), entry.get("dim")))
        except ShapeMismatch as e:
            raise SchemaError(e.message, pointer=pointer, details=e.details)
    return validate_irreps(group, raw, tol)


def encode_system(system: RepSystem, group_ref: str, irreps_ref: str) -> Dict[str, Any]:
    return {**_header("system"), "group-ref": group_ref, "irreps-ref": irreps_ref,
            "mult": {label: system.m(label) for label in system.irreps.labels}}


def decode_system(document: Mapping[str, Any], group: GroupData, irreps: IrrepSet) -> RepSystem:
    check_header(document, "system")
    mult = require(document, "mult")
    if not isinstance(mult, Mapping):
        raise SchemaError("mult must be an object {label: multiplicity}", pointer="/mult")
    return build_system(group, irreps, mult)


# kernels / POVMs / operators

def block_key(rho: str, pi: str) -> str:
    return f"{rho},{pi}"


def encode_kernel(kernel: CovariantKernel, system_ref: str, digits: int = 12) -> Dict[str, Any]:
    return {
        **_header("kernel"),
        "system-ref": system_ref,
        "blocks": {block_key(r, p): encode_matrix(b, digits) for (r, p), b in kernel.items()},
    }


def decode_kernel(document: Mapping[str, Any], system: RepSystem) -> CovariantKernel:
    """Missing blocks are zero; unknown or unsupported labels are schema errors."""
    check_header(document, "kernel")
    blocks = require(document, "blocks")
    if not isinstance(blocks, Mapping):
        raise SchemaError("blocks must be an object", pointer="/blocks")
    dense = np.zeros((system.dim, system.dim), dtype=complex)
    for key, raw in blocks.items():
        pointer = f"/blocks/{key}"
        rho, sep, pi = str(key).partition(",")
        if not sep or rho not in system.blocks or pi not in system.blocks:
            raise SchemaError(f"Block key must be 'rho,pi' over supported irreps, got {key!r}", pointer=pointer)
        rs, ps = system.block_slice(rho), system.block_slice(pi)
        dense[rs, ps] = read_matrix(raw, pointer, (rs.stop - rs.start, ps.stop - ps.start))
    return CovariantKernel.from_dense(system, dense)


def encode_povm(povm: CovariantPovm, system_ref: str, digits: int = 12) -> Dict[str, Any]:
    return {
        **_header("povm"),
        "system-ref": system_ref,
        "effects": {str(w): encode_matrix(e, digits) for w, e in enumerate(povm.effects)},
    }


def decode_povm(document: Mapping[str, Any], system: RepSystem) -> CovariantPovm:
    check_header(document, "povm")
    effects = require(document, "effects")
    n, count = system.dim, system.group.num_cosets
    if not isinstance(effects, Mapping) or sorted(effects) != sorted(str(w) for w in range(count)):
        raise SchemaError(f"effects must have keys 0..{count - 1}", pointer="/effects")
    stack = np.array([read_matrix(effects[str(w)], f"/effects/{w}", (n, n)) for w in range(count)])
    return CovariantPovm(system, stack.reshape(count, n, n))


def encode_operator(matrix: np.ndarray, system_ref: str, kind: str = "operator", digits: int = 12) -> Dict[str, Any]:
    return {**_header(kind), "system-ref": system_ref, "matrix": encode_matrix(matrix, digits)}


def decode_operator(document: Mapping[str, Any], system: RepSystem, kind: str = "operator") -> np.ndarray:
    """A dense dim H x dim H matrix; a ``state`` may instead give a unit ``vector``."""
    check_header(document, kind)
    n = system.dim
    if kind == "state" and "vector" in document and "matrix" not in document:
        raw = document["vector"]
        if not isinstance(raw, list):
            raise SchemaError("vector must be a list", pointer="/vector")
        v = read_matrix([raw], "/vector", (1, n))[0]
        return np.outer(v, v.conj())
    return read_matrix(require(document, "matrix"), "/matrix", (n, n))


# text

def dump_document(document: Any, digits: int = 12) -> str:
    """Sorted keys, floats rounded to ``digits`` significant digits."""
    return json.dumps(to_jsonable(document, digits), sort_keys=True, indent=2) + "\n"


def read_json(path: str) -> Any:
    """
    Raises:
        FileError: if the file cannot be read
        SchemaError: if it is not valid JSON
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FileError(f"Cannot read {path}: {e.strerror or e}", {"path": path})
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})", pointer="", details={"path": path})


def write_json(path: str, document: Any, digits: int = 12) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_document(document, digits))
    except OSError as e:
        raise FileError(f"Cannot write {path}: {e.strerror or e}", {"path": path})
    logger.debug(f"Wrote {path}")
