#!/usr/bin/env python3
"""
Number formatting for JSON reports.
"""

from typing import Any, List

import numpy as np


def round_sig(x: float, digits: int = 12) -> float:
    """Round to ``digits`` significant digits; -0.0 becomes 0.0."""
    value = float(f"{float(x):.{digits}g}")
    return value + 0.0


def complex_pair(z: complex, digits: int = 12) -> List[float]:
    return [round_sig(np.real(z), digits), round_sig(np.imag(z), digits)]


def encode_matrix(a: np.ndarray, digits: int = 12) -> List[List[List[float]]]:
    """Nested ``[re, im]`` rows for a complex matrix."""
    a = np.asarray(a, dtype=complex)
    return [[complex_pair(z, digits) for z in row] for row in a]


def decode_matrix(rows: Any) -> np.ndarray:
    """Inverse of :func:`encode_matrix`; accepts bare reals in place of pairs."""
    def _entry(e):
        if isinstance(e, (list, tuple)):
            return complex(float(e[0]), float(e[1]))
        return complex(float(e))

    if len(rows) == 0:
        return np.zeros((0, 0), dtype=complex)
    return np.array([[_entry(e) for e in row] for row in rows], dtype=complex).reshape(len(rows), -1)


def to_jsonable(obj: Any, digits: int = 12) -> Any:
    """Recursively convert numpy scalars/arrays and floats to rounded JSON values."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return to_jsonable(obj.tolist(), digits)
        return to_jsonable(obj.tolist(), digits)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(obj, digits)
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_pair(obj, digits)
    return obj
