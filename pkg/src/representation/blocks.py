#!/usr/bin/env python3
"""
Block operators on H = (+)_pi H_pi (x) K_pi.

Dense storage per block, sparse across block pairs: a missing (rho, pi)
entry is the zero block.
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterator, Tuple

import numpy as np

from ..errors import ShapeMismatch

if TYPE_CHECKING:
    from .system import RepSystem

BlockKey = Tuple[str, str]


@dataclass(eq=False)
class BlockOperator:
    system: "RepSystem"
    blocks: Dict[BlockKey, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        for (rho, pi), block in self.blocks.items():
            expected = (self.system.block_dim(rho), self.system.block_dim(pi))
            if block.shape != expected:
                raise ShapeMismatch(
                    f"Block ({rho},{pi}) has shape {block.shape}, expected {expected}",
                    {"pair": [rho, pi]},
                )

    def block(self, rho: str, pi: str) -> np.ndarray:
        found = self.blocks.get((rho, pi))
        if found is not None:
            return found
        return np.zeros((self.system.block_dim(rho), self.system.block_dim(pi)), dtype=complex)

    def items(self) -> Iterator[Tuple[BlockKey, np.ndarray]]:
        return iter(self.blocks.items())

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.system.dim, self.system.dim), dtype=complex)
        for (rho, pi), block in self.blocks.items():
            out[self.system.block_slice(rho), self.system.block_slice(pi)] = block
        return out

    @classmethod
    def from_dense(cls, system: "RepSystem", matrix: np.ndarray, drop_zero: bool = True) -> "BlockOperator":
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (system.dim, system.dim):
            raise ShapeMismatch(f"Operator must be {system.dim}x{system.dim}, got {matrix.shape}")
        blocks = {}
        for rho in system.support:
            for pi in system.support:
                block = matrix[system.block_slice(rho), system.block_slice(pi)].copy()
                if drop_zero and not np.any(block):
                    continue
                blocks[(rho, pi)] = block
        return cls(system, blocks)

    def adjoint(self) -> "BlockOperator":
        return BlockOperator(self.system, {(pi, rho): b.conj().T for (rho, pi), b in self.blocks.items()})

    def __matmul__(self, other: "BlockOperator") -> "BlockOperator":
        return BlockOperator.from_dense(self.system, self.to_dense() @ other.to_dense())

    def __add__(self, other: "BlockOperator") -> "BlockOperator":
        return BlockOperator.from_dense(self.system, self.to_dense() + other.to_dense())

    def scale(self, factor: complex) -> "BlockOperator":
        return BlockOperator(self.system, {k: factor * b for k, b in self.blocks.items()})

    def trace(self) -> complex:
        return complex(sum(np.trace(b) for (rho, pi), b in self.blocks.items() if rho == pi))
