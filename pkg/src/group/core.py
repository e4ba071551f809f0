#!/usr/bin/env python3
"""
Finite groups given by multiplication tables, a distinguished subgroup H and
the coset space Omega = G/H with its left G-action.

Element 0 is always the identity. Cosets are left cosets gH, each labelled by
its smallest element (the representative) and ordered by representative.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence, Tuple

import numpy as np

from ..errors import NotAGroup, NotASubgroup, SchemaError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupData:
    order: int
    mult: np.ndarray
    identity: int
    inverse: np.ndarray
    subgroup: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[int, ...]
    coset_of: np.ndarray
    action: np.ndarray

    @property
    def num_cosets(self) -> int:
        return len(self.cosets)

    @property
    def subgroup_order(self) -> int:
        return len(self.subgroup)

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def q(self, g: int) -> int:
        """Canonical projection G -> Omega."""
        return int(self.coset_of[g])

    def act(self, g: int, omega: int) -> int:
        """Left action g . omega on Omega."""
        return int(self.action[g, omega])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def check_group_table(mult: np.ndarray) -> np.ndarray:
    """
    Verify that ``mult`` is a group table with identity 0.

    Returns:
        np.ndarray: the inverse array

    Raises:
        NotAGroup: on a failed identity, inverse or associativity check
    """
    n = mult.shape[0]
    idx = np.arange(n)

    if np.any(mult < 0) or np.any(mult >= n):
        raise NotAGroup("Multiplication table entries out of range", {"order": n})

    if not (np.array_equal(mult[0, :], idx) and np.array_equal(mult[:, 0], idx)):
        bad = int(np.flatnonzero((mult[0, :] != idx) | (mult[:, 0] != idx))[0])
        raise NotAGroup(f"Element 0 is not an identity (fails at element {bad})", {"element": bad})

    inverse = np.full(n, -1, dtype=int)
    for g in range(n):
        right = np.flatnonzero(mult[g, :] == 0)
        if right.size != 1 or mult[right[0], g] != 0:
            raise NotAGroup(f"Element {g} has no two-sided inverse", {"element": g})
        inverse[g] = right[0]

    left = mult[mult[:, :, None], idx[None, None, :]]
    right = mult[idx[:, None, None], mult[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(x) for x in bad[0])
        raise NotAGroup(
            f"Multiplication is not associative at ({a}, {b}, {c})",
            {"triple": [a, b, c]},
        )
    return inverse


def check_subgroup(mult: np.ndarray, inverse: np.ndarray, subgroup: Sequence[int]) -> Tuple[int, ...]:
    """Validate and sort the subgroup element list."""
    n = mult.shape[0]
    elements = sorted(set(int(h) for h in subgroup))
    if any(h < 0 or h >= n for h in elements):
        raise NotASubgroup("Subgroup element out of range", {"subgroup": elements})
    if 0 not in elements:
        raise NotASubgroup("Subgroup does not contain the identity", {"subgroup": elements})
    members = set(elements)
    for a in elements:
        if int(inverse[a]) not in members:
            raise NotASubgroup(f"Subgroup not closed under inverse at {a}", {"element": a})
        for b in elements:
            if int(mult[a, b]) not in members:
                raise NotASubgroup(
                    f"Subgroup not closed: {a}*{b} = {int(mult[a, b])}",
                    {"pair": [a, b], "product": int(mult[a, b])},
                )
    return tuple(elements)


def build_group(mult: Any, subgroup: Sequence[int]) -> GroupData:
    """Validate a table and subgroup and compute cosets, representatives and the action."""
    mult = np.asarray(mult, dtype=int)
    if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
        raise NotAGroup("Multiplication table must be a non-empty square array", {"shape": list(mult.shape)})
    n = mult.shape[0]
    inverse = check_group_table(mult)
    h = check_subgroup(mult, inverse, subgroup)

    coset_of = np.full(n, -1, dtype=int)
    cosets = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        members = tuple(sorted(int(mult[g, x]) for x in h))
        # g is the smallest unassigned element, hence the smallest in its coset
        coset_of[list(members)] = len(cosets)
        cosets.append(members)
    representatives = tuple(c[0] for c in cosets)

    action = coset_of[mult[:, list(representatives)]]

    logger.debug(f"Built group of order {n}, |H|={len(h)}, |Omega|={len(cosets)}")
    return GroupData(
        order=n,
        mult=_frozen(mult.copy()),
        identity=0,
        inverse=_frozen(inverse),
        subgroup=h,
        cosets=tuple(cosets),
        representatives=representatives,
        coset_of=_frozen(coset_of),
        action=_frozen(np.asarray(action, dtype=int)),
    )


def load_group(document: Mapping[str, Any]) -> GroupData:
    """
    Build a GroupData from a group document ``{order, mult, subgroup}``.

    Raises:
        SchemaError: on missing or mistyped fields
        NotAGroup / NotASubgroup: on failed group axioms
    """
    for key in ("order", "mult", "subgroup"):
        if key not in document:
            raise SchemaError(f"Group document is missing '{key}'", pointer=f"/{key}")
    order = document["order"]
    if not isinstance(order, int) or order <= 0:
        raise SchemaError("order must be a positive integer", pointer="/order")
    mult = document["mult"]
    if not isinstance(mult, list) or len(mult) != order:
        raise SchemaError(f"mult must have {order} rows", pointer="/mult")
    for i, row in enumerate(mult):
        if not isinstance(row, list) or len(row) != order or not all(isinstance(x, int) for x in row):
            raise SchemaError(f"mult row {i} must hold {order} integers", pointer=f"/mult/{i}")
    subgroup = document["subgroup"]
    if not isinstance(subgroup, list) or not all(isinstance(x, int) for x in subgroup):
        raise SchemaError("subgroup must be a list of integers", pointer="/subgroup")
    return build_group(mult, subgroup)


def coset_average(group: GroupData, f: Callable[[int], complex]) -> Tuple[complex, complex]:
    """
    Both sides of the finite Mackey-Bruhat identity

        (1/|G|) sum_g f(g) = (1/|Omega|) sum_omega (1/|H|) sum_h f(rep(omega) h).
    """
    values = np.array([f(g) for g in range(group.order)], dtype=complex)
    group_mean = complex(values.mean())
    h = list(group.subgroup)
    coset_mean = complex(np.mean([values[group.mult[r, h]].mean() for r in group.representatives]))
    return group_mean, coset_mean


def commutator_subgroup(group: GroupData, elements: Sequence[int]) -> Tuple[int, ...]:
    """Subgroup generated by the commutators a b a^-1 b^-1 of ``elements``."""
    mult, inv = group.mult, group.inverse
    generated = {0}
    for a in elements:
        for b in elements:
            generated.add(int(mult[mult[a, b], mult[inv[a], inv[b]]]))
    frontier = list(generated)
    while frontier:
        new = []
        for x in frontier:
            for y in list(generated):
                for z in (int(mult[x, y]), int(mult[y, x])):
                    if z not in generated:
                        generated.add(z)
                        new.append(z)
        frontier = new
    return tuple(sorted(generated))


def generated_subgroup(group: GroupData, generators: Sequence[int]) -> Tuple[int, ...]:
    """Closure of ``generators`` under multiplication."""
    generated = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for s in generators:
                y = int(group.mult[x, s])
                if y not in generated:
                    generated.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(generated))


def generating_set(group: GroupData) -> Tuple[int, ...]:
    """Greedy generating set: add the smallest element not yet generated."""
    generators = []
    generated = {0}
    for g in range(group.order):
        if g not in generated:
            generators.append(g)
            generated = set(generated_subgroup(group, generators))
    return tuple(generators)
