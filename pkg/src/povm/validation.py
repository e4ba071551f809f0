#!/usr/bin/env python3
"""
POVM validation: positivity, E <= I, normalisation and exhaustive covariance.
"""

import logging
from typing import Optional

import numpy as np

from ..config.models import DEFAULT_TOLERANCES, Tolerances
from ..errors import InvalidPovm
from ..observability.metrics import metrics
from ..utils.linalg import max_abs, psd_check
from .povm import CovariantPovm
from .report import ValidationReport

logger = logging.getLogger(__name__)


def validate_povm(povm: CovariantPovm, tol: Optional[Tolerances] = None) -> ValidationReport:
    tol = tol or DEFAULT_TOLERANCES
    system = povm.system
    group = system.group
    n = system.dim
    eye = np.eye(n)
    report = ValidationReport("povm")

    worst = max((max_abs(e - e.conj().T) for e in povm.effects), default=0.0)
    report.add("hermitian", worst <= tol.equality, worst)

    worst, witness = 0.0, None
    for omega, e in enumerate(povm.effects):
        ok, residual, vec = psd_check(e, tol.psd)
        if not ok and residual >= worst:
            worst, witness = residual, {"omega": omega, "eigenvector": vec}
    report.add("positive", witness is None, worst, witness)

    worst, witness = 0.0, None
    for omega, e in enumerate(povm.effects):
        ok, residual, vec = psd_check(eye - e, tol.psd)
        if not ok and residual >= worst:
            worst, witness = residual, {"omega": omega, "eigenvector": vec}
    report.add("bounded_by_identity", witness is None, worst, witness)

    residual = max_abs(povm.effects.sum(axis=0) - eye)
    report.add("normalized", residual <= tol.equality, residual)

    worst, witness = 0.0, None
    for g in range(group.order):
        u = system.u(g)
        for omega in range(group.num_cosets):
            residual = max_abs(u @ povm.effects[omega] @ u.conj().T - povm.effects[group.act(g, omega)])
            if residual > worst:
                worst, witness = residual, {"g": g, "omega": omega}
    report.add("covariant", worst <= tol.equality, worst, witness)

    report.add("sigma_additive", True, note="structural: atoms of a finite outcome space")

    metrics.increment_povms_validated()
    if not report.ok:
        metrics.increment_validation_failures()
        logger.debug(f"POVM validation failed: {report.failed()}")
    return report


def check_povm(povm: CovariantPovm, tol: Optional[Tolerances] = None) -> None:
    report = validate_povm(povm, tol)
    if not report.ok:
        raise InvalidPovm(f"POVM fails {report.failed()}", report.to_document())
