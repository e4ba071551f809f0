#!/usr/bin/env python3
"""
Shared fixtures for the covpovm tests.
"""

import numpy as np
import pytest
import scipy.linalg

from src.fixtures.catalog import FIXTURES, build_fixture
from src.observability.metrics import metrics
from src.povm.davies import group_average
from src.representation.system import RepSystem

ROUND_TRIP_FIXTURES = ["z2-std", "z3-std", "z4-h2", "s3-m2"]


@pytest.fixture(autouse=True)
def reset_metrics():
    """Start every test with zeroed counters."""
    metrics.reset()
    yield


@pytest.fixture
def z2():
    return build_fixture("z2-std")


@pytest.fixture
def z3():
    return build_fixture("z3-std")


@pytest.fixture
def z4():
    return build_fixture("z4-h2")


@pytest.fixture
def z2m2():
    return build_fixture("z2-m2")


@pytest.fixture
def s3():
    return build_fixture("s3-m2")


@pytest.fixture(params=ROUND_TRIP_FIXTURES)
def fixture_system(request) -> RepSystem:
    """Each round-trip fixture system in turn."""
    return build_fixture(request.param).system


@pytest.fixture(params=sorted(FIXTURES))
def any_fixture(request):
    return build_fixture(request.param)


def random_davies_seed(system: RepSystem, seed: int) -> np.ndarray:
    """
    A positive, H-commuting seed with group average I: H-average a random
    positive matrix A, then conjugate by S^{-1/2} where S is the G-average
    (S lies in the commutant of U, so the result stays H-commuting).
    """
    rng = np.random.default_rng(seed)
    n = system.dim
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = x @ x.conj().T + 0.1 * np.eye(n)
    u = system.subgroup_unitaries()
    a = np.mean(u @ a[np.newaxis] @ u.conj().transpose(0, 2, 1), axis=0)
    s = group_average(system, a)
    evals, evecs = scipy.linalg.eigh(0.5 * (s + s.conj().T))
    s_inv_half = evecs @ np.diag(evals ** -0.5) @ evecs.conj().T
    c = s_inv_half @ a @ s_inv_half
    return 0.5 * (c + c.conj().T)
