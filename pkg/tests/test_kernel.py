#!/usr/bin/env python3
"""
Unit tests for isometry families and covariant kernels.
"""

import numpy as np
import pytest

from src.errors import AuxTooSmall, BadWeight, InvalidKernel, IsometryViolation, ShapeMismatch
from src.kernel.isometries import default_aux_dim, isometries_from_vectors, make_family, random_isometries, validate_isometries
from src.kernel.kernel import (
    check_kernel, correlation_matrix, kernel_from_correlation, kernel_from_dense, kernel_from_isometries, mix_kernels,
    random_kernel, validate_kernel,
)
from src.observability.metrics import metrics
from src.representation.system import partial_trace_pi
from src.utils.linalg import random_unitary


class TestIsometries:
    """Random and hand-made isometry families."""

    def test_default_aux_dim(self, s3, z2m2):
        assert default_aux_dim(s3.system) == 1
        assert default_aux_dim(z2m2.system) == 2

    def test_aux_too_small(self, z2m2):
        with pytest.raises(AuxTooSmall):
            random_isometries(z2m2.system, seed=1, aux_dim=1)

    def test_random_family_is_isometric(self, s3):
        fam = random_isometries(s3.system, seed=5, aux_dim=3)
        assert validate_isometries(fam).ok

    def test_non_isometry_rejected(self, z2):
        fam = make_family(z2.system, 1, {"chi0": np.array([[2.0]]), "chi1": np.array([[1.0]])})
        report = validate_isometries(fam)
        assert not report.ok
        assert report.failed() == ["isometry"]

    def test_vectors_need_unit_norm(self, z2):
        with pytest.raises(IsometryViolation):
            isometries_from_vectors(z2.system, {"chi0": [1.0, 1.0], "chi1": [1.0, 0.0]})

    def test_vectors_need_scalar_blocks(self, s3):
        with pytest.raises(ShapeMismatch):
            isometries_from_vectors(s3.system, {})


class TestKernel:
    """Kernel construction and validation."""

    def test_random_kernels_are_valid(self, fixture_system):
        for seed in range(100):
            kernel = random_kernel(fixture_system, seed, default_aux_dim(fixture_system) + seed % 3)
            report = validate_kernel(kernel)
            assert report.ok, report.failed()
            for name in ("h_covariance", "positive", "trace"):
                assert report.condition(name).residual < 1e-9

    def test_trace_condition(self, s3):
        kernel = random_kernel(s3.system, 11)
        for p in s3.system.support:
            d, m = s3.system.d(p), s3.system.m(p)
            np.testing.assert_allclose(partial_trace_pi(s3.system, p, kernel), d * np.eye(m), atol=1e-10)

    def test_wrong_trace_fails(self, z2):
        kernel = kernel_from_dense(z2.system, 2 * np.eye(2))
        report = validate_kernel(kernel)
        assert "trace" in report.failed()
        with pytest.raises(InvalidKernel):
            check_kernel(kernel)

    def test_not_positive(self, z2):
        kernel = kernel_from_dense(z2.system, np.array([[1.0, 2.0], [2.0, 1.0]]))
        report = validate_kernel(kernel)
        assert not report.condition("positive").passed
        assert report.condition("positive").witness is not None

    def test_h_covariance_violation(self, z4):
        """chi0 and chi1 differ on H = {0, 2}, so their cross block must vanish."""
        dense = np.eye(4, dtype=complex)
        dense[0, 1] = dense[1, 0] = 0.5
        report = validate_kernel(kernel_from_dense(z4.system, dense))
        assert not report.condition("h_covariance").passed
        assert report.condition("h_covariance").witness["h"] == 2

    def test_validation_counts_failures(self, z2):
        metrics.reset()
        validate_kernel(kernel_from_dense(z2.system, 2 * np.eye(2)))
        snapshot = metrics.snapshot()
        assert snapshot["kernels_validated_total"] == 1
        assert snapshot["validation_failures_total"] == 1

    def test_vectors_give_gram_on_cosets(self, z4):
        """K(rho, pi) = <v_rho|v_pi> when rho and pi agree on H, else 0."""
        k = z4.kernels["vectors"].to_dense()
        assert abs(k[0, 1]) < 1e-12
        assert k[0, 2] == pytest.approx(1 / np.sqrt(2))
        assert k[1, 3] == pytest.approx(-1j / np.sqrt(2))

    def test_auxiliary_unitary_leaves_kernel_unchanged(self, fixture_system):
        """V_pi -> (I_d (x) W) V_pi for a unitary W on the auxiliary space gives the same kernel."""
        system = fixture_system
        for seed in range(50):
            aux = default_aux_dim(system) + seed % 3
            fam = random_isometries(system, seed, aux)
            w = random_unitary(aux, np.random.default_rng(1000 + seed))
            rotated = make_family(system, aux, {p: np.kron(np.eye(system.d(p)), w) @ fam.maps[p] for p in system.support})
            assert validate_isometries(rotated).ok
            np.testing.assert_allclose(kernel_from_isometries(rotated).to_dense(),
                                       kernel_from_isometries(fam).to_dense(), atol=1e-12)

    def test_mix(self, z2):
        mixed = mix_kernels(z2.kernels["c1"], z2.kernels["c0"], 0.5)
        np.testing.assert_allclose(mixed.to_dense(), z2.kernels["c05"].to_dense())

    def test_mix_bad_weight(self, z2):
        with pytest.raises(BadWeight):
            mix_kernels(z2.kernels["c1"], z2.kernels["c0"], 1.5)

    def test_correlation_round_trip(self, z3):
        gram = correlation_matrix(z3.kernels["gram"])
        assert np.allclose(np.diag(gram), 1.0)
        again = kernel_from_correlation(z3.system, gram)
        np.testing.assert_allclose(again.to_dense(), gram)

    def test_correlation_needs_unit_diagonal(self, z3):
        with pytest.raises(InvalidKernel):
            kernel_from_correlation(z3.system, 2 * np.eye(3))
