#!/usr/bin/env python3
"""
Unit tests for covariant POVMs: kernel round trips, validation, the Davies
construction and outcome statistics.
"""

from itertools import combinations

import numpy as np
import pytest

from src.errors import InvalidKernel, NotAState, NotHCommuting, NotNormalized, NotPositive
from src.group.abelian import character_inverse, character_product, fourier_on_quotient
from src.kernel.isometries import default_aux_dim, random_isometries
from src.kernel.kernel import kernel_from_dense, kernel_from_isometries, mix_kernels, random_kernel, validate_kernel
from src.povm.davies import davies_povm, seed_from_kernel
from src.povm.povm import (
    CovariantPovm, is_projective, kernel_from_povm, outcome_distribution, povm_from_isometries, povm_from_kernel,
)
from src.povm.validation import validate_povm
from tests.conftest import random_davies_seed


class TestKernelPovmCorrespondence:
    """kernel <-> POVM conversions."""

    def test_round_trips(self, fixture_system):
        for seed in range(100):
            kernel = random_kernel(fixture_system, seed, default_aux_dim(fixture_system) + seed % 2)
            povm = povm_from_kernel(kernel)
            back = kernel_from_povm(povm)
            assert np.max(np.abs(back.to_dense() - kernel.to_dense())) < 1e-10
            again = povm_from_kernel(back)
            assert np.max(np.abs(again.effects - povm.effects)) < 1e-10

    def test_isometry_path_agrees(self, fixture_system):
        for seed in range(100):
            fam = random_isometries(fixture_system, seed, default_aux_dim(fixture_system) + 1)
            direct = povm_from_isometries(fam)
            via_kernel = povm_from_kernel(kernel_from_isometries(fam))
            assert np.max(np.abs(direct.effects - via_kernel.effects)) < 1e-10

    def test_mixing_kernels_mixes_povms(self, fixture_system):
        rng = np.random.default_rng(7)
        for seed in range(50):
            k1 = random_kernel(fixture_system, 2 * seed)
            k2 = random_kernel(fixture_system, 2 * seed + 1, default_aux_dim(fixture_system) + 1)
            t = float(rng.uniform())
            mixed = povm_from_kernel(mix_kernels(k1, k2, t))
            expected = t * povm_from_kernel(k1).effects + (1.0 - t) * povm_from_kernel(k2).effects
            assert np.max(np.abs(mixed.effects - expected)) < 1e-12

    def test_generated_povms_validate(self, fixture_system):
        for seed in range(20):
            report = validate_povm(povm_from_kernel(random_kernel(fixture_system, seed)))
            assert report.ok, report.failed()
            assert report.condition("normalized").residual < 1e-10

    def test_representatives_do_not_matter(self, s3):
        group = s3.system.group
        kernel = random_kernel(s3.system, 4)
        largest = [max(c) for c in group.cosets]
        a = povm_from_kernel(kernel)
        b = povm_from_kernel(kernel, representatives=largest)
        np.testing.assert_allclose(a.effects, b.effects, atol=1e-12)

    def test_wrong_representative(self, s3):
        group = s3.system.group
        with pytest.raises(ValueError):
            povm_from_kernel(s3.kernels["identity"], representatives=[group.cosets[1][0]] * group.num_cosets)

    def test_invalid_kernel_rejected(self, z2):
        with pytest.raises(InvalidKernel):
            povm_from_kernel(kernel_from_dense(z2.system, 2 * np.eye(2)))


class TestClosedForms:
    """Hand-computed POVMs."""

    @pytest.mark.parametrize("c", [0.0, 0.5, 1.0, 0.3 + 0.4j, -1.0])
    def test_z2_effects(self, z2, c):
        kernel = kernel_from_dense(z2.system, np.array([[1.0, c], [np.conj(c), 1.0]]))
        povm = povm_from_kernel(kernel)
        np.testing.assert_allclose(povm.effects[0], 0.5 * np.array([[1, c], [np.conj(c), 1]]), atol=1e-12)
        np.testing.assert_allclose(povm.effects[1], 0.5 * np.array([[1, -c], [-np.conj(c), 1]]), atol=1e-12)

    def test_projective_only_on_the_circle(self, z2):
        assert is_projective(povm_from_kernel(z2.kernels["c1"]))
        assert not is_projective(povm_from_kernel(z2.kernels["c05"]))

    def test_effect_of_subsets(self, z2):
        povm = povm_from_kernel(z2.kernels["c05"])
        np.testing.assert_allclose(povm.effect([0, 1]), np.eye(2), atol=1e-12)
        np.testing.assert_allclose(povm.effect([]), np.zeros((2, 2)))

    def test_abelian_formula(self, z4):
        """<e_rho|E(X) e_pi> = <v_rho|v_pi> [rho H-perp = pi H-perp] (F chi_X)(rho^-1 pi)."""
        system = z4.system
        group = system.group
        povm = povm_from_kernel(z4.kernels["vectors"])
        h = 1.0 / np.sqrt(2.0)
        vectors = {
            "chi0": np.array([1.0, 0.0]),
            "chi1": np.array([0.0, 1.0]),
            "chi2": np.array([h, h]),
            "chi3": np.array([h, -1j * h]),
        }
        chars = {p.label: p.character() for p in system.irreps}
        omegas = range(group.num_cosets)
        subsets = [list(s) for r in range(group.num_cosets + 1) for s in combinations(omegas, r)]
        for x in subsets:
            indicator = np.array([1.0 if w in x else 0.0 for w in omegas])
            e = povm.effect(x)
            for i, rho in enumerate(system.support):
                for j, pi in enumerate(system.support):
                    chi = character_product(character_inverse(chars[rho]), chars[pi])
                    if np.allclose(chi[list(group.subgroup)], 1.0):
                        expected = np.vdot(vectors[rho], vectors[pi]) * fourier_on_quotient(group, indicator, chi)
                    else:
                        expected = 0.0
                    assert abs(e[i, j] - expected) < 1e-10

    def test_cross_coset_blocks_vanish(self, z4):
        povm = povm_from_kernel(z4.kernels["vectors"])
        # chi0 and chi1 restrict differently to H
        assert np.max(np.abs(povm.effects[:, 0, 1])) < 1e-12


class TestValidation:
    """validate_povm conditions and witnesses."""

    def test_non_covariant_witness(self, z2):
        effects = np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])])
        report = validate_povm(CovariantPovm(z2.system, effects))
        covariant = report.condition("covariant")
        assert not covariant.passed
        assert covariant.witness == {"g": 1, "omega": 0}
        assert report.condition("normalized").passed

    def test_not_normalized(self, z2):
        effects = np.array([np.eye(2), np.eye(2)]) * 0.25
        report = validate_povm(CovariantPovm(z2.system, effects))
        assert report.failed() == ["normalized"]

    def test_negative_effect(self, z2):
        effects = np.array([[[1.5, 0], [0, 0.5]], [[-0.5, 0], [0, 0.5]]])
        report = validate_povm(CovariantPovm(z2.system, effects))
        assert not report.condition("positive").passed
        assert report.condition("positive").witness["omega"] == 1
        assert not report.condition("bounded_by_identity").passed


class TestDavies:
    """E(X) = (1/|G|) sum over q^-1(X) of U(g) C U(g)^*."""

    def test_random_seeds(self, fixture_system):
        for seed in range(50):
            c = random_davies_seed(fixture_system, seed)
            povm = davies_povm(fixture_system, c)
            assert validate_povm(povm).ok
            assert validate_kernel(kernel_from_povm(povm)).ok

    def test_kernel_is_a_seed(self, fixture_system):
        kernel = random_kernel(fixture_system, 9)
        a = davies_povm(fixture_system, seed_from_kernel(kernel))
        b = povm_from_kernel(kernel)
        np.testing.assert_allclose(a.effects, b.effects, atol=1e-10)

    def test_not_positive(self, z2):
        with pytest.raises(NotPositive):
            davies_povm(z2.system, np.diag([2.0, -0.5]))

    def test_not_h_commuting(self, z4):
        seed = np.eye(4, dtype=complex)
        seed[0, 1] = seed[1, 0] = 0.5
        with pytest.raises(NotHCommuting) as exc:
            davies_povm(z4.system, seed)
        assert exc.value.details["h"] == 2

    def test_not_normalized(self, z2):
        with pytest.raises(NotNormalized) as exc:
            davies_povm(z2.system, 2 * np.eye(2))
        np.testing.assert_allclose(exc.value.details["defect"], np.eye(2))


class TestOutcomes:
    """Outcome distributions."""

    def test_plus_state_on_pvm(self, z2):
        povm = povm_from_kernel(z2.kernels["c1"])
        plus = 0.5 * np.ones((2, 2))
        np.testing.assert_allclose(outcome_distribution(povm, plus), [1.0, 0.0], atol=1e-12)

    def test_distribution_sums_to_one(self, s3):
        povm = povm_from_kernel(random_kernel(s3.system, 2))
        rng = np.random.default_rng(0)
        v = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        state = np.outer(v, v.conj()) / np.vdot(v, v)
        probs = outcome_distribution(povm, state)
        assert probs.sum() == pytest.approx(1.0)
        assert np.all(probs >= -1e-12)

    def test_not_a_state(self, z2):
        povm = povm_from_kernel(z2.kernels["c0"])
        with pytest.raises(NotAState):
            outcome_distribution(povm, np.eye(2))
        with pytest.raises(NotAState):
            outcome_distribution(povm, np.eye(3) / 3)
