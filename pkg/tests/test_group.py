#!/usr/bin/env python3
"""
Unit tests for group tables, cosets, irreps and characters.
"""

import numpy as np
import pytest

from src.errors import EquivalentPair, NotAbelian, NotAGroup, NotASubgroup, NotHomomorphism, NotUnitary, Reducible, SchemaError
from src.fixtures.groups import cyclic_characters, cyclic_table, direct_product_table, s3_irreps, s3_table, s3_transposition
from src.group.abelian import (
    annihilator, character_inverse, character_product, characters_of_subgroup, fourier_on_quotient,
)
from src.group.core import build_group, coset_average, commutator_subgroup, load_group
from src.group.irreps import make_irrep, validate_irreps


class TestGroupTable:
    """Group axioms and coset bookkeeping."""

    def test_cyclic_cosets(self):
        """Z4 / {0, 2} has cosets {0, 2} and {1, 3} with smallest representatives."""
        group = build_group(cyclic_table(4), [0, 2])
        assert group.cosets == ((0, 2), (1, 3))
        assert group.representatives == (0, 1)
        assert group.q(3) == 1
        assert group.act(1, 1) == 0
        assert group.is_abelian()

    def test_action_is_transitive(self):
        group = build_group(s3_table(), [0, s3_transposition()])
        assert group.num_cosets == 3
        for omega in range(group.num_cosets):
            assert {group.act(g, 0) for g in range(group.order)} == set(range(group.num_cosets))
            assert group.act(0, omega) == omega

    def test_non_associative_table_reports_triple(self):
        """A Latin square with identity 0 that is not associative."""
        table = np.array([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])
        with pytest.raises(NotAGroup) as exc:
            build_group(table, [0])
        a, b, c = exc.value.details["triple"]
        assert table[table[a, b], c] != table[a, table[b, c]]

    def test_missing_identity(self):
        table = cyclic_table(3)[[1, 2, 0]]
        with pytest.raises(NotAGroup):
            build_group(table, [0])

    def test_subgroup_not_closed(self):
        with pytest.raises(NotASubgroup) as exc:
            build_group(cyclic_table(4), [0, 1])
        assert "pair" in exc.value.details or "element" in exc.value.details

    def test_subgroup_without_identity(self):
        with pytest.raises(NotASubgroup):
            build_group(cyclic_table(4), [2])

    def test_load_group_schema_pointer(self):
        with pytest.raises(SchemaError) as exc:
            load_group({"order": 2, "mult": [[0, 1], [1]], "subgroup": [0]})
        assert exc.value.pointer == "/mult/1"

    def test_coset_average_identity(self):
        """Mean over G equals the mean over cosets of means over H."""
        group = build_group(s3_table(), [0, s3_transposition()])
        rng = np.random.default_rng(7)
        values = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
        lhs, rhs = coset_average(group, lambda g: values[g])
        assert abs(lhs - rhs) < 1e-12

    def test_direct_product(self):
        table = direct_product_table(cyclic_table(2), cyclic_table(3))
        group = build_group(table, [0])
        assert group.order == 6
        assert group.is_abelian()

    def test_s3_commutator_subgroup(self):
        group = build_group(s3_table(), [0])
        assert len(commutator_subgroup(group, range(6))) == 3


class TestIrreps:
    """Irrep validation."""

    def test_s3_irreps_are_complete(self):
        group = build_group(s3_table(), [0])
        irreps = validate_irreps(group, s3_irreps())
        assert irreps.complete
        assert irreps.labels == ("trivial", "sign", "standard")

    def test_not_unitary(self):
        group = build_group(cyclic_table(2), [0])
        with pytest.raises(NotUnitary):
            validate_irreps(group, [make_irrep("bad", [1.0, 2.0])])

    def test_not_homomorphism(self):
        group = build_group(cyclic_table(3), [0])
        with pytest.raises(NotHomomorphism):
            validate_irreps(group, [make_irrep("bad", [1.0, 1.0, -1.0])])

    def test_reducible(self):
        group = build_group(cyclic_table(2), [0])
        mats = np.array([np.eye(2), np.diag([1.0, -1.0])])
        with pytest.raises(Reducible):
            validate_irreps(group, [make_irrep("sum", mats)])

    def test_equivalent_pair(self):
        group = build_group(cyclic_table(3), [0])
        chars = cyclic_characters(3)
        twin = make_irrep("twin", chars[1].matrices)
        with pytest.raises(EquivalentPair) as exc:
            validate_irreps(group, [chars[1], twin])
        assert exc.value.details["pair"] == ["chi1", "twin"]


class TestCharacters:
    """Annihilator, Fourier transform on the quotient and characters of H."""

    def test_annihilator_z4(self):
        group = build_group(cyclic_table(4), [0, 2])
        irreps = validate_irreps(group, cyclic_characters(4))
        assert annihilator(group, irreps) == ["chi0", "chi2"]

    def test_annihilator_needs_abelian(self):
        group = build_group(s3_table(), [0])
        irreps = validate_irreps(group, s3_irreps())
        with pytest.raises(NotAbelian):
            annihilator(group, irreps)

    def test_fourier_of_indicator(self):
        group = build_group(cyclic_table(4), [0, 2])
        chi2 = cyclic_characters(4)[2]
        assert fourier_on_quotient(group, [1.0, 0.0], chi2) == pytest.approx(0.5)
        assert fourier_on_quotient(group, [0.0, 1.0], chi2) == pytest.approx(-0.5)

    def test_characters_of_z2_subgroup(self):
        group = build_group(cyclic_table(4), [0, 2])
        chars = characters_of_subgroup(group)
        assert len(chars) == 2
        assert chars[0].is_trivial()
        assert chars[1](2) == pytest.approx(-1.0)

    def test_characters_of_s3(self):
        """S3 has two one-dimensional characters (trivial and sign)."""
        group = build_group(s3_table(), list(range(6)))
        chars = characters_of_subgroup(group)
        assert len(chars) == 2
        signs = sorted(round(chars[1](g).real) for g in range(6))
        assert signs == [-1, -1, -1, 1, 1, 1]

    def test_characters_of_z3_are_roots_of_unity(self):
        group = build_group(cyclic_table(3), [0, 1, 2])
        chars = characters_of_subgroup(group)
        assert len(chars) == 3
        for chi in chars:
            assert np.allclose(np.abs(chi.values), 1.0)
            assert chi(1) ** 3 == pytest.approx(1.0)

    @staticmethod
    def _z4_z2_characters():
        g = np.arange(8)
        x, y = g // 2, g % 2
        return [make_irrep(f"chi{a}{b}", np.exp(2j * np.pi * (a * x / 4 + b * y / 2)))
                for a in range(4) for b in range(2)]

    @pytest.mark.parametrize("table, subgroup, n", [
        (cyclic_table(6), [0], 6),
        (cyclic_table(6), [0, 3], 6),
        (cyclic_table(6), [0, 2, 4], 6),
        (cyclic_table(6), list(range(6)), 6),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), [0], None),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), [0, 4], None),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), [0, 1], None),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), [0, 2, 4, 6], None),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), list(range(8)), None),
    ])
    def test_annihilator_is_a_subgroup_of_the_dual(self, table, subgroup, n):
        group = build_group(table, subgroup)
        irreps = validate_irreps(group, cyclic_characters(n) if n else self._z4_z2_characters())
        chars = {p.label: p.character() for p in irreps}

        def label_of(values):
            return next(label for label, chi in chars.items() if np.allclose(chi, values, atol=1e-9))

        perp = annihilator(group, irreps)
        assert len(perp) * len(subgroup) == group.order
        assert label_of(np.ones(group.order)) in perp
        for a in perp:
            assert label_of(character_inverse(chars[a])) in perp
            for b in perp:
                assert label_of(character_product(chars[a], chars[b])) in perp

    def test_annihilator_extremes(self):
        table = direct_product_table(cyclic_table(4), cyclic_table(2))
        irreps = self._z4_z2_characters()
        whole = build_group(table, list(range(8)))
        trivial = build_group(table, [0])
        assert annihilator(whole, validate_irreps(whole, irreps)) == ["chi00"]
        assert annihilator(trivial, validate_irreps(trivial, irreps)) == [p.label for p in irreps]

    @pytest.mark.parametrize("table, subgroup, count", [
        (s3_table(), list(range(6)), 2),
        (s3_table(), [0, 3, 4], 3),
        (s3_table(), [0, s3_transposition()], 2),
        (cyclic_table(6), [0, 2, 4], 3),
        (direct_product_table(cyclic_table(4), cyclic_table(2)), list(range(8)), 8),
        (direct_product_table(s3_table(), cyclic_table(2)), list(range(12)), 4),
    ])
    def test_subgroup_characters_are_homomorphisms(self, table, subgroup, count):
        group = build_group(table, subgroup)
        chars = characters_of_subgroup(group)
        h = group.subgroup
        assert len(chars) == count
        assert len(chars) * len(commutator_subgroup(group, h)) == len(h)
        for chi in chars:
            for a in h:
                for b in h:
                    assert chi(group.mul(a, b)) == pytest.approx(chi(a) * chi(b), abs=1e-9)
        for i, chi in enumerate(chars):
            for other in chars[i + 1:]:
                assert not np.allclose(chi.values, other.values, atol=1e-6)
