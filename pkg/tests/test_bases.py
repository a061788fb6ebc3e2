import itertools

import numpy as np
import pytest

from jrsp4.bases import (
    GENERIC_GAP,
    ShareVector,
    gram,
    is_generic,
    parse_share_text,
    random_generic_share,
    sign_pattern,
    single_particle_basis,
    two_particle_basis,
)
from jrsp4.linalg import DIM

UNIFORM = (0.5, 0.5, 0.5, 0.5)


def unit(values):
    v = np.asarray(values, dtype=float)
    return v / np.linalg.norm(v)


class TestShareVector:
    def test_accepts_and_renormalizes_near_unit(self):
        v = unit((1, 2, 3, 4)) * (1 + 2e-10)
        share = ShareVector(v)
        assert float(share.components @ share.components) == pytest.approx(1.0, abs=1e-15)

    def test_rejects_off_unit(self):
        with pytest.raises(ValueError, match="share not normalized"):
            ShareVector((1.0, 1.0, 0.0, 0.0))

    def test_rejects_wrong_length_and_sender(self):
        with pytest.raises(ValueError, match="components"):
            ShareVector((1.0, 0.0, 0.0))
        with pytest.raises(ValueError, match="sender_id"):
            ShareVector(UNIFORM, sender_id=3)

    def test_components_read_only(self):
        share = ShareVector(UNIFORM)
        with pytest.raises(ValueError):
            share.components[0] = 1.0


class TestParseShareText:
    @pytest.mark.parametrize(
        "text",
        ["0.5,0.5,0.5,0.5", "0.5 0.5 0.5 0.5", " 0.5, 0.5,\t0.5 ,0.5 ", "0.5,0.5 0.5,0.5"],
    )
    def test_separator_variants(self, text):
        share = parse_share_text(text, sender_id=2)
        np.testing.assert_allclose(share.components, UNIFORM)
        assert share.sender_id == 2

    def test_wrong_count(self):
        with pytest.raises(ValueError, match="exactly 4"):
            parse_share_text("0.5,0.5,0.5")

    def test_garbage(self):
        with pytest.raises(ValueError, match="could not parse"):
            parse_share_text("0.5,0.5,x,0.5")


class TestSignPattern:
    def test_rows(self):
        m = sign_pattern((1.0, 2.0, 3.0, 4.0))
        np.testing.assert_array_equal(
            m,
            [
                [1, 2, 3, 4],
                [2, -1, 4, -3],
                [-3, 4, 1, -2],
                [-4, -3, 2, 1],
            ],
        )

    def test_orthogonal_for_unit_input(self):
        rng = np.random.default_rng(10)
        for _ in range(200):
            v = rng.standard_normal(DIM)
            v /= np.linalg.norm(v)
            m = sign_pattern(v)
            np.testing.assert_allclose(m @ m.T, np.eye(DIM), atol=1e-12)

    def test_each_component_once_per_row_and_column(self):
        m = np.abs(sign_pattern((1.0, 2.0, 3.0, 4.0)))
        for axis in (0, 1):
            for line in np.moveaxis(m, axis, 0):
                assert sorted(line) == [1, 2, 3, 4]


class TestSingleParticleBasis:
    def test_vectors_are_pattern_rows(self):
        share = ShareVector(unit((1, 2, 3, 4)))
        basis = single_particle_basis(share, label=1)
        assert basis.labels == (1,)
        assert basis.keys == (0, 1, 2, 3)
        m = sign_pattern(share.components)
        for row, vec in enumerate(basis.vectors):
            np.testing.assert_allclose(vec.amps, m[row], atol=1e-15)

    def test_gram_identity(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            v = rng.standard_normal(DIM)
            basis = single_particle_basis(ShareVector(unit(v)), label=2)
            np.testing.assert_allclose(gram(basis), np.eye(DIM), atol=1e-12)

    def test_gram_diagonal_scales_with_squared_norm(self):
        # raw component sequences skip the normalization gate on purpose
        basis = single_particle_basis((2.0, 4.0, 6.0, 8.0), label=1)
        diag = np.diag(gram(basis)).real
        np.testing.assert_allclose(diag, np.full(DIM, 120.0), atol=1e-9)


class TestTwoParticleBasis:
    def test_keys_lexicographic(self):
        basis = two_particle_basis(ShareVector(UNIFORM), (1, 4))
        assert basis.keys == tuple(itertools.product(range(DIM), repeat=2))
        assert basis.labels == (1, 4)

    def test_support_structure(self):
        share = ShareVector(unit((1, 2, 3, 4)))
        basis = two_particle_basis(share, (1, 4))
        m = sign_pattern(share.components)
        for (g, h), vec in zip(basis.keys, basis.vectors):
            t = vec.amps.reshape(DIM, DIM)
            for row in range(DIM):
                for col in range(DIM):
                    want = m[g, row] if col == (row + h) % DIM else 0.0
                    assert t[row, col] == pytest.approx(want, abs=1e-15)

    def test_offset_zero_rows_match_single_particle_rows(self):
        share = ShareVector(unit((2, 3, 5, 9)))
        single = single_particle_basis(share, 1)
        pair = two_particle_basis(share, (1, 4))
        for g in range(DIM):
            vec = pair.vectors[pair.keys.index((g, 0))].amps.reshape(DIM, DIM)
            np.testing.assert_allclose(np.diag(vec), single.vectors[g].amps.real, atol=1e-15)

    def test_gram_identity(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            v = rng.standard_normal(DIM)
            basis = two_particle_basis(ShareVector(unit(v)), (2, 5))
            np.testing.assert_allclose(gram(basis), np.eye(DIM * DIM), atol=1e-12)

    def test_needs_two_labels(self):
        with pytest.raises(ValueError, match="two labels"):
            two_particle_basis(ShareVector(UNIFORM), (1, 2, 3))


class TestGenericity:
    def test_uniform_share_is_degenerate(self):
        assert not is_generic(UNIFORM)

    def test_share_with_zero_component_is_degenerate(self):
        assert not is_generic(unit((0, 1, 2, 3)))

    def test_distinct_magnitudes_are_generic(self):
        assert is_generic(unit((1, -2, 3, -4)))

    def test_gap_threshold(self):
        # two magnitudes closer than the gap make the share degenerate
        assert not is_generic(unit((0.1, 0.1 + GENERIC_GAP / 2, 0.5, 0.7)))

    def test_random_generic_share(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            share = random_generic_share(rng, sender_id=2)
            assert is_generic(share)
            assert share.sender_id == 2
            assert float(share.components @ share.components) == pytest.approx(1.0, abs=1e-12)
