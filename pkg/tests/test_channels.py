import numpy as np
import pytest

from jrsp4.bases import ShareVector, random_generic_share
from jrsp4.channels import (
    RECEIVER,
    SENDER_1,
    SENDER_2,
    ChannelSpec,
    Protocol,
    build_channel,
    epr_state,
    ghz_state,
    joint_outcomes,
    sender_bases,
)
from jrsp4.linalg import DIM, project

UNIFORM = ShareVector((0.5, 0.5, 0.5, 0.5))


def unit_share(rng, sender_id):
    v = rng.standard_normal(DIM)
    return ShareVector(v / np.linalg.norm(v), sender_id=sender_id)


class TestEntangledResources:
    def test_ghz_amplitudes(self):
        state = ghz_state((1, 2, 3))
        t = state.tensor_view()
        for i in range(DIM):
            for j in range(DIM):
                for k in range(DIM):
                    want = 0.5 if i == j == k else 0.0
                    assert t[i, j, k] == pytest.approx(want)
        assert state.norm == pytest.approx(1.0)

    def test_epr_amplitudes(self):
        state = epr_state((5, 6))
        t = state.tensor_view()
        np.testing.assert_allclose(t, np.eye(DIM) / 2)


class TestChannelSpecs:
    def test_p1_layout(self):
        spec = build_channel(Protocol.P1)
        assert spec.arity == 1
        assert spec.sender1_labels == (1,)
        assert spec.sender2_labels == (2,)
        assert spec.receiver_labels == (3,)
        assert spec.state.labels == (1, 2, 3)

    def test_p2_layout(self):
        spec = build_channel(Protocol.P2)
        assert spec.arity == 2
        assert spec.sender1_labels == (1, 4)
        assert spec.sender2_labels == (2, 5)
        assert spec.receiver_labels == (3, 6)
        assert spec.state.labels == (1, 2, 3, 4, 5, 6)

    def test_p3_layout(self):
        spec = build_channel(Protocol.P3)
        assert spec.arity == 2
        assert spec.sender1_labels == (1, 3)
        assert spec.sender2_labels == (2, 5)
        assert spec.receiver_labels == (4, 6)
        assert spec.state.labels == (1, 2, 3, 4, 5, 6)

    def test_ownership_covers_all_particles(self):
        for protocol in Protocol:
            spec = build_channel(protocol)
            assert sorted(spec.ownership) == sorted(spec.state.labels)
            assert set(spec.ownership.values()) == {SENDER_1, SENDER_2, RECEIVER}

    def test_channel_states_are_maximally_mixed_per_party(self):
        # tracing a GHZ or EPR product down to any single particle gives I/4
        from jrsp4.linalg import reduced_density

        for protocol in Protocol:
            spec = build_channel(protocol)
            for label in spec.state.labels:
                rho = reduced_density(spec.state, (label,))
                np.testing.assert_allclose(rho.matrix, np.eye(DIM) / DIM, atol=1e-12)


class TestJointOutcomes:
    @pytest.mark.parametrize(
        "protocol,count",
        [(Protocol.P1, 16), (Protocol.P2, 256), (Protocol.P3, 256)],
    )
    def test_outcome_count_and_completeness(self, protocol, count):
        rng = np.random.default_rng(20)
        spec = build_channel(protocol)
        s1 = unit_share(rng, 1)
        s2 = unit_share(rng, 2)
        outcomes = list(joint_outcomes(spec, s1, s2))
        assert len(outcomes) == count
        total = sum(prob for _, _, prob in outcomes)
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_keys_lexicographic_and_unique(self):
        spec = build_channel(Protocol.P3)
        outcomes = list(joint_outcomes(spec, UNIFORM, UNIFORM))
        keys = [key for key, _, _ in outcomes]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_p2_offset_mismatch_probability_vanishes(self):
        # the two GHZ resources force both senders onto the same offset
        rng = np.random.default_rng(21)
        spec = build_channel(Protocol.P2)
        for _ in range(5):
            s1 = random_generic_share(rng, 1)
            s2 = random_generic_share(rng, 2)
            zero = sum(
                1
                for (k1, k2), _, prob in joint_outcomes(spec, s1, s2)
                if prob <= 1e-14
            )
            mismatched = sum(
                1
                for (k1, k2), _, prob in joint_outcomes(spec, s1, s2)
                if k1[1] != k2[1] and prob <= 1e-14
            )
            assert zero == 192
            assert mismatched == 192

    def test_p3_all_outcomes_occur(self):
        rng = np.random.default_rng(22)
        spec = build_channel(Protocol.P3)
        s1 = random_generic_share(rng, 1)
        s2 = random_generic_share(rng, 2)
        assert all(prob > 1e-14 for _, _, prob in joint_outcomes(spec, s1, s2))

    def test_projection_order_irrelevant(self):
        rng = np.random.default_rng(23)
        for protocol in Protocol:
            spec = build_channel(protocol)
            s1 = unit_share(rng, 1)
            s2 = unit_share(rng, 2)
            basis1, basis2 = sender_bases(spec, s1, s2)
            recorded = {
                key: (residual, prob)
                for key, residual, prob in joint_outcomes(spec, s1, s2)
            }
            for key2, vec2 in zip(basis2.keys, basis2.vectors):
                after2, p2 = project(spec.state, spec.sender2_labels, vec2)
                for key1, vec1 in zip(basis1.keys, basis1.vectors):
                    # after2 is unnormalized, so p1 is already the joint probability
                    swapped, p1 = project(after2, spec.sender1_labels, vec1)
                    residual, prob = recorded[(key1, key2)]
                    assert prob == pytest.approx(p1, abs=1e-12)
                    np.testing.assert_allclose(
                        residual.amps, swapped.amps, atol=1e-12
                    )

    def test_residual_lives_on_receiver_particles(self):
        spec = build_channel(Protocol.P2)
        for _, residual, prob in joint_outcomes(spec, UNIFORM, UNIFORM):
            assert residual.labels == spec.receiver_labels
