import numpy as np
import pytest

from jrsp4.linalg import (
    DIM,
    DensityMatrix,
    PureState,
    apply_local,
    basis_state,
    fidelity,
    inner,
    project,
    reduced_density,
    tensor_product,
)


def random_state(rng, labels):
    amps = rng.standard_normal(DIM ** len(labels)) + 1j * rng.standard_normal(DIM ** len(labels))
    amps /= np.linalg.norm(amps)
    return PureState(labels, amps)


def full_matrix(op, label, labels):
    """Independent route: expand a local operator over the whole register."""
    m = np.ones((1, 1))
    for l in labels:
        m = np.kron(m, op if l == label else np.eye(DIM))
    return m


class TestPureState:
    def test_validation(self):
        with pytest.raises(ValueError, match="duplicate"):
            PureState((1, 1), np.zeros(16))
        with pytest.raises(ValueError, match="amplitudes"):
            PureState((1, 2), np.zeros(15))
        with pytest.raises(ValueError, match="finite"):
            PureState((1,), [np.nan, 0, 0, 0])

    def test_amplitudes_read_only(self):
        s = basis_state((1,), (0,))
        with pytest.raises(ValueError):
            s.amps[0] = 2.0

    def test_axis_lookup(self):
        s = basis_state((3, 6), (0, 0))
        assert s.axis(3) == 0
        assert s.axis(6) == 1
        with pytest.raises(KeyError):
            s.axis(4)

    def test_normalized_zero_state(self):
        s = PureState((1,), np.zeros(DIM))
        with pytest.raises(ValueError, match="zero state"):
            s.normalized()

    def test_most_significant_digit_first(self):
        s = basis_state((1, 2), (3, 1))
        assert s.amps[3 * DIM + 1] == 1.0


class TestTensorProduct:
    def test_label_collision(self):
        a = basis_state((1,), (0,))
        with pytest.raises(ValueError, match="collision"):
            tensor_product(a, basis_state((1,), (1,)))

    def test_basis_index_arithmetic(self):
        a = basis_state((1,), (2,))
        b = basis_state((5, 2), (1, 3))
        joined = tensor_product(a, b)
        assert joined.labels == (1, 5, 2)
        idx = 2 * DIM * DIM + 1 * DIM + 3
        assert joined.amps[idx] == 1.0
        assert np.count_nonzero(joined.amps) == 1

    def test_norm_multiplicative(self):
        rng = np.random.default_rng(0)
        a = random_state(rng, (1,))
        b = random_state(rng, (2, 3))
        assert tensor_product(a, b).norm == pytest.approx(1.0, abs=1e-12)


class TestApplyLocal:
    def test_matches_full_matrix_route(self):
        rng = np.random.default_rng(1)
        labels = (1, 2, 3)
        for _ in range(20):
            op = rng.standard_normal((DIM, DIM)) + 1j * rng.standard_normal((DIM, DIM))
            label = int(rng.integers(1, 4))
            s = random_state(rng, labels)
            got = apply_local(op, label, s)
            want = full_matrix(op, label, labels) @ s.amps
            np.testing.assert_allclose(got.amps, want, atol=1e-12)

    def test_shape_check(self):
        s = basis_state((1,), (0,))
        with pytest.raises(ValueError, match="operator shape"):
            apply_local(np.eye(3), 1, s)

    def test_permutation_example(self):
        # block bit flip: swaps digits 0<->1 and 2<->3
        u = np.zeros((DIM, DIM))
        u[1, 0] = u[0, 1] = u[3, 2] = u[2, 3] = 1.0
        s = PureState((3,), [0.2, 0.1, 0.4, 0.3])
        out = apply_local(u, 3, s)
        np.testing.assert_allclose(out.amps, [0.1, 0.2, 0.3, 0.4], atol=1e-15)


class TestProject:
    def test_layout_mismatch(self):
        s = random_state(np.random.default_rng(2), (1, 2, 3))
        vec = basis_state((1, 3), (0, 0))
        with pytest.raises(ValueError, match="cover exactly"):
            project(s, (1, 2), vec)

    def test_matches_projector_matrix_route(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            s = random_state(rng, (1, 2, 3))
            vec = random_state(rng, (2,))
            residual, prob = project(s, (2,), vec)
            assert residual.labels == (1, 3)
            # independent route: full projector acting on the register
            proj = np.kron(np.eye(DIM), np.kron(np.outer(vec.amps, vec.amps.conj()), np.eye(DIM)))
            want_prob = float((s.amps.conj() @ proj @ s.amps).real)
            assert prob == pytest.approx(want_prob, abs=1e-12)

    def test_residual_chaining_gives_joint_probability(self):
        rng = np.random.default_rng(4)
        s = random_state(rng, (1, 2))
        v1 = random_state(rng, (1,))
        v2 = random_state(rng, (2,))
        partial, _ = project(s, (1,), v1)
        _, joint = project(partial, (2,), v2)
        amp = (np.kron(v1.amps, v2.amps).conj() @ s.amps)
        assert joint == pytest.approx(abs(amp) ** 2, abs=1e-12)

    def test_measure_everything_leaves_scalar(self):
        s = basis_state((1, 2), (0, 0))
        vec = basis_state((1, 2), (0, 0))
        residual, prob = project(s, (1, 2), vec)
        assert residual.labels == ()
        assert prob == pytest.approx(1.0)

    def test_completeness_over_computational_basis(self):
        rng = np.random.default_rng(5)
        s = random_state(rng, (1, 2))
        total = sum(
            project(s, (1,), basis_state((1,), (d,)))[1] for d in range(DIM)
        )
        assert total == pytest.approx(1.0, abs=1e-12)


class TestInnerFidelity:
    def test_conjugate_linear_first_argument(self):
        a = PureState((1,), [1j, 0, 0, 0])
        b = PureState((1,), [1.0, 0, 0, 0])
        assert inner(a, b) == pytest.approx(-1j)

    def test_layout_order_matters(self):
        a = basis_state((1, 2), (0, 1))
        b = basis_state((2, 1), (1, 0))
        with pytest.raises(ValueError, match="layout"):
            inner(a, b)

    def test_fidelity_global_phase_invariant(self):
        rng = np.random.default_rng(6)
        a = random_state(rng, (1, 2))
        b = PureState(a.labels, -a.amps)
        assert fidelity(a, b) == pytest.approx(1.0, abs=1e-12)

    def test_fidelity_orthogonal(self):
        assert fidelity(basis_state((1,), (0,)), basis_state((1,), (1,))) == 0.0


class TestReducedDensity:
    def test_pure_product_state_reduces_to_projector(self):
        rng = np.random.default_rng(7)
        a = random_state(rng, (1,))
        b = random_state(rng, (2,))
        rho = reduced_density(tensor_product(a, b), (1,))
        np.testing.assert_allclose(rho.matrix, np.outer(a.amps, a.amps.conj()), atol=1e-12)

    def test_matches_loop_route(self):
        rng = np.random.default_rng(8)
        s = random_state(rng, (1, 2, 3))
        rho = reduced_density(s, (3, 1)).matrix
        # independent route: explicit sum over the traced-out digit
        t = s.amps.reshape(DIM, DIM, DIM)
        want = np.zeros((DIM * DIM, DIM * DIM), dtype=complex)
        for i in range(DIM):
            for k in range(DIM):
                for i2 in range(DIM):
                    for k2 in range(DIM):
                        val = sum(t[i, j, k] * np.conj(t[i2, j, k2]) for j in range(DIM))
                        want[k * DIM + i, k2 * DIM + i2] = val
        np.testing.assert_allclose(rho, want, atol=1e-12)

    def test_trace_validation_rejects_unnormalized(self):
        s = PureState((1, 2), np.ones(16) * 0.3)
        with pytest.raises(ValueError, match="trace"):
            reduced_density(s, (1,))

    def test_density_matrix_validation(self):
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix((1,), np.eye(DIM) / DIM + 1e-6 * np.triu(np.ones((DIM, DIM)), 1))
