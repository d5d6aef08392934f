"""
Tests for quantum states, linear algebra, channels and sampling
"""

import numpy as np
import pytest
from scipy import stats

from qmath import (
    PAULI_X,
    ChannelIntegrityError,
    DensityMatrix,
    PureState,
    QuantumChannel,
    ShapeError,
    SizeError,
    StateValidationError,
    apply_channel,
    apply_to_qubit,
    choi_distance,
    chunk_counts,
    compress_kraus,
    fidelity,
    haar_angle_cdf,
    haar_su2_batch,
    make_rng,
    mixture,
    partial_trace,
    permutation_operator,
    random_density_matrix,
    spawn_generators,
    su2_rotation_angle,
    swap_operator,
    tensor_power_channel,
    tensor_product,
    trace_distance,
)


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def zero():
    return DensityMatrix.from_pure(PureState.basis(0, 2))


@pytest.fixture
def bell():
    """(|00> + |11>)/√2"""
    return DensityMatrix.from_pure(PureState.from_vector([1, 0, 0, 1], normalize=True))


@pytest.fixture
def bit_flip():
    return QuantumChannel.unitary(PAULI_X, label="x")


# ============================================================
# States
# ============================================================

class TestStates:
    """PureState / DensityMatrix 불변식"""

    def test_unnormalized_vector_rejected(self):
        with pytest.raises(StateValidationError):
            PureState(np.array([1.0, 1.0]))

    def test_unvalidated_state_is_flagged(self):
        state = PureState(np.array([1.0, 1.0]), validate=False)
        assert state.validated is False

    def test_non_hermitian_rejected(self):
        with pytest.raises(StateValidationError):
            DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_negative_eigenvalue_rejected(self):
        with pytest.raises(StateValidationError):
            DensityMatrix(np.array([[1.5, 0.0], [0.0, -0.5]]))

    def test_basis_out_of_range(self):
        with pytest.raises(ShapeError):
            PureState.basis(4, 4)

    def test_n_qubits_requires_power_of_two(self):
        with pytest.raises(ShapeError):
            _ = PureState.basis(0, 3).n_qubits

    def test_arrays_are_read_only(self, zero):
        with pytest.raises(ValueError):
            zero.matrix[0, 0] = 0.0

    def test_to_dict_layout(self):
        data = PureState.from_vector([1, 1j], normalize=True).to_dict()
        assert data["dims"] == [2, 1]
        assert data["entries"][1] == pytest.approx([0.0, 1 / np.sqrt(2)])


# ============================================================
# Linear algebra
# ============================================================

class TestLinalg:
    """텐서곱 / 부분 대각합 / 거리"""

    def test_partial_trace_of_bell_is_mixed(self, bell):
        reduced = partial_trace(bell, keep=[0], dims=[2, 2])
        np.testing.assert_allclose(reduced.matrix, np.eye(2) / 2, atol=1e-14)

    def test_partial_trace_bad_dims(self, bell):
        with pytest.raises(ShapeError):
            partial_trace(bell, keep=[0], dims=[2, 3])

    def test_fidelity_and_trace_distance(self, zero):
        one = DensityMatrix.from_pure(PureState.basis(1, 2))
        assert fidelity(zero, zero) == pytest.approx(1.0)
        assert fidelity(zero, one) == pytest.approx(0.0, abs=1e-14)
        assert trace_distance(zero, one) == pytest.approx(1.0)
        assert trace_distance(zero, DensityMatrix.maximally_mixed(2)) == pytest.approx(0.5)

    def test_tensor_product_cap(self):
        with pytest.raises(SizeError):
            tensor_product(np.eye(4), np.eye(4), max_dim=8)

    def test_swap_moves_most_significant_bit(self):
        swap = swap_operator(2, 0, 1)
        state = np.zeros(4)
        state[1] = 1.0                    # |01>
        assert np.argmax(np.abs(swap @ state)) == 2   # |10>

    def test_permutation_matches_swap(self):
        np.testing.assert_array_equal(permutation_operator([1, 0]), swap_operator(2, 0, 1))

    def test_permutation_rejects_non_permutation(self):
        with pytest.raises(ShapeError):
            permutation_operator([0, 0, 1])


# ============================================================
# Channels
# ============================================================

class TestChannels:
    """Kraus 채널 연산"""

    def test_identity_channel(self, bell):
        out = apply_channel(QuantumChannel.identity(4), bell)
        np.testing.assert_allclose(out.matrix, bell.matrix, atol=1e-15)

    def test_mixture_depolarizes_z(self, zero, bit_flip):
        channel = mixture([QuantumChannel.identity(2), bit_flip], [0.5, 0.5])
        out = apply_channel(channel, zero)
        np.testing.assert_allclose(out.matrix, np.eye(2) / 2, atol=1e-15)
        assert channel.choi_report.accepted

    def test_compress_kraus_keeps_channel(self, bit_flip):
        channel = mixture([QuantumChannel.identity(2), bit_flip, bit_flip], [0.2, 0.3, 0.5])
        compact = compress_kraus(channel)
        assert compact.n_kraus <= 4
        assert choi_distance(channel, compact) < 1e-12

    def test_non_trace_preserving_rejected(self, zero):
        lossy = QuantumChannel.from_kraus([0.5 * np.eye(2)])
        assert not lossy.choi_report.accepted
        assert lossy.choi_report.tp_defect == pytest.approx(0.75)
        with pytest.raises(ChannelIntegrityError):
            apply_channel(lossy, zero)

    def test_apply_to_qubit_targets_msb(self, bit_flip):
        rho = DensityMatrix.from_pure(PureState.basis(0, 4))
        out = apply_to_qubit(bit_flip, rho, 0)
        assert out.matrix[2, 2] == pytest.approx(1.0)

    def test_tensor_power_channel(self, bit_flip):
        rho = DensityMatrix.from_pure(PureState.basis(0, 4))
        out = apply_channel(tensor_power_channel(bit_flip, 2), rho)
        assert out.matrix[3, 3] == pytest.approx(1.0)

    def test_dimension_mismatch(self, bell, bit_flip):
        with pytest.raises(ShapeError):
            apply_channel(bit_flip, bell)


# ============================================================
# Sampling
# ============================================================

class TestSampling:
    """시드 재현성과 Haar 샘플"""

    def test_same_seed_same_stream(self):
        a = make_rng(7).standard_normal(5)
        b = make_rng(7).standard_normal(5)
        np.testing.assert_array_equal(a, b)

    def test_substreams_differ(self):
        first, second = spawn_generators(11, 2)
        assert not np.array_equal(first.standard_normal(4), second.standard_normal(4))

    def test_chunk_counts(self):
        assert chunk_counts(10, 4) == [4, 4, 2]
        assert sum(chunk_counts(100000, 4096)) == 100000

    def test_haar_batch_is_su2(self):
        u = haar_su2_batch(make_rng(3), 50)
        eye = np.einsum('kba,kbc->kac', u.conj(), u)
        np.testing.assert_allclose(eye, np.broadcast_to(np.eye(2), eye.shape), atol=1e-12)
        np.testing.assert_allclose(np.linalg.det(u), 1.0, atol=1e-12)

    def test_haar_angle_distribution(self):
        """KS 거리 검정 (20000 샘플)"""
        theta = su2_rotation_angle(haar_su2_batch(make_rng(5), 20000))
        result = stats.kstest(theta, haar_angle_cdf)
        assert result.statistic < 0.02
        assert result.pvalue > 1e-6
        assert haar_angle_cdf(np.array([0.0, 2 * np.pi])) == pytest.approx([0.0, 1.0])

    def test_random_density_matrix_is_valid(self):
        rho = random_density_matrix(make_rng(1), 4, rank=2)
        assert rho.validated
        assert np.sum(rho.eigenvalues() > 1e-12) == 2
