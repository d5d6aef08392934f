"""
Tests for Clebsch-Gordan coupling, the Schur basis and the noiseless codec
"""

from fractions import Fraction

import numpy as np
import pytest

from qmath import (
    CapacityError,
    DensityMatrix,
    DomainError,
    EmptySectorError,
    OutOfCodeError,
    PureState,
    SizeError,
    haar_su2_sample,
    is_unitary,
    make_rng,
    tensor_power,
)
from schur import (
    as_half_integer,
    assemble_block,
    block_extract,
    clebsch_gordan,
    commutant_dimension,
    coupling_paths,
    decode,
    encode,
    exchange_logical_action,
    logical_qubit_count,
    make_codec,
    multiplicity,
    multiplicity_by_diagonalization,
    schur_basis,
    sector_spins,
    sector_weights,
    singlet_measurement,
)


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def rng():
    return make_rng(31)


@pytest.fixture
def singlet_codec():
    return make_codec(4, 0)


# ============================================================
# Clebsch-Gordan
# ============================================================

class TestClebschGordan:
    """Condon-Shortley 부호 규약"""

    def test_two_spin_singlet(self):
        h = Fraction(1, 2)
        assert clebsch_gordan(h, h, 0, h, -h, 0) == pytest.approx(1 / np.sqrt(2))
        assert clebsch_gordan(h, h, 0, -h, h, 0) == pytest.approx(-1 / np.sqrt(2))

    def test_spin_one_plus_half(self):
        h = Fraction(1, 2)
        assert clebsch_gordan(1, h, h, 1, -h, h) == pytest.approx(np.sqrt(2 / 3))
        assert clebsch_gordan(1, h, h, 0, h, h) == pytest.approx(-np.sqrt(1 / 3))

    def test_projection_mismatch_is_zero(self):
        assert clebsch_gordan(1, 1, 1, 1, 0, 0) == 0.0

    def test_triangle_violation(self):
        with pytest.raises(DomainError):
            clebsch_gordan(0.5, 0.5, 2, 0.5, 0.5, 1)

    def test_half_integer_parsing(self):
        assert as_half_integer("3/2") == Fraction(3, 2)
        assert as_half_integer("1.5") == Fraction(3, 2)
        assert as_half_integer(2) == Fraction(2)
        with pytest.raises(DomainError):
            as_half_integer(0.3)
        with pytest.raises(DomainError):
            as_half_integer("spin")


# ============================================================
# Multiplicities
# ============================================================

class TestMultiplicity:
    """H_jS 차원"""

    @pytest.mark.parametrize("n, j, expected", [
        (2, 0, 1), (2, 1, 1),
        (3, Fraction(1, 2), 2), (3, Fraction(3, 2), 1),
        (4, 0, 2), (4, 1, 3), (4, 2, 1),
        (5, Fraction(1, 2), 5), (5, Fraction(3, 2), 4),
    ])
    def test_known_values(self, n, j, expected):
        assert multiplicity(n, j) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dimension_count(self, n):
        assert sum(int(2 * j + 1) * multiplicity(n, j) for j in sector_spins(n)) == 2 ** n

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_diagonalization(self, n):
        for j in sector_spins(n):
            assert multiplicity(n, j) == multiplicity_by_diagonalization(n, j)

    def test_paths_count_multiplicity(self):
        assert len(list(coupling_paths(6, 1))) == multiplicity(6, 1)

    def test_parity_mismatch(self):
        with pytest.raises(DomainError):
            multiplicity(4, Fraction(1, 2))

    def test_logical_qubit_count(self):
        assert logical_qubit_count(3) == 1
        assert logical_qubit_count(4) == 1
        assert logical_qubit_count(6) == 3


# ============================================================
# Schur basis
# ============================================================

class TestSchurBasis:
    """결합 기저"""

    def test_unitary(self):
        assert is_unitary(schur_basis(5).unitary)

    def test_collective_rotation_is_block_diagonal(self, rng):
        basis = schur_basis(4)
        u = haar_su2_sample(rng)
        m = basis.to_schur(tensor_power(u, 4))
        for j in basis.spins:
            sl = basis.block_slice(j)
            off = np.delete(m[sl], np.r_[sl], axis=1)
            assert np.max(np.abs(off), initial=0.0) < 1e-12

    def test_cap(self):
        with pytest.raises(SizeError):
            schur_basis(11)

    def test_labels_sorted_by_spin(self):
        labels = schur_basis(3).labels
        assert labels[0].j == Fraction(3, 2) and labels[0].m == Fraction(3, 2)
        assert labels[-1].j == Fraction(1, 2)


# ============================================================
# Codec
# ============================================================

class TestCodec:
    """잡음없는 부분계 코덱"""

    def test_logical_dim_defaults_to_multiplicity(self, singlet_codec):
        assert singlet_codec.logical_dim == 2

    def test_capacity(self):
        with pytest.raises(CapacityError):
            make_codec(4, 0, logical_dim=3)

    def test_roundtrip(self, singlet_codec):
        logical = PureState.from_vector([0.6, 0.8j])
        recovered, weight = decode(singlet_codec, encode(singlet_codec, logical))
        assert weight == pytest.approx(1.0)
        assert recovered.fidelity(logical) == pytest.approx(1.0)

    def test_invariant_under_collective_rotation(self, singlet_codec, rng):
        physical = encode(singlet_codec, PureState.from_vector([1, 1j], normalize=True))
        for _ in range(10):
            u = tensor_power(haar_su2_sample(rng), 4)
            np.testing.assert_allclose(u @ physical.amplitudes, physical.amplitudes, atol=1e-12)

    def test_nonzero_sector_logical_state_survives(self, rng):
        codec = make_codec(3, "1/2")
        logical = PureState.from_vector([1, -1], normalize=True)
        rotated = PureState(tensor_power(haar_su2_sample(rng), 3) @ encode(codec, logical).amplitudes)
        rho = DensityMatrix.from_pure(rotated)
        sigma = block_extract(rho, schur_basis(3), "1/2").sigma_s
        np.testing.assert_allclose(sigma.matrix, DensityMatrix.from_pure(logical).matrix, atol=1e-12)

    def test_out_of_code(self, singlet_codec):
        with pytest.raises(OutOfCodeError):
            decode(singlet_codec, PureState.basis(0, 16))

    def test_exchange_is_logical_unitary(self, singlet_codec):
        assert is_unitary(exchange_logical_action(singlet_codec, 0, 1))

    def test_first_logical_vector_is_pair_of_singlets(self, singlet_codec):
        singlet = np.array([0, 1, -1, 0]) / np.sqrt(2.0)
        pairs = np.kron(singlet, singlet)
        first = encode(singlet_codec, PureState.basis(0, 2)).amplitudes
        assert abs(np.vdot(pairs, first)) == pytest.approx(1.0, abs=1e-12)

    def test_first_pair_exchange_is_diagonal(self, singlet_codec):
        action = exchange_logical_action(singlet_codec, 0, 1)
        np.testing.assert_allclose(action, np.diag([-1.0, 1.0]), atol=1e-12)

    def test_two_qubit_singlet_swap_phase(self):
        codec = make_codec(2, 0)
        np.testing.assert_allclose(exchange_logical_action(codec, 0, 1), [[-1.0]], atol=1e-12)

    def test_adjacent_exchanges_act_irreducibly(self, singlet_codec):
        actions = [exchange_logical_action(singlet_codec, i, i + 1) for i in range(3)]
        assert commutant_dimension(actions) == 1


# ============================================================
# Block operations
# ============================================================

class TestBlockOperations:
    """j 블록 분해, singlet 측정, commutant"""

    def test_singlet_measurement(self):
        singlet = PureState.from_vector([0, 1, -1, 0], normalize=True)
        outcome = singlet_measurement(singlet, 0, 1)
        assert outcome.prob_singlet == pytest.approx(1.0)
        assert outcome.post_orthogonal is None

    def test_triplet_never_singlet(self):
        outcome = singlet_measurement(PureState.basis(0, 8), 0, 2)
        assert outcome.prob_singlet == pytest.approx(0.0)
        assert outcome.post_singlet is None

    def test_assemble_then_extract(self):
        basis = schur_basis(4)
        rho_r = DensityMatrix(np.diag([0.5, 0.3, 0.2]).astype(complex))
        sigma_s = DensityMatrix.from_pure(PureState.from_vector([1, 1, 0], normalize=True))
        block = block_extract(assemble_block(basis, 1, rho_r, sigma_s), basis, 1)
        assert block.weight == pytest.approx(1.0)
        assert not block.correlated
        np.testing.assert_allclose(block.rho_r.matrix, rho_r.matrix, atol=1e-12)
        np.testing.assert_allclose(block.sigma_s.matrix, sigma_s.matrix, atol=1e-12)

    def test_empty_sector(self):
        with pytest.raises(EmptySectorError):
            block_extract(DensityMatrix.from_pure(PureState.basis(0, 16)), schur_basis(4), 0)

    def test_sector_weights_sum_to_one(self, rng):
        rho = DensityMatrix.from_pure(PureState.from_vector(rng.normal(size=16), normalize=True))
        assert sum(sector_weights(rho, schur_basis(4)).values()) == pytest.approx(1.0)

    @pytest.mark.parametrize("n, expected", [(2, 2), (3, 5)])
    def test_commutant_dimension(self, rng, n, expected):
        mats = [tensor_power(haar_su2_sample(rng), n) for _ in range(4)]
        assert commutant_dimension(mats) == expected
