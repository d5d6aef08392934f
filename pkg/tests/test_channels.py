"""
Tests for boost decoherence channels and group twirls
"""

import numpy as np
import pytest

from qmath import (
    DensityMatrix,
    DomainError,
    PureState,
    RegimeError,
    ShapeError,
    SizeError,
    SuperluminalError,
    apply_channel,
    choi_distance,
    haar_su2_sample,
    make_rng,
    random_pure_state,
    tensor_power,
    trace_distance,
)
from lorentz import FourVector, boost_from_velocity
from wavepacket.packet import make_packet
from schur import make_codec, schur_basis, encode
from channels import (
    BoostPrior,
    TwirlMethod,
    boost_channel_approx,
    boost_channel_exact,
    boost_mixture,
    collective_twirl,
    dephasing_twirl,
    gamma,
    residual_code_fidelity,
    twirl_single,
    wigner_rotation_channel,
)


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def plus():
    return DensityMatrix.from_pure(PureState.from_vector([1, 1], normalize=True))


@pytest.fixture
def all_up_4():
    return DensityMatrix.from_pure(PureState.basis(0, 16))


@pytest.fixture
def rng():
    return make_rng(99)


# ============================================================
# Γ parameter
# ============================================================

class TestGamma:
    """Γ(v, Δ) = vΔ / (1 + sqrt(1 - v²))"""

    def test_value(self):
        g = gamma(0.5, 0.05)
        assert g.gamma == pytest.approx(0.025 / (1.0 + np.sqrt(0.75)))

    def test_small_velocity_limit(self):
        assert gamma(1e-9, 0.1).gamma == pytest.approx(0.5e-10, rel=1e-9)

    def test_superluminal(self):
        with pytest.raises(SuperluminalError):
            gamma(1.0, 0.1)

    @pytest.mark.parametrize("v, delta", [(0.0, 0.1), (-0.3, 0.1), (0.5, 0.0)])
    def test_domain(self, v, delta):
        with pytest.raises(DomainError):
            gamma(v, delta)


# ============================================================
# Boost channels
# ============================================================

class TestBoostChannels:
    """근사 / 정확 부스트 채널"""

    def test_approx_is_cptp(self):
        report = boost_channel_approx(gamma(0.9, 0.1)).choi_report
        assert report.accepted

    def test_approx_fidelity_on_plus(self, plus):
        g = gamma(0.7, 0.05)
        out = apply_channel(boost_channel_approx(g), plus)
        fid = float(np.real(np.trace(plus.matrix @ out.matrix)))
        assert fid == pytest.approx(1.0 - g.gamma ** 2 / 8.0, abs=1e-15)

    def test_approx_preserves_z_populations_to_second_order(self):
        g = gamma(0.5, 0.1)
        out = apply_channel(boost_channel_approx(g), DensityMatrix.from_pure(PureState.basis(0, 2)))
        assert out.matrix[1, 1].real == pytest.approx(g.gamma ** 2 / 4.0)

    def test_regime_limit(self):
        with pytest.raises(RegimeError):
            boost_channel_approx(gamma(0.99, 1.0))

    def test_exact_matches_approx(self):
        """Choi 거리 O(Δ⁴), Δ 반감 시 >= 8배 감소"""
        distances = []
        for delta in (0.05, 0.025):
            exact = boost_channel_exact(0.5, make_packet(delta))
            distances.append(choi_distance(exact, boost_channel_approx(gamma(0.5, delta))))
        assert distances[0] < 1e-4
        assert distances[0] / distances[1] >= 8.0

    def test_exact_is_cptp(self):
        assert boost_channel_exact(0.8, make_packet(0.05)).choi_report.accepted

    def test_sharp_momentum_is_unitary(self):
        ch = wigner_rotation_channel(boost_from_velocity([0, 0, 0.5]), FourVector.on_shell([1.0, 0, 0]))
        assert ch.n_kraus == 1
        assert ch.choi_report.accepted


class TestBoostMixture:
    """속도 사전분포 평균"""

    def test_point_mass_equals_approx(self):
        mix = boost_mixture(BoostPrior.point_mass(0.6), 0.05)
        assert choi_distance(mix, boost_channel_approx(gamma(0.6, 0.05))) < 1e-15

    def test_weights_normalized(self):
        prior = BoostPrior.from_weights([0.2, 0.4], [1.0, 3.0])
        np.testing.assert_allclose(prior.weights, [0.25, 0.75])

    def test_mixture_is_average(self, plus):
        prior = BoostPrior.uniform([0.3, 0.9])
        mixed = apply_channel(boost_mixture(prior, 0.1), plus).matrix
        parts = [apply_channel(boost_channel_approx(gamma(v, 0.1)), plus).matrix for v in (0.3, 0.9)]
        np.testing.assert_allclose(mixed, 0.5 * (parts[0] + parts[1]), atol=1e-15)

    def test_bad_prior(self):
        with pytest.raises(DomainError):
            BoostPrior(((0.5, 0.7),))
        with pytest.raises(DomainError):
            BoostPrior.uniform([1.2])


class TestResidualCodeFidelity:
    """인코딩 상태의 잔여 결어긋남"""

    def test_singlet_code_second_order(self):
        g = gamma(0.5, 0.05)
        infidelity = 1.0 - residual_code_fidelity(make_codec(4, 0), g)
        assert infidelity == pytest.approx(g.gamma ** 2, rel=1e-2)

    def test_fidelity_decreases_with_velocity(self):
        codec = make_codec(4, 0)
        values = [residual_code_fidelity(codec, gamma(v, 0.05)) for v in (0.2, 0.5, 0.8)]
        assert values[0] > values[1] > values[2]


# ============================================================
# Twirls
# ============================================================

class TestTwirlMethod:

    def test_aliases(self):
        assert TwirlMethod.parse("mc") is TwirlMethod.MONTE_CARLO
        assert TwirlMethod.parse("exact-projector") is TwirlMethod.EXACT

    def test_unknown(self):
        with pytest.raises(DomainError):
            TwirlMethod.parse("fourier")


class TestSingleTwirl:
    """단일 큐비트 트월 -> I/2"""

    def test_exact(self, plus):
        result = twirl_single(plus)
        np.testing.assert_allclose(result.output.matrix, np.eye(2) / 2)

    def test_monte_carlo_within_stat_tol(self, plus):
        result = twirl_single(plus, "monte-carlo", samples=20000, seed=5)
        assert result.stat_tol == pytest.approx(3.0 / np.sqrt(20000))
        assert np.max(np.abs(result.output.matrix - np.eye(2) / 2)) < result.stat_tol

    def test_monte_carlo_reproducible(self, plus):
        a = twirl_single(plus, "mc", samples=5000, seed=17, chunk_size=1000)
        b = twirl_single(plus, "mc", samples=5000, seed=17, chunk_size=1000)
        np.testing.assert_array_equal(a.output.matrix, b.output.matrix)

    def test_requires_qubit(self, all_up_4):
        with pytest.raises(ShapeError):
            twirl_single(all_up_4)


class TestCollectiveTwirl:
    """집단 SU(2) 트월"""

    def test_all_up_spreads_over_symmetric_subspace(self, all_up_4):
        out = collective_twirl(all_up_4, schur_basis(4)).output
        assert out.purity() == pytest.approx(1.0 / 5.0)
        eig = np.sort(out.eigenvalues())[::-1]
        np.testing.assert_allclose(eig[:5], 0.2, atol=1e-12)

    def test_output_is_invariant(self, all_up_4, rng):
        out = collective_twirl(all_up_4, schur_basis(4)).output.matrix
        u = tensor_power(haar_su2_sample(rng), 4)
        np.testing.assert_allclose(u @ out @ u.conj().T, out, atol=1e-12)

    def test_idempotent(self, rng):
        rho = DensityMatrix.from_pure(PureState.from_vector(rng.normal(size=8) + 1j * rng.normal(size=8), normalize=True))
        basis = schur_basis(3)
        once = collective_twirl(rho, basis).output
        twice = collective_twirl(once, basis).output
        np.testing.assert_allclose(twice.matrix, once.matrix, atol=1e-12)

    def test_code_state_untouched(self):
        codec = make_codec(4, 0)
        state = DensityMatrix.from_pure(encode(codec, PureState.from_vector([0.6, 0.8j])))
        out = collective_twirl(state, schur_basis(4)).output
        np.testing.assert_allclose(out.matrix, state.matrix, atol=1e-12)

    def test_monte_carlo_agrees_with_exact(self, rng):
        rho = DensityMatrix.from_pure(PureState.from_vector([1, 0, 0, 1], normalize=True))
        exact = collective_twirl(rho, schur_basis(2)).output.matrix
        mc = collective_twirl(rho, None, "monte-carlo", samples=20000, seed=3)
        assert np.max(np.abs(mc.output.matrix - exact)) < mc.stat_tol

    def test_monte_carlo_agrees_on_random_states(self, rng):
        """무작위 2 큐비트 상태 20개, 모두 stat_tol 이내"""
        schur = schur_basis(2)
        for k in range(20):
            rho = DensityMatrix.from_pure(random_pure_state(rng, 4))
            exact = collective_twirl(rho, schur).output
            mc = collective_twirl(rho, None, "monte-carlo", samples=20000, seed=100 + k)
            assert trace_distance(exact, mc.output) <= mc.stat_tol

    def test_exact_size_cap(self):
        rho = DensityMatrix.from_pure(PureState.basis(0, 2 ** 9))
        with pytest.raises(SizeError):
            collective_twirl(rho, None)

    def test_exact_needs_matching_basis(self, all_up_4):
        with pytest.raises(ShapeError):
            collective_twirl(all_up_4, schur_basis(3))


class TestDephasingTwirl:
    """공통축 위상 트월"""

    def test_exact_keeps_equal_weight_coherences(self):
        rho = DensityMatrix.from_pure(PureState.from_vector([1, 1, 1, 1], normalize=True))
        out = dephasing_twirl(rho).output.matrix
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[3, 3] = 0.25
        expected[1:3, 1:3] = 0.25
        np.testing.assert_allclose(out, expected, atol=1e-15)

    def test_monte_carlo_within_stat_tol(self):
        rho = DensityMatrix.from_pure(PureState.from_vector([1, 1, 1, 1], normalize=True))
        exact = dephasing_twirl(rho).output.matrix
        mc = dephasing_twirl(rho, "mc", samples=20000, seed=8)
        assert np.max(np.abs(mc.output.matrix - exact)) < mc.stat_tol
