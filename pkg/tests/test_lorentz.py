"""
Tests for Lorentz group elements and Wigner rotations
"""

import numpy as np
import pytest

from qmath import DomainError, ShellError, SuperluminalError, make_rng
from lorentz import (
    METRIC,
    FourVector,
    LorentzElement,
    boost_from_velocity,
    random_element,
    rotation,
    rotation_angle_from_mat4,
    standard_boost,
    wigner_rotation,
    wigner_su2_batch,
)


def _same_up_to_sign(a, b, atol=1e-10):
    return np.allclose(a, b, atol=atol) or np.allclose(a, -b, atol=atol)


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def z_boost():
    return boost_from_velocity([0.0, 0.0, 0.5])


@pytest.fixture
def x_momentum():
    """E = 2 along x"""
    return FourVector.on_shell([np.sqrt(3.0), 0.0, 0.0])


@pytest.fixture
def rng():
    return make_rng(2024)


# ============================================================
# Group
# ============================================================

class TestLorentzElement:
    """SL(2,C) <-> SO+(1,3) 표현"""

    def test_boost_moves_rest_frame(self, z_boost):
        moved = z_boost.apply(FourVector.rest())
        gamma = 1.0 / np.sqrt(1.0 - 0.25)
        np.testing.assert_allclose(moved.as_array(), [gamma, 0.0, 0.0, 0.5 * gamma], atol=1e-12)

    def test_spinor_and_matrix_actions_agree(self, z_boost, x_momentum):
        np.testing.assert_allclose(
            z_boost.apply(x_momentum).as_array(),
            z_boost.apply_spinor(x_momentum).as_array(),
            atol=1e-12,
        )

    def test_composition_is_homomorphic(self, rng):
        a, b = random_element(rng), random_element(rng)
        np.testing.assert_allclose(a.compose(b).mat4, a.mat4 @ b.mat4, atol=1e-10)

    def test_inverse(self, rng):
        a = random_element(rng, max_rapidity=2.0)
        np.testing.assert_allclose(a.compose(a.inverse()).mat4, np.eye(4), atol=1e-10)

    def test_metric_preserved(self, rng):
        for _ in range(20):
            m = random_element(rng, max_rapidity=1.5).mat4
            np.testing.assert_allclose(m.T @ METRIC @ m, METRIC, atol=1e-10)

    def test_sign_canonicalized(self):
        a = LorentzElement.from_sl2(-np.eye(2))
        np.testing.assert_array_equal(a.sl2, np.eye(2))

    def test_superluminal_rejected(self):
        with pytest.raises(SuperluminalError):
            boost_from_velocity([0.6, 0.0, 0.8])

    def test_zero_rotation_axis_rejected(self):
        with pytest.raises(DomainError):
            rotation([0.0, 0.0, 0.0], 1.0)

    def test_rotation_oracle(self):
        axis, angle = rotation_angle_from_mat4(rotation([0.0, 0.0, 1.0], 0.7).mat4)
        np.testing.assert_allclose(axis, [0.0, 0.0, 1.0], atol=1e-12)
        assert angle == pytest.approx(0.7)


class TestStandardBoost:
    """L(p): 정지계 -> p"""

    def test_maps_rest_to_momentum(self, x_momentum):
        moved = standard_boost(x_momentum).apply(FourVector.rest())
        np.testing.assert_allclose(moved.as_array(), x_momentum.as_array(), atol=1e-12)

    def test_off_shell_rejected(self):
        with pytest.raises(ShellError):
            standard_boost(FourVector(2.0, 0.0, 0.0, 0.0))


# ============================================================
# Wigner rotations
# ============================================================

class TestWignerRotation:
    """Wigner 회전"""

    def test_perpendicular_boost_angle(self, z_boost, x_momentum):
        """z 부스트, x 운동량: y축 회전, tan θ = sinh ξ sinh η / (cosh ξ + cosh η)"""
        w = wigner_rotation(z_boost, x_momentum)
        xi, eta = np.arctanh(0.5), np.arccosh(2.0)
        expected = np.arctan(np.sinh(xi) * np.sinh(eta) / (np.cosh(xi) + np.cosh(eta)))
        assert abs(w.axis[1]) == pytest.approx(1.0)
        assert min(w.angle, 2 * np.pi - w.angle) == pytest.approx(expected, abs=1e-10)

    def test_matches_four_vector_oracle(self, rng):
        for _ in range(25):
            lam = random_element(rng, max_rapidity=1.5)
            p = FourVector.on_shell(rng.normal(size=3))
            w = wigner_rotation(lam, p)
            w4 = standard_boost(lam.apply(p)).inverse().mat4 @ lam.mat4 @ standard_boost(p).mat4
            _, oracle_angle = rotation_angle_from_mat4(w4)
            assert min(w.angle, 2 * np.pi - w.angle) == pytest.approx(oracle_angle, abs=1e-6)
            np.testing.assert_allclose(w.so3, w4[1:, 1:], atol=1e-8)

    def test_pure_rotation_is_its_own_wigner_rotation(self, x_momentum):
        lam = rotation([1.0, 2.0, -0.5], 0.9)
        w = wigner_rotation(lam, x_momentum)
        assert _same_up_to_sign(w.su2, lam.sl2)

    def test_rest_frame_boost_is_trivial(self, z_boost):
        w = wigner_rotation(z_boost, FourVector.rest())
        assert _same_up_to_sign(w.su2, np.eye(2))

    def test_cocycle(self, rng):
        for _ in range(10):
            a, b = random_element(rng), random_element(rng)
            p = FourVector.on_shell(rng.normal(size=3))
            lhs = wigner_rotation(a.compose(b), p).su2
            rhs = wigner_rotation(a, b.apply(p)).su2 @ wigner_rotation(b, p).su2
            assert _same_up_to_sign(lhs, rhs, atol=1e-8)

    def test_reconstruct(self, z_boost, x_momentum):
        w = wigner_rotation(z_boost, x_momentum)
        np.testing.assert_allclose(w.reconstruct(), w.su2, atol=1e-12)

    def test_batch_agrees_with_single(self, z_boost, rng):
        momenta = rng.normal(size=(6, 3))
        batch = wigner_su2_batch(z_boost, momenta)
        for k, p in enumerate(momenta):
            assert _same_up_to_sign(batch[k], wigner_rotation(z_boost, FourVector.on_shell(p)).su2)

    def test_off_shell_rejected(self, z_boost):
        with pytest.raises(ShellError):
            wigner_rotation(z_boost, FourVector(1.0, 1.0, 0.0, 0.0))
