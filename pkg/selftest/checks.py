"""
Invariant Checks
불변량 / 오라클 검사 구현

Usage:
    from selftest.checks import (
        SingleTwirlCheck, BoostChannelCheck, CollectiveCodeCheck,
        SchurBlockCheck, MultiplicityCheck, PhotonInvarianceCheck,
    )

    outcome = SingleTwirlCheck().run(CheckContext(seed=7))
"""

from math import log2

import numpy as np

from qmath.channel import choi_distance
from qmath.linalg import permutation_operator, tensor_power, trace_distance
from qmath.sampling import haar_su2_batch, random_density_matrix, random_pure_state
from qmath.states import DensityMatrix, PureState
from lorentz.group import FourVector, random_element
from lorentz.wigner import wigner_rotation
from channels.boost import (
    BoostPrior,
    boost_channel_approx,
    boost_channel_exact,
    boost_mixture,
    gamma,
    wigner_rotation_channel,
)
from channels.twirl import collective_twirl, twirl_single
from photon.codec import (
    apply_lorentz_photon,
    balanced_sector_dimension,
    dephasing_capacity_bits,
    dephasing_logical_count,
    photon_codec_decode,
    photon_codec_encode,
)
from photon.little_group import little_group_phase, little_group_sl2
from schur.basis import (
    logical_qubit_count,
    multiplicity,
    multiplicity_by_diagonalization,
    schur_basis,
    sector_spins,
)
from schur.codec import encode, make_codec
from wavepacket.packet import (
    PROTON_MASS_MEV,
    analytic_gaussian_overlap,
    make_packet,
    min_separation,
    overlap,
    to_angstrom,
)
from .base import InvariantCheck, CheckContext, CheckOutcome, CheckLevel


def _phase_gap(angle: float) -> float:
    """가장 가까운 2π 배수까지의 거리"""
    wrapped = (angle + np.pi) % (2.0 * np.pi) - np.pi
    return abs(wrapped)


class SingleTwirlCheck(InvariantCheck):
    """단일 큐비트 트월 -> I/2"""

    def __init__(self, n_inputs: int = 20, exact_tol: float = 1e-12):
        self.n_inputs = n_inputs
        self.exact_tol = exact_tol

    @property
    def name(self) -> str:
        return "single_twirl"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(1)
        mixed = DensityMatrix.maximally_mixed(2)
        worst_exact = 0.0
        worst_mc = 0.0
        for k in range(self.n_inputs):
            rho = random_density_matrix(rng, 2)
            worst_exact = max(worst_exact, trace_distance(twirl_single(rho).output, mixed))
            mc = twirl_single(rho, "monte-carlo", context.samples, context.seed + k, context.chunk_size)
            worst_mc = max(worst_mc, trace_distance(mc.output, mixed))
        passed = worst_exact <= self.exact_tol and worst_mc <= context.stat_tol
        return self.outcome(
            passed,
            f"exact {worst_exact:.2e} (tol {self.exact_tol:g}), MC {worst_mc:.2e} (tol {context.stat_tol:.2e})",
            measured=worst_mc,
            tolerance=context.stat_tol,
            worst_exact=worst_exact,
        )


class BoostChannelCheck(InvariantCheck):
    """정확 구적 채널 vs 근사 채널, Δ 반감 스케일링"""

    def __init__(self, v: float = 0.5, delta: float = 0.05, tol: float = 1e-4, min_ratio: float = 8.0):
        self.v = v
        self.delta = delta
        self.tol = tol
        self.min_ratio = min_ratio

    @property
    def name(self) -> str:
        return "boost_channel_reconstruction"

    def _discrepancy(self, delta: float, nodes: int) -> float:
        exact = boost_channel_exact(self.v, make_packet(delta, nodes=nodes))
        return choi_distance(exact, boost_channel_approx(gamma(self.v, delta)))

    def run(self, context: CheckContext) -> CheckOutcome:
        full = self._discrepancy(self.delta, context.nodes)
        half = self._discrepancy(self.delta / 2.0, context.nodes)
        ratio = full / half if half > 0 else float('inf')
        passed = full <= self.tol and ratio >= self.min_ratio
        return self.outcome(
            passed,
            f"choi discrepancy {full:.3e} (tol {self.tol:g}), halving ratio {ratio:.2f} (min {self.min_ratio:g})",
            measured=full,
            tolerance=self.tol,
            halving_ratio=ratio,
        )


class CollectiveCodeCheck(InvariantCheck):
    """N=4 singlet 코드는 집단 회전/트월에 불변, 단일 큐비트는 I/2 로"""

    def __init__(self, n_rotations: int = 1000, n_logical: int = 5, tol: float = 1e-12):
        self.n_rotations = n_rotations
        self.n_logical = n_logical
        self.tol = tol

    @property
    def name(self) -> str:
        return "collective_code_invariance"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(3)
        codec = make_codec(4, 0)
        schur = schur_basis(4)
        rotations = haar_su2_batch(rng, self.n_rotations)

        worst = 0.0
        for _ in range(self.n_logical):
            psi = encode(codec, random_pure_state(rng, codec.logical_dim)).amplitudes
            for u in rotations:
                moved = tensor_power(u, 4) @ psi
                worst = max(worst, 1.0 - abs(np.vdot(psi, moved)) ** 2)
            rho = DensityMatrix.from_pure(PureState(psi))
            out = collective_twirl(rho, schur).output
            worst = max(worst, 1.0 - float(np.real(np.vdot(psi, out.matrix @ psi))))

        single = trace_distance(
            twirl_single(DensityMatrix.from_pure(PureState.basis(0, 2))).output,
            DensityMatrix.maximally_mixed(2),
        )
        passed = worst <= self.tol and single <= self.tol
        return self.outcome(
            passed,
            f"worst encoded infidelity {worst:.2e}, bare qubit distance to I/2 {single:.2e}",
            measured=worst,
            tolerance=self.tol,
            bare_qubit_distance=single,
        )


class SchurBlockCheck(InvariantCheck):
    """Schur 기저에서 u^⊗n = ⊕ D^j(u) ⊗ I, 용량 항등식"""

    def __init__(self, max_n: int = 6, n_unitaries: int = 20, tol: float = 1e-9):
        self.max_n = max_n
        self.n_unitaries = n_unitaries
        self.tol = tol

    @property
    def name(self) -> str:
        return "schur_block_structure"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(4)
        worst = 0.0
        for n in range(1, self.max_n + 1):
            schur = schur_basis(n)
            for u in haar_su2_batch(rng, self.n_unitaries):
                m = schur.to_schur(tensor_power(u, n))
                expected = np.zeros_like(m)
                for j in schur.spins:
                    sl = schur.block_slice(j)
                    dim_r, mult = int(2 * j + 1), multiplicity(n, j)
                    rep = np.einsum('aibi->ab', m[sl, sl].reshape(dim_r, mult, dim_r, mult)) / mult
                    expected[sl, sl] = np.kron(rep, np.eye(mult))
                worst = max(worst, float(np.max(np.abs(m - expected))))

        capacity_ok = all(
            sum(int(2 * j + 1) * multiplicity(n, j) for j in sector_spins(n)) == 2 ** n
            for n in range(1, 11)
        )
        return self.outcome(
            worst <= self.tol and capacity_ok,
            f"block defect {worst:.2e} (tol {self.tol:g}), capacity identity {'ok' if capacity_ok else 'broken'}",
            measured=worst,
            tolerance=self.tol,
        )


class MultiplicityCheck(InvariantCheck):
    """결합 경로 수 vs J² 대각화, 논리 큐비트 수"""

    def __init__(self, max_n: int = 8, rate_bound: float = 1.5):
        self.max_n = max_n
        self.rate_bound = rate_bound

    @property
    def name(self) -> str:
        return "multiplicity_table"

    def run(self, context: CheckContext) -> CheckOutcome:
        mismatches = [
            (n, str(j))
            for n in range(1, self.max_n + 1)
            for j in sector_spins(n)
            if multiplicity(n, j) != multiplicity_by_diagonalization(n, j)
        ]
        counts_ok = logical_qubit_count(4) == 1 and logical_qubit_count(8) == 4
        gap = max(n - logical_qubit_count(n) - log2(n) for n in range(4, 11))
        passed = not mismatches and counts_ok and gap < self.rate_bound
        return self.outcome(
            passed,
            f"{len(mismatches)} mismatches, pinned counts {'ok' if counts_ok else 'wrong'}, "
            f"max n - count - log2 n = {gap:.3f} (bound {self.rate_bound:g})",
            measured=gap,
            tolerance=self.rate_bound,
            mismatches=mismatches,
        )


class PhotonInvarianceCheck(InvariantCheck):
    """두 광자 코드 불변성, little group 삼각성, ω 코사이클"""

    def __init__(self, fidelity_tol: float = 1e-12, triangular_tol: float = 1e-9, cocycle_tol: float = 1e-8):
        self.fidelity_tol = fidelity_tol
        self.triangular_tol = triangular_tol
        self.cocycle_tol = cocycle_tol

    @property
    def name(self) -> str:
        return "photon_code_invariance"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(6)
        worst_fid = 0.0
        worst_tri = 0.0
        worst_cocycle = 0.0
        for _ in range(context.trials):
            lam1 = random_element(rng)
            lam2 = random_element(rng)
            p = FourVector.massless(rng.standard_normal(3))
            logical = random_pure_state(rng, 2)

            decoded = photon_codec_decode(apply_lorentz_photon(lam1, photon_codec_encode(logical, p)))
            worst_fid = max(worst_fid, 1.0 - decoded.fidelity(logical))
            worst_tri = max(worst_tri, abs(little_group_sl2(lam1, p)[1, 0]))

            combined = little_group_phase(lam2.compose(lam1), p).omega
            split = little_group_phase(lam2, lam1.apply(p)).omega + little_group_phase(lam1, p).omega
            worst_cocycle = max(worst_cocycle, _phase_gap(combined - split))

        passed = (
            worst_fid <= self.fidelity_tol
            and worst_tri <= self.triangular_tol
            and worst_cocycle <= self.cocycle_tol
        )
        return self.outcome(
            passed,
            f"infidelity {worst_fid:.2e}, triangularity {worst_tri:.2e}, cocycle {worst_cocycle:.2e}",
            measured=worst_fid,
            tolerance=self.fidelity_tol,
            triangularity=worst_tri,
            cocycle=worst_cocycle,
        )


class PhotonRateCheck(InvariantCheck):
    """집단 위상 코드 용량"""

    def __init__(self, capacity_bound: float = 1.1, count_bound: float = 1.5, max_n: int = 20):
        self.capacity_bound = capacity_bound
        self.count_bound = count_bound
        self.max_n = max_n

    @property
    def name(self) -> str:
        return "photon_rates"

    def run(self, context: CheckContext) -> CheckOutcome:
        pinned = (
            dephasing_logical_count(2) == 1
            and dephasing_logical_count(4) == 2
            and balanced_sector_dimension(4) == 6
        )
        evens = range(2, self.max_n + 1, 2)
        capacity_gap = max(n - dephasing_capacity_bits(n) - 0.5 * log2(n) for n in evens)
        count_gap = max(n - dephasing_logical_count(n) - 0.5 * log2(n) for n in evens)
        passed = pinned and capacity_gap < self.capacity_bound and count_gap < self.count_bound
        return self.outcome(
            passed,
            f"pinned counts {'ok' if pinned else 'wrong'}, capacity gap {capacity_gap:.3f} "
            f"(bound {self.capacity_bound:g}), floored gap {count_gap:.3f} (bound {self.count_bound:g})",
            measured=capacity_gap,
            tolerance=self.capacity_bound,
            floored_gap=count_gap,
        )


class DistinguishabilityCheck(InvariantCheck):
    """구적 겹침 vs exp(-a²Δ²/4), 양성자 분리 거리 규모"""

    def __init__(self, epsilon: float = 1e-3, rel_tol: float = 1e-3, reference_angstrom: float = 100.0):
        self.epsilon = epsilon
        self.rel_tol = rel_tol
        self.reference_angstrom = reference_angstrom

    @property
    def name(self) -> str:
        return "packet_distinguishability"

    def run(self, context: CheckContext) -> CheckOutcome:
        packet = make_packet(self.epsilon, nodes=context.nodes)
        worst = 0.0
        for scaled in (0.5, 1.0, 2.0, 3.0):
            a = scaled / self.epsilon
            expected = analytic_gaussian_overlap(self.epsilon, a)
            worst = max(worst, abs(abs(overlap(packet, a)) - expected) / expected)

        proton = to_angstrom(min_separation(1e-8, nodes=context.nodes), PROTON_MASS_MEV)
        scale_ok = self.reference_angstrom / 10.0 <= proton <= self.reference_angstrom * 10.0
        return self.outcome(
            worst <= self.rel_tol and scale_ok,
            f"overlap relative error {worst:.2e} (tol {self.rel_tol:g}), proton separation {proton:.1f} A",
            measured=worst,
            tolerance=self.rel_tol,
            proton_separation_angstrom=proton,
        )


class WignerCocycleCheck(InvariantCheck):
    """W(Λ2Λ1, p) = ±W(Λ2, Λ1p) W(Λ1, p)"""

    def __init__(self, tol: float = 1e-9):
        self.tol = tol

    @property
    def name(self) -> str:
        return "wigner_cocycle"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(9)
        worst = 0.0
        for _ in range(context.trials):
            lam1 = random_element(rng)
            lam2 = random_element(rng)
            p = FourVector.on_shell(rng.standard_normal(3))
            combined = wigner_rotation(lam2.compose(lam1), p).su2
            split = wigner_rotation(lam2, lam1.apply(p)).su2 @ wigner_rotation(lam1, p).su2
            err = min(np.max(np.abs(combined - split)), np.max(np.abs(combined + split)))
            worst = max(worst, float(err))
        return self.outcome(worst <= self.tol, f"cocycle defect {worst:.2e} (tol {self.tol:g})",
                            measured=worst, tolerance=self.tol)


class ChannelIntegrityCheck(InvariantCheck):
    """생성된 모든 채널의 Choi / TP 검사"""

    @property
    def name(self) -> str:
        return "channel_integrity"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(10)
        channels = [
            boost_channel_approx(gamma(0.6, 0.01)),
            boost_channel_exact(0.5, make_packet(0.05, nodes=context.nodes)),
            boost_mixture(BoostPrior.uniform([0.1 * k for k in range(1, 10)]), 0.01),
            wigner_rotation_channel(random_element(rng), FourVector.on_shell(rng.standard_normal(3))),
        ]
        rejected = [ch.label for ch in channels if not ch.choi_report.accepted]
        worst_tp = max(ch.choi_report.tp_defect for ch in channels)
        return self.outcome(not rejected, f"{len(channels) - len(rejected)}/{len(channels)} channels accepted",
                            measured=worst_tp, rejected=rejected)


class TwirlStructureCheck(InvariantCheck):
    """정확 트월의 멱등성, 공변성, 순열 교환"""

    def __init__(self, n_qubits: int = 3, n_inputs: int = 5, idempotence_tol: float = 1e-12, tol: float = 1e-10):
        self.n_qubits = n_qubits
        self.n_inputs = n_inputs
        self.idempotence_tol = idempotence_tol
        self.tol = tol

    @property
    def name(self) -> str:
        return "twirl_structure"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(11)
        n = self.n_qubits
        schur = schur_basis(n)
        cycle = permutation_operator([(q + 1) % n for q in range(n)])
        worst_idem = 0.0
        worst_cov = 0.0
        for _ in range(self.n_inputs):
            rho = random_density_matrix(rng, 2 ** n)
            once = collective_twirl(rho, schur).output
            twice = collective_twirl(once, schur).output
            worst_idem = max(worst_idem, float(np.max(np.abs(once.matrix - twice.matrix))))

            u = tensor_power(haar_su2_batch(rng, 1)[0], n)
            rotated = DensityMatrix.from_matrix(u @ rho.matrix @ u.conj().T)
            worst_cov = max(worst_cov, float(np.max(np.abs(collective_twirl(rotated, schur).output.matrix - once.matrix))))

            permuted = DensityMatrix.from_matrix(cycle @ rho.matrix @ cycle.conj().T)
            expected = cycle @ once.matrix @ cycle.conj().T
            worst_cov = max(worst_cov, float(np.max(np.abs(collective_twirl(permuted, schur).output.matrix - expected))))

        passed = worst_idem <= self.idempotence_tol and worst_cov <= self.tol
        return self.outcome(
            passed,
            f"idempotence {worst_idem:.2e}, covariance/permutation {worst_cov:.2e}",
            measured=worst_idem,
            tolerance=self.idempotence_tol,
            covariance=worst_cov,
        )


class MonteCarloAgreementCheck(InvariantCheck):
    """Monte Carlo 트월 vs 정확 트월 (2 큐비트)"""

    def __init__(self, n_inputs: int = 20):
        self.n_inputs = n_inputs

    @property
    def name(self) -> str:
        return "monte_carlo_agreement"

    def run(self, context: CheckContext) -> CheckOutcome:
        rng = context.rng(12)
        schur = schur_basis(2)
        worst = 0.0
        for k in range(self.n_inputs):
            rho = random_density_matrix(rng, 4)
            exact = collective_twirl(rho, schur).output
            mc = collective_twirl(rho, None, "monte-carlo", context.samples, context.seed + k, context.chunk_size)
            worst = max(worst, trace_distance(exact, mc.output))
        return self.outcome(worst <= context.stat_tol,
                            f"worst trace distance {worst:.2e} (tol {context.stat_tol:.2e})",
                            measured=worst, tolerance=context.stat_tol)
