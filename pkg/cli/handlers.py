"""
Subcommand Handlers
서브커맨드별 실행 파이프라인

Each handler takes the merged RunConfig and the ConfigManager and returns
a RunReport; it never prints.
"""

import dataclasses
import logging
from typing import Any, Dict, List, Optional, Union

import numpy as np
import pandas as pd

from qmath.channel import CHOI_TOL, TP_TOL, apply_channel
from qmath.errors import AccuracyError, SizeError, UsageError
from qmath.linalg import MAX_DIM
from qmath.states import DensityMatrix, PureState
from lorentz.group import (
    FourVector,
    LorentzElement,
    boost_from_velocity,
    rotation,
    rotation_angle_from_mat4,
    standard_boost,
)
from lorentz.wigner import wigner_rotation
from wavepacket.packet import (
    DISTINGUISHABILITY_THRESHOLD,
    analytic_gaussian_overlap,
    make_packet,
    overlap_with_error,
    separation_for,
    to_angstrom,
)
from channels.boost import (
    BoostPrior,
    boost_channel_approx,
    boost_mixture,
    gamma,
    lorentz_channel_exact,
)
from channels.twirl import TwirlMethod, collective_twirl, dephasing_twirl, twirl_single
from schur.basis import multiplicity, multiplicity_by_diagonalization, schur_basis, sector_spins
from schur.codec import decode, encode, make_codec
from photon.codec import (
    PhotonMode,
    apply_lorentz_photon,
    photon_codec_decode,
    photon_codec_encode,
)
from photon.little_group import little_group_phase
from engine.sweep_engine import RangeSpec, SweepEngine
from engine.metrics import smallest_ratio
from selftest.base import CheckContext
from selftest.suite import create_default_suite
from utils.config_manager import ConfigManager
from utils.state_io import read_state
from .config import RunConfig
from .report import RunReport

logger = logging.getLogger(__name__)

DEFAULT_CHECK_MAX = 8


# ============================================================
# Helpers
# ============================================================

def _require(config: RunConfig, key: str) -> Any:
    value = config.params.get(key)
    if value is None:
        raise UsageError(f"'{config.label}' needs --{key.replace('_', '-')}")
    return value


def _lorentz_from(config: RunConfig) -> LorentzElement:
    """--boost ∘ --rotate (둘 다 없으면 항등)"""
    lam = LorentzElement.identity()
    rotate = config.params.get("rotate")
    if rotate is not None:
        if len(rotate) != 4:
            raise UsageError(f"--rotate takes ax,ay,az,angle, got {len(rotate)} numbers")
        lam = rotation(rotate[:3], rotate[3])
    boost = config.params.get("boost")
    if boost is not None:
        lam = boost_from_velocity(boost).compose(lam)
    return lam


def _as_density(state: Union[PureState, DensityMatrix], validate: bool) -> DensityMatrix:
    if isinstance(state, DensityMatrix):
        return state
    amps = state.amplitudes
    return DensityMatrix(np.outer(amps, amps.conj()), validate=validate)


def _read_state(config: RunConfig, path: str) -> Union[PureState, DensityMatrix]:
    """상태 파일 읽기 + caps.max_dim 검사"""
    state = read_state(path, config.validate_inputs)
    max_dim = config.cap("max_dim", MAX_DIM)
    if state.dim > max_dim:
        raise SizeError(f"state dimension {state.dim} exceeds cap {max_dim}")
    return state


def _input_density(config: RunConfig, default: Optional[DensityMatrix] = None) -> DensityMatrix:
    path = config.params.get("input")
    bits = config.params.get("basis")
    if path is not None:
        return _as_density(_read_state(config, path), config.validate_inputs)
    if bits is not None:
        if not bits or set(bits) - {"0", "1"}:
            raise UsageError(f"--basis takes a bit string, got {bits!r}")
        if 2 ** len(bits) > config.cap("max_dim", MAX_DIM):
            raise SizeError(f"--basis {bits} exceeds cap {config.cap('max_dim', MAX_DIM)}")
        return DensityMatrix.from_pure(PureState.basis(int(bits, 2), 2 ** len(bits)))
    if default is None:
        raise UsageError(f"'{config.label}' needs --input or --basis")
    return default


def _report(config: RunConfig, results: Dict[str, Any], diagnostics: Optional[Dict[str, Any]] = None,
            table: Optional[pd.DataFrame] = None, exit_code: int = 0) -> RunReport:
    diagnostics = dict(diagnostics or {})
    if not config.validate_inputs:
        diagnostics["validated"] = False
    return RunReport(config, results, diagnostics, table, exit_code=exit_code)


def _complex_pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


# ============================================================
# Handlers
# ============================================================

def handle_wigner(config: RunConfig, manager: ConfigManager) -> RunReport:
    """wigner --boost v --momentum p"""
    p = FourVector.on_shell(_require(config, "momentum"))
    lam = _lorentz_from(config)
    w = wigner_rotation(lam, p)
    lam_p = lam.apply(p)
    w4 = standard_boost(lam_p).inverse().mat4 @ lam.mat4 @ standard_boost(p).mat4
    oracle_axis, oracle_angle = rotation_angle_from_mat4(w4)
    results = dict(w.to_dict(), momentum_in=p.to_dict(), momentum_out=lam_p.to_dict())
    diagnostics = {"oracle": {"axis": [float(c) for c in oracle_axis], "angle": oracle_angle}}
    return _report(config, results, diagnostics)


def handle_overlap(config: RunConfig, manager: ConfigManager) -> RunReport:
    """overlap --delta Δ [--separation a] [--threshold t] [--mass-mev m]"""
    delta = _require(config, "delta")
    packet = make_packet(
        delta,
        nodes=config.quadrature_nodes,
        max_delta=manager.get_config_value("wavepacket.max_delta", 0.2),
    )
    tol = manager.get_config_value("quadrature.overlap_tol", 1e-6)
    mass = config.params.get("mass_mev")
    results: Dict[str, Any] = {}
    diagnostics: Dict[str, Any] = {}

    a = config.params.get("separation")
    if a is not None:
        value, error = overlap_with_error(packet, a)
        if error > tol:
            raise AccuracyError(f"overlap quadrature not converged at a={a}: estimate {error:.3e}")
        results.update(a=a, delta=delta, overlap_re=value.real, overlap_im=value.imag,
                       overlap_abs=abs(value), analytic_gaussian=analytic_gaussian_overlap(delta, a))
        diagnostics["overlap_error_estimate"] = error
    else:
        results["delta"] = delta

    threshold = config.params.get("threshold")
    if threshold is not None or a is None:
        threshold = threshold if threshold is not None else manager.get_config_value(
            "wavepacket.distinguishability_threshold", DISTINGUISHABILITY_THRESHOLD)
        a_min = separation_for(packet, threshold)
        results.update(threshold=threshold, min_separation=a_min)
        if mass is not None:
            results["min_separation_angstrom"] = to_angstrom(a_min, mass)
    return _report(config, results, diagnostics)


def handle_channel(config: RunConfig, manager: ConfigManager) -> RunReport:
    """channel {boost-approx, boost-exact, mixture}"""
    delta = _require(config, "delta")
    rho = _input_density(config, DensityMatrix.from_pure(PureState.basis(0, 2)))
    diagnostics: Dict[str, Any] = {}

    if config.action == "boost-approx":
        g = gamma(_require(config, "v"), delta)
        channel = boost_channel_approx(g)
        params = g.to_dict()
    elif config.action == "boost-exact":
        g = gamma(_require(config, "v"), delta)
        packet = make_packet(delta, nodes=config.quadrature_nodes,
                             max_delta=manager.get_config_value("wavepacket.max_delta", 0.2))
        channel, error = lorentz_channel_exact(
            boost_from_velocity([0.0, 0.0, g.v]), packet,
            manager.get_config_value("quadrature.channel_tol", 1e-6),
        )
        params = dict(g.to_dict(), nodes=config.quadrature_nodes)
        diagnostics["quadrature_error_estimate"] = error
    else:
        velocities = _require(config, "velocities")
        weights = config.params.get("weights") or [1.0] * len(velocities)
        prior = BoostPrior.from_weights(velocities, weights)
        channel = boost_mixture(prior, delta)
        params = dict(prior.to_dict(), delta=delta)

    numerics = manager.get_numerics()
    choi = dataclasses.replace(
        channel.choi_report,
        tp_tol=numerics.get("tp_tol", TP_TOL),
        choi_tol=numerics.get("choi_tol", CHOI_TOL),
    )
    out = apply_channel(channel, rho)
    results = {
        "channel": config.action,
        "params": params,
        "choi_defects": choi.to_dict(),
        "output_state": out.to_dict(),
    }
    return _report(config, results, diagnostics)


def handle_twirl(config: RunConfig, manager: ConfigManager) -> RunReport:
    """twirl --kind {single, collective, dephasing} --method ..."""
    rho = _input_density(config)
    kind = config.params.get("kind") or "collective"
    method = TwirlMethod.parse(config.params.get("method") or TwirlMethod.EXACT.value)
    mc = dict(samples=config.samples, seed=config.seed, chunk_size=config.chunk_size)

    if kind == "single":
        result = twirl_single(rho, method, **mc)
    elif kind == "dephasing":
        result = dephasing_twirl(rho, method, **mc)
    else:
        max_qubits = config.cap("max_twirl_qubits", 8)
        schur = None
        if method is TwirlMethod.EXACT:
            if rho.n_qubits > max_qubits:
                raise SizeError(f"exact collective twirl capped at {max_qubits} qubits, got {rho.n_qubits}")
            schur = schur_basis(rho.n_qubits, config.cap("max_schur_qubits", 10))
        result = collective_twirl(rho, schur, method, max_qubits=max_qubits, **mc)

    results = dict(result.to_dict(), kind=kind)
    diagnostics = {"stat_tol": result.stat_tol} if method is TwirlMethod.MONTE_CARLO else {}
    return _report(config, results, diagnostics)


def handle_codec(config: RunConfig, manager: ConfigManager) -> RunReport:
    """codec {encode, decode} --n N --j J"""
    codec = make_codec(
        _require(config, "n"),
        _require(config, "j"),
        config.params.get("logical_dim"),
        config.cap("max_schur_qubits", 10),
    )
    header = {"n": codec.n, "j": str(codec.j), "logical_dim": codec.logical_dim}
    if config.action == "encode":
        amplitudes = config.params.get("amplitudes")
        if amplitudes is not None:
            logical = PureState.from_vector(amplitudes, normalize=True)
        else:
            logical = _read_state(config, _require(config, "input"))
        physical = encode(codec, logical)
        return _report(config, dict(header, state=physical.to_dict()))

    physical = _read_state(config, _require(config, "input"))
    if not isinstance(physical, PureState):
        raise UsageError("codec decode takes a pure state file")
    logical, weight = decode(codec, physical)
    return _report(config, dict(header, state=logical.to_dict()), {"in_code_weight": weight})


def handle_multiplicity(config: RunConfig, manager: ConfigManager) -> RunReport:
    """multiplicity --n-max N: n, j, multiplicity, dim_check"""
    n_max = _require(config, "n_max")
    if n_max < 1:
        raise UsageError(f"--n-max must be at least 1, got {n_max}")
    cap = config.cap("max_sweep_points", 10000)
    if n_max > cap:
        raise SizeError(f"--n-max {n_max} exceeds cap {cap}")
    check_max = config.params.get("check_max")
    check_max = DEFAULT_CHECK_MAX if check_max is None else min(check_max, config.cap("max_schur_qubits", 10))

    rows = []
    for n in range(1, n_max + 1):
        for j in sector_spins(n):
            count = multiplicity(n, j)
            if n <= check_max:
                dim_check = "ok" if count == multiplicity_by_diagonalization(n, j) else "mismatch"
            else:
                dim_check = "unchecked"
            rows.append([n, str(j), count, dim_check])
    table = pd.DataFrame(rows, columns=["n", "j", "multiplicity", "dim_check"])
    mismatches = int((table["dim_check"] == "mismatch").sum())
    if mismatches:
        logger.error(f"{mismatches} multiplicities disagree with J^2 diagonalization")
    return _report(config, {"n_max": n_max}, {"mismatches": mismatches}, table,
                   exit_code=3 if mismatches else 0)


def handle_photon(config: RunConfig, manager: ConfigManager) -> RunReport:
    """photon {phase, encode}"""
    p = FourVector.massless(config.params.get("momentum") or [0.0, 0.0, 1.0])
    lam = _lorentz_from(config)
    w = little_group_phase(lam, p)
    results: Dict[str, Any] = {"omega": w.omega, "beta": _complex_pair(w.beta)}
    diagnostics = {"triangularity_defect": w.triangularity_defect}

    if config.action == "phase":
        mode = PhotonMode.helicity(p, config.params.get("helicity") or 1)
        results["state"] = apply_lorentz_photon(lam, mode).to_dict()
        return _report(config, results, diagnostics)

    logical = PureState.from_vector(config.params.get("amplitudes") or [1.0, 0.0], normalize=True)
    moved = apply_lorentz_photon(lam, photon_codec_encode(logical, p))
    results["state"] = moved.to_dict()
    results["logical_fidelity"] = photon_codec_decode(moved).fidelity(logical)
    return _report(config, results, diagnostics)


def handle_sweep(config: RunConfig, manager: ConfigManager) -> RunReport:
    """sweep {velocity, delta, code-residual}"""
    engine = SweepEngine(
        nodes=config.quadrature_nodes,
        channel_tol=manager.get_config_value("quadrature.channel_tol", 1e-6),
        max_points=config.cap("max_sweep_points", 10000),
    )
    diagnostics: Dict[str, Any] = {}
    if config.action == "velocity":
        result = engine.run_velocity(RangeSpec.parse(_require(config, "v")), _require(config, "delta"))
    elif config.action == "delta":
        result = engine.run_delta(_require(config, "v"), _require(config, "delta"),
                                  config.params.get("count") or 4)
        diagnostics["min_halving_ratio"] = smallest_ratio(result.frame["halving_ratio"])
    else:
        result = engine.run_code_residual(
            RangeSpec.parse(_require(config, "v")),
            _require(config, "delta"),
            config.params.get("n") or 4,
            config.params.get("j") or 0,
        )
    return _report(config, {"sweep": result.sweep_type}, diagnostics, result.frame)


def handle_selftest(config: RunConfig, manager: ConfigManager) -> RunReport:
    """selftest: 전체 불변량 스위트"""
    context = CheckContext(
        seed=config.seed,
        samples=config.samples,
        trials=config.params.get("trials") or manager.get_config_value("selftest.trials", 1000),
        nodes=config.quadrature_nodes,
        chunk_size=config.chunk_size,
    )
    suite = create_default_suite()
    only = config.params.get("only")
    if only:
        wanted = {name.strip() for name in only.split(',')}
        unknown = wanted - set(suite.get_checks())
        if unknown:
            raise UsageError(f"unknown checks: {sorted(unknown)}")
        for name in suite.get_checks():
            if name not in wanted:
                suite.remove_check(name)

    result = suite.run(context)
    logger.info("\n" + result.summary())
    return _report(config, result.to_dict(), {"context": context.to_dict()},
                   exit_code=0 if result.passed else 3)


HANDLERS = {
    "wigner": handle_wigner,
    "overlap": handle_overlap,
    "channel": handle_channel,
    "twirl": handle_twirl,
    "codec": handle_codec,
    "multiplicity": handle_multiplicity,
    "photon": handle_photon,
    "sweep": handle_sweep,
    "selftest": handle_selftest,
}
