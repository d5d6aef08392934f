"""
Argument Parser
relqi 명령행 문법

Every option defaults to None so explicit flags can be told apart from
values merged in from a --config file.

Usage:
    from cli.parser import build_parser

    args = build_parser().parse_args(["sweep", "velocity", "--v", "0.1:0.9:9", "--delta", "0.01"])
"""

import argparse
from typing import List

from qmath.errors import UsageError


class RelqiArgumentParser(argparse.ArgumentParser):
    """사용 오류를 UsageError 로 바꾸는 파서"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ============================================================
# Value types
# ============================================================

def seed_type(text: str) -> int:
    """64비트 부호 없는 시드 (10진 / 0x 16진)"""
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {value}")
    return value


def float_list(text: str) -> List[float]:
    """'0.1,0.2,0.3'"""
    try:
        return [float(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def vector3(text: str) -> List[float]:
    """'x,y,z'"""
    values = float_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return values


def complex_list(text: str) -> List[complex]:
    """'1,0' 또는 '0.6,0.8j' 형식의 복소 진폭"""
    try:
        return [complex(x.strip().replace(' ', '')) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated complex numbers, got {text!r}") from None


def half_integer(text: str) -> str:
    """'0', '1', '1/2', '1.5' (변환은 schur 에서)"""
    return text.strip()


# ============================================================
# Parser
# ============================================================

def _common_options() -> argparse.ArgumentParser:
    common = RelqiArgumentParser(add_help=False)
    group = common.add_argument_group("run options")
    group.add_argument("--seed", type=seed_type, help="64-bit seed (default: RELQI_SEED or config run.seed)")
    group.add_argument("--format", choices=["json", "csv"], help="output format")
    group.add_argument("--output", help="write the payload to this file instead of stdout")
    group.add_argument("--config", help="flat key=value run-config file (flags win)")
    group.add_argument("--nodes", type=int, help="Gauss-Hermite nodes per axis")
    group.add_argument("--samples", type=int, help="Monte Carlo samples")
    group.add_argument("--chunk-size", type=int, help="Monte Carlo chunk size")
    group.add_argument("--deterministic", action="store_true", default=None,
                       help="omit timestamp and wall_time from reports")
    group.add_argument("--no-validate", action="store_true", default=None,
                       help="read state files without invariant checks")
    group.add_argument("--verbose", action="store_true", default=None, help="debug logging")
    return common


def _leaf(subparsers, name: str, common, help_text: str, default_format: str = None):
    leaf = subparsers.add_parser(name, parents=[common], help=help_text)
    leaf.set_defaults(_parser=leaf, _default_format=default_format)
    return leaf


def build_parser() -> RelqiArgumentParser:
    """전체 파서 생성"""
    common = _common_options()
    parser = RelqiArgumentParser(
        prog="relqi",
        description="Relativistic spin decoherence, reference-frame twirls and invariant codes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python run.py wigner --boost 0,0,0.5 --momentum 1,0,0
  python run.py channel boost-exact --v 0.5 --delta 0.05
  python run.py twirl --kind collective --basis 0000 --method monte-carlo --samples 100000
  python run.py multiplicity --n-max 8
  python run.py sweep velocity --v 0.1:0.9:9 --delta 0.01 --deterministic
  python run.py selftest
        """
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # wigner
    wigner = _leaf(commands, "wigner", common, "Wigner rotation of a boosted spin")
    wigner.add_argument("--boost", type=vector3, help="boost velocity vx,vy,vz")
    wigner.add_argument("--rotate", type=float_list, help="rotation ax,ay,az,angle applied before the boost")
    wigner.add_argument("--momentum", type=vector3, help="spatial momentum px,py,pz (mass units)")

    # overlap
    overlap = _leaf(commands, "overlap", common, "wavepacket overlap and minimum separation",
                    default_format="csv")
    overlap.add_argument("--delta", type=float, help="momentum spread (mc units)")
    overlap.add_argument("--separation", type=float, help="separation a (hbar/mc units)")
    overlap.add_argument("--threshold", type=float, help="|overlap| bound for the minimum separation")
    overlap.add_argument("--mass-mev", type=float, help="particle mass for Angstrom conversion")

    # channel
    channel = commands.add_parser("channel", help="single-qubit boost channels")
    channel_kinds = channel.add_subparsers(dest="action", required=True, metavar="KIND")
    for kind, text in (
        ("boost-approx", "leading-order boost channel"),
        ("boost-exact", "quadrature boost channel"),
        ("mixture", "boost channel averaged over a velocity prior"),
    ):
        leaf = _leaf(channel_kinds, kind, common, text)
        leaf.add_argument("--delta", type=float, help="momentum spread (mc units)")
        leaf.add_argument("--input", help="input state JSON file (default |0><0|)")
        if kind == "mixture":
            leaf.add_argument("--velocities", type=float_list, help="prior support v1,v2,...")
            leaf.add_argument("--weights", type=float_list, help="prior weights (normalized; default uniform)")
        else:
            leaf.add_argument("--v", type=float, help="boost speed")

    # twirl
    twirl = _leaf(commands, "twirl", common, "reference-frame twirls")
    twirl.add_argument("--kind", choices=["single", "collective", "dephasing"], help="twirl group (default collective)")
    twirl.add_argument("--method", choices=["exact-projector", "monte-carlo"], help="default exact-projector")
    twirl.add_argument("--input", help="input state JSON file")
    twirl.add_argument("--basis", help="computational basis input, e.g. 0101")

    # codec
    codec = commands.add_parser("codec", help="noiseless subsystem codec")
    codec_actions = codec.add_subparsers(dest="action", required=True, metavar="ACTION")
    for name in ("encode", "decode"):
        leaf = _leaf(codec_actions, name, common, f"{name} with the sector-j codec")
        leaf.add_argument("--n", type=int, help="physical qubits")
        leaf.add_argument("--j", type=half_integer, help="total spin sector (e.g. 0, 1/2, 1)")
        leaf.add_argument("--logical-dim", type=int, help="logical dimension (default: multiplicity)")
        leaf.add_argument("--input", help="state JSON file")
        if name == "encode":
            leaf.add_argument("--amplitudes", type=complex_list, help="logical amplitudes a0,a1,...")

    # multiplicity
    multiplicity = _leaf(commands, "multiplicity", common, "multiplicity table", default_format="csv")
    multiplicity.add_argument("--n-max", type=int, help="largest qubit count")
    multiplicity.add_argument("--check-max", type=int, help="largest n verified by J^2 diagonalization (default 8)")

    # photon
    photon = commands.add_parser("photon", help="massless little group and two-photon code")
    photon_actions = photon.add_subparsers(dest="action", required=True, metavar="ACTION")
    for name, text in (("phase", "little-group phase of a helicity state"),
                       ("encode", "two-photon code state after a Lorentz transformation")):
        leaf = _leaf(photon_actions, name, common, text)
        leaf.add_argument("--momentum", type=vector3, help="photon momentum (units of k)")
        leaf.add_argument("--boost", type=vector3, help="boost velocity vx,vy,vz")
        leaf.add_argument("--rotate", type=float_list, help="rotation ax,ay,az,angle applied before the boost")
        if name == "phase":
            leaf.add_argument("--helicity", type=int, choices=[1, -1], help="helicity (default +1)")
        else:
            leaf.add_argument("--amplitudes", type=complex_list, help="logical amplitudes a0,a1")

    # sweep
    sweep = commands.add_parser("sweep", help="CSV parameter sweeps")
    sweep_types = sweep.add_subparsers(dest="action", required=True, metavar="TYPE")
    velocity = _leaf(sweep_types, "velocity", common, "fidelity vs v", default_format="csv")
    velocity.add_argument("--v", help="range start:stop:count")
    velocity.add_argument("--delta", type=float, help="momentum spread")
    delta = _leaf(sweep_types, "delta", common, "exact-vs-approx discrepancy vs halving delta", default_format="csv")
    delta.add_argument("--v", type=float, help="boost speed")
    delta.add_argument("--delta", type=float, help="starting momentum spread")
    delta.add_argument("--count", type=int, help="number of halvings")
    residual = _leaf(sweep_types, "code-residual", common, "encoded fidelity vs v", default_format="csv")
    residual.add_argument("--v", help="range start:stop:count")
    residual.add_argument("--delta", type=float, help="momentum spread")
    residual.add_argument("--n", type=int, help="physical qubits (default 4)")
    residual.add_argument("--j", type=half_integer, help="sector (default 0)")

    # selftest
    selftest = _leaf(commands, "selftest", common, "run the invariant suite")
    selftest.add_argument("--trials", type=int, help="random draws per property (default 100)")
    selftest.add_argument("--only", help="comma-separated check names")

    return parser
