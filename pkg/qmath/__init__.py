"""
Quantum Math Module
양자 상태 / 채널 기본 연산

Usage:
    from qmath import (
        PureState, DensityMatrix, QuantumChannel,
        tensor_product, partial_trace, fidelity, trace_distance,
        apply_channel, choi_check, haar_su2_sample, make_rng,
    )

    rho = DensityMatrix.from_pure(PureState.basis(0, dim=2))
    rng = make_rng(7)
    u = haar_su2_sample(rng)
    ch = QuantumChannel.unitary(u)
    out = apply_channel(ch, rho)
"""

from .errors import (
    RelqiError,
    UsageError,
    DomainError,
    ShapeError,
    SizeError,
    RegimeError,
    SuperluminalError,
    ShellError,
    CapacityError,
    OutOfCodeError,
    EmptySectorError,
    IndistinguishabilityError,
    StateValidationError,
    ChannelIntegrityError,
    FormatError,
    AccuracyError,
    NumericalDegeneracyError,
    ConventionError,
)
from .states import PureState, DensityMatrix, as_complex_matrix
from .linalg import (
    MAX_DIM,
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    PAULIS,
    tensor_product,
    tensor_all,
    tensor_power,
    partial_trace,
    fidelity,
    trace_distance,
    operator_trace_distance,
    is_unitary,
    unitarity_defect,
    swap_operator,
    permutation_operator,
    spin_operators,
)
from .channel import (
    QuantumChannel,
    ChoiReport,
    apply_channel,
    apply_to_qubit,
    choi_check,
    choi_matrix,
    choi_distance,
    mixture,
    compress_kraus,
    tensor_power_channel,
)
from .sampling import (
    make_rng,
    spawn_generators,
    chunk_counts,
    haar_su2_sample,
    haar_su2_batch,
    su2_rotation_angle,
    haar_angle_cdf,
    random_unit_vector,
    random_pure_state,
    random_density_matrix,
)

__all__ = [
    # Errors
    'RelqiError', 'UsageError', 'DomainError', 'ShapeError', 'SizeError',
    'RegimeError', 'SuperluminalError', 'ShellError', 'CapacityError',
    'OutOfCodeError', 'EmptySectorError', 'IndistinguishabilityError',
    'StateValidationError', 'ChannelIntegrityError', 'FormatError',
    'AccuracyError', 'NumericalDegeneracyError', 'ConventionError',

    # States
    'PureState', 'DensityMatrix', 'as_complex_matrix',

    # Linear algebra
    'MAX_DIM', 'IDENTITY_2', 'PAULI_X', 'PAULI_Y', 'PAULI_Z', 'PAULIS',
    'tensor_product', 'tensor_all', 'tensor_power', 'partial_trace',
    'fidelity', 'trace_distance', 'operator_trace_distance',
    'is_unitary', 'unitarity_defect', 'swap_operator', 'permutation_operator',
    'spin_operators',

    # Channels
    'QuantumChannel', 'ChoiReport', 'apply_channel', 'apply_to_qubit', 'choi_check',
    'choi_matrix', 'choi_distance', 'mixture', 'compress_kraus', 'tensor_power_channel',

    # Sampling
    'make_rng', 'spawn_generators', 'chunk_counts', 'haar_su2_sample',
    'haar_su2_batch', 'su2_rotation_angle', 'haar_angle_cdf',
    'random_unit_vector', 'random_pure_state', 'random_density_matrix',
]
