"""
Schur Module
CG 결합, Schur 기저, 잡음없는 부분계 코덱

Usage:
    from schur import schur_basis, multiplicity, make_codec, encode, block_extract

    basis = schur_basis(4)
    codec = make_codec(4, 0, 2)
    physical = encode(codec, logical)
    block = block_extract(DensityMatrix.from_pure(physical), basis, 0)
"""

from .clebsch import (
    HALF,
    half,
    as_half_integer,
    format_half,
    check_triangle,
    clebsch_gordan,
)
from .basis import (
    MAX_SCHUR_QUBITS,
    SchurLabel,
    SchurBasis,
    coupling_paths,
    multiplicity,
    sector_spins,
    logical_qubit_count,
    schur_basis,
    total_spin_squared,
    multiplicity_by_diagonalization,
)
from .codec import (
    NoiselessCodec,
    make_codec,
    encode,
    decode,
    exchange_logical_action,
    subsystem_projector,
)
from .operations import (
    SingletOutcome,
    BlockExtraction,
    singlet_measurement,
    sector_weights,
    block_extract,
    assemble_block,
    commutant_dimension,
)

__all__ = [
    # Clebsch-Gordan
    'HALF',
    'half',
    'as_half_integer',
    'format_half',
    'check_triangle',
    'clebsch_gordan',

    # Basis
    'MAX_SCHUR_QUBITS',
    'SchurLabel',
    'SchurBasis',
    'coupling_paths',
    'multiplicity',
    'sector_spins',
    'logical_qubit_count',
    'schur_basis',
    'total_spin_squared',
    'multiplicity_by_diagonalization',

    # Codec
    'NoiselessCodec',
    'make_codec',
    'encode',
    'decode',
    'exchange_logical_action',
    'subsystem_projector',

    # Operations
    'SingletOutcome',
    'BlockExtraction',
    'singlet_measurement',
    'sector_weights',
    'block_extract',
    'assemble_block',
    'commutant_dimension',
]
