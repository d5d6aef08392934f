"""
State File I/O
상태 JSON 파일 읽기/쓰기

Schema (same as ``to_dict`` in qmath.states):
    {"dims": [rows, cols], "entries": [[re, im], ...]}   # row-major

A (d, 1) file is a PureState, a (d, d) file a DensityMatrix. Floats are
written with repr precision, so a write-then-read roundtrip is bit-exact.

Usage:
    from utils.state_io import read_state, write_state

    write_state(state, "psi.json")
    psi = read_state("psi.json")
    raw = read_state("psi.json", validate=False)   # raw.validated is False
"""

import json
import logging
from pathlib import Path
from typing import Union

import numpy as np

from qmath.errors import FormatError, StateValidationError
from qmath.states import DensityMatrix, PureState

logger = logging.getLogger(__name__)

State = Union[PureState, DensityMatrix]


def state_from_dict(data: dict, validate: bool = True) -> State:
    """
    스키마 딕셔너리 -> 상태

    Raises:
        FormatError: 스키마 위반 또는 (validate=True 일 때) 상태 불변식 위반
    """
    try:
        rows, cols = (int(x) for x in data["dims"])
        entries = np.array(data["entries"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"state JSON must hold 'dims' and 'entries': {e}") from None

    if entries.shape != (rows * cols, 2):
        raise FormatError(f"expected {rows * cols} [re, im] entries for dims {[rows, cols]}, got shape {entries.shape}")
    values = (entries[:, 0] + 1j * entries[:, 1]).reshape(rows, cols)

    try:
        if cols == 1:
            return PureState(values[:, 0], validate=validate)
        if rows == cols:
            return DensityMatrix(values, validate=validate)
    except StateValidationError as e:
        raise FormatError(f"state fails validation: {e}") from None
    raise FormatError(f"dims {[rows, cols]} are neither a vector nor a square matrix")


def read_state(path: Union[str, Path], validate: bool = True) -> State:
    """상태 파일 읽기"""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except FileNotFoundError:
        raise FormatError(f"state file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"malformed JSON in {path}: {e}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top-level JSON value must be an object")

    state = state_from_dict(data, validate)
    if not validate:
        logger.warning(f"Read {path} without validation")
    logger.debug(f"Read {type(state).__name__} of dim {state.dim} from {path}")
    return state


def write_state(state: State, path: Union[str, Path]) -> None:
    """상태 파일 쓰기"""
    path = Path(path)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(state.to_dict(), f, indent=2)
        f.write("\n")
    logger.debug(f"Wrote {type(state).__name__} of dim {state.dim} to {path}")
