"""
Run Configuration
명령 실행 설정 병합 (YAML < RELQI_SEED < --config 파일 < 명령행 플래그)

Usage:
    from cli.config import RunConfig, resolve_run_config

    args = build_parser().parse_args(argv)
    config = resolve_run_config(args, ConfigManager())
    print(config.seed, config.params)
"""

import argparse
import logging
from dataclasses import dataclass, field
from typing import Dict, Any, Optional

from qmath.errors import UsageError
from utils.config_manager import ConfigManager

logger = logging.getLogger(__name__)

# options shared by every subcommand; the rest land in RunConfig.params
COMMON_KEYS = (
    "seed", "format", "output", "nodes", "samples", "chunk_size",
    "deterministic", "verbose", "no_validate",
)
TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


@dataclass
class RunConfig:
    """한 번의 실행 설정"""
    command: str
    action: Optional[str] = None
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    output_format: str = "json"
    output_path: Optional[str] = None
    quadrature_nodes: int = 32
    samples: int = 100000
    chunk_size: int = 4096
    caps: Dict[str, int] = field(default_factory=dict)
    deterministic: bool = False
    validate_inputs: bool = True
    config_file: Optional[str] = None

    @property
    def label(self) -> str:
        return self.command if self.action is None else f"{self.command} {self.action}"

    def cap(self, key: str, default: int) -> int:
        return int(self.caps.get(key, default))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.label,
            "params": self.params,
            "seed": self.seed,
            "output_format": self.output_format,
            "quadrature_nodes": self.quadrature_nodes,
            "samples": self.samples,
            "chunk_size": self.chunk_size,
            "caps": self.caps,
            "validate_inputs": self.validate_inputs,
            "config_file": self.config_file,
        }


def _convert(action: argparse.Action, raw: str):
    """파일 문자열 값을 플래그와 같은 타입으로 변환"""
    if action.nargs == 0:
        word = raw.strip().lower()
        if word in TRUE_WORDS:
            return True
        if word in FALSE_WORDS:
            return None
        raise UsageError(f"expected a boolean for '{action.dest}', got {raw!r}")
    if action.type is None:
        return raw
    try:
        return action.type(raw)
    except (TypeError, ValueError) as e:
        raise UsageError(f"bad value {raw!r} for '{action.dest}': {e}") from None


def _file_overrides(path: str, parser: argparse.ArgumentParser) -> Dict[str, Any]:
    try:
        raw_values = ConfigManager.load_flat_file(path)
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}") from None
    except ValueError as e:
        raise UsageError(str(e)) from None

    actions = {a.dest: a for a in parser._actions if a.dest != "help"}
    values = {}
    for key, raw in raw_values.items():
        if key not in actions:
            raise UsageError(f"unknown key '{key}' in config file {path}")
        values[key] = _convert(actions[key], raw)
    return values


def _default_samples(command: str, manager: ConfigManager) -> int:
    if command == "selftest":
        return manager.get_config_value("selftest.samples", 20000)
    return manager.get_config_value("monte_carlo.default_samples", 100000)


def resolve_run_config(args: argparse.Namespace, manager: ConfigManager) -> RunConfig:
    """
    설정 병합

    Flags default to None, so any non-None value in ``args`` was given
    explicitly and wins over the config file.
    """
    explicit = {k: v for k, v in vars(args).items() if not k.startswith("_") and v is not None}
    merged: Dict[str, Any] = {}
    config_file = explicit.pop("config", None)
    if config_file is not None:
        merged.update(_file_overrides(config_file, args._parser))
        logger.debug(f"Merged run-config file {config_file}")
    merged.update(explicit)

    command = merged.pop("command")
    action = merged.pop("action", None)
    default_format = getattr(args, "_default_format", None) or manager.get_config_value("run.output_format", "json")

    params = {k: v for k, v in merged.items() if k not in COMMON_KEYS}
    return RunConfig(
        command=command,
        action=action,
        params=params,
        seed=int(merged["seed"]) if "seed" in merged else manager.default_seed(),
        output_format=merged.get("format", default_format),
        output_path=merged.get("output"),
        quadrature_nodes=int(merged.get("nodes", manager.get_config_value("quadrature.nodes", 32))),
        samples=int(merged.get("samples", _default_samples(command, manager))),
        chunk_size=int(merged.get("chunk_size", manager.get_config_value("monte_carlo.chunk_size", 4096))),
        caps=dict(manager.get_caps()),
        deterministic=bool(merged.get("deterministic", False)),
        validate_inputs=not merged.get("no_validate", False),
        config_file=config_file,
    )
