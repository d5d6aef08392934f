"""
Configuration Manager
설정 파일 관리

Usage:
    from utils.config_manager import ConfigManager

    config = ConfigManager()
    nodes = config.get_config_value('quadrature.nodes', 32)

    # cli run-config file (flat key=value)
    overrides = ConfigManager.load_flat_file("runs/sweep_v.cfg")
"""

import os
import yaml
from pathlib import Path
from typing import Dict, Any, Optional
import logging

SEED_ENV_VAR = "RELQI_SEED"
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "base_config.yaml"


class ConfigManager:
    """relqi 기본 설정 (config/base_config.yaml)"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Args:
            config_path: YAML 경로 (기본: config/base_config.yaml)
        """
        self.logger = logging.getLogger(__name__)
        self.config_path = Path(config_path) if config_path is not None else DEFAULT_CONFIG_PATH
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """
        YAML 로드

        A missing or unreadable file leaves every lookup on its default.
        """
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f)
        except FileNotFoundError:
            self.logger.error(f"Configuration file not found: {self.config_path}")
            return {}
        except yaml.YAMLError as e:
            self.logger.error(f"YAML parsing error in {self.config_path}: {e}")
            return {}

        if loaded is None:
            return {}
        if not isinstance(loaded, dict):
            self.logger.error(f"{self.config_path}: top level must be a mapping, got {type(loaded).__name__}")
            return {}
        self.logger.debug(f"Loaded sections {sorted(loaded)} from {self.config_path}")
        return loaded

    def get_config_value(self, key_path: str, default=None):
        """
        점 표기 경로 조회 ('quadrature.nodes', 'caps.max_schur_qubits')

        Returns:
            설정 값, 경로가 없으면 default
        """
        node: Any = self.config
        for key in key_path.split('.'):
            if not isinstance(node, dict) or key not in node:
                self.logger.debug(f"Config key '{key_path}' not set, using {default!r}")
                return default
            node = node[key]
        return node

    def get_numerics(self) -> Dict[str, Any]:
        """수치 허용오차 설정"""
        return self.config.get("numerics", {})

    def get_caps(self) -> Dict[str, Any]:
        """크기 제한 설정"""
        return self.config.get("caps", {})

    def get_logging_config(self) -> Dict[str, Any]:
        """로깅 설정"""
        return self.config.get("logging", {})

    def default_seed(self) -> int:
        """
        기본 시드 조회

        환경변수 RELQI_SEED가 있으면 YAML 값보다 우선
        """
        env_value = os.environ.get(SEED_ENV_VAR)
        if env_value:
            try:
                return int(env_value, 0) & 0xFFFFFFFFFFFFFFFF
            except ValueError:
                self.logger.warning(f"Ignoring non-integer {SEED_ENV_VAR}={env_value!r}")
        return int(self.get_config_value('run.seed', 0))

    @staticmethod
    def load_flat_file(path: str) -> Dict[str, str]:
        """
        Load a flat ``key=value`` run-config file

        Blank lines and lines starting with '#' are skipped. Keys use the
        long flag spelling without dashes (``delta``, ``v_min``, ``seed``).

        Args:
            path: Path to the file

        Returns:
            Raw string values keyed by flag name
        """
        values: Dict[str, str] = {}
        with open(path, 'r', encoding='utf-8') as f:
            for lineno, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith('#'):
                    continue
                if '=' not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, value = line.split('=', 1)
                values[key.strip().replace('-', '_')] = value.strip()
        return values


_default_manager: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Shared ConfigManager for the default config file"""
    global _default_manager
    if _default_manager is None:
        _default_manager = ConfigManager()
    return _default_manager
