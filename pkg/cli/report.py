"""
Run Report
실행 결과 보고서와 JSON / CSV 출력

Usage:
    from cli.report import RunReport

    report = RunReport(config, results={"omega": 0.3}, diagnostics={})
    text = report.render()
"""

import io
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Dict, Any, Optional

import numpy as np
import pandas as pd

from qmath.errors import UsageError
from .config import RunConfig

logger = logging.getLogger(__name__)

VERSION = "0.1.0"
CSV_FLOAT_FORMAT = "%.17g"


def _json_default(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


@dataclass
class RunReport:
    """실행 보고서"""
    config: RunConfig
    results: Dict[str, Any] = field(default_factory=dict)
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    table: Optional[pd.DataFrame] = None
    wall_time: float = 0.0
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    exit_code: int = 0

    @property
    def version(self) -> str:
        return f"relqi {VERSION}"

    def metadata(self) -> Dict[str, Any]:
        """CSV 머리말 key=value"""
        meta = {
            "command": self.config.label,
            "seed": self.config.seed,
            "nodes": self.config.quadrature_nodes,
            "version": self.version,
        }
        for key, value in sorted(self.config.params.items()):
            meta[key] = value
        if not self.config.validate_inputs:
            meta["validated"] = False
        if not self.config.deterministic:
            meta["timestamp"] = self.timestamp
        return meta

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "version": self.version,
            "config": self.config.to_dict(),
            "results": self.results,
            "diagnostics": self.diagnostics,
        }
        if self.table is not None:
            payload["results"] = dict(self.results, rows=self.table.to_dict(orient="records"),
                                      columns=list(self.table.columns))
        if not self.config.deterministic:
            payload["timestamp"] = self.timestamp
            payload["wall_time"] = self.wall_time
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=_json_default) + "\n"

    def to_csv(self) -> str:
        """
        '# key=value' 머리말 + 표

        Reports without a table emit their scalar results as one row.

        Raises:
            UsageError: 표 없이 중첩 값 (dict, list, 배열) 이 있는 결과
        """
        table = self.table
        if table is None:
            nested = [k for k, v in self.results.items() if isinstance(v, (dict, list, tuple, np.ndarray))]
            if nested:
                raise UsageError(f"results are not tabular, use --format json (nested: {', '.join(nested)})")
            table = pd.DataFrame([self.results])
        buffer = io.StringIO()
        for key, value in self.metadata().items():
            buffer.write(f"# {key}={value}\n")
        table.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        return buffer.getvalue()

    def render(self) -> str:
        if self.config.output_format == "csv":
            return self.to_csv()
        return self.to_json()

    def emit(self, stream) -> None:
        """stdout 또는 --output 파일로 출력"""
        text = self.render()
        if self.config.output_path:
            with open(self.config.output_path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            logger.info(f"Report written to {self.config.output_path}")
        else:
            stream.write(text)
