"""
relqi Command Line
명령행 진입점

Exit codes: 0 success, 1 usage error, 2 domain/input error,
3 accuracy failure or failed selftest.

Usage:
    from cli.main import main
    sys.exit(main(["multiplicity", "--n-max", "6"]))
"""

import logging
import sys
import time
from typing import List, Optional

from qmath.errors import RelqiError
from utils.config_manager import ConfigManager, get_config
from .config import resolve_run_config
from .handlers import HANDLERS
from .parser import build_parser
from .report import RunReport

logger = logging.getLogger(__name__)


def configure_logging(manager: ConfigManager, verbose: bool = False) -> None:
    """로그는 stderr 로만 (stdout 은 결과 전용)"""
    settings = manager.get_logging_config()
    level = logging.DEBUG if verbose else getattr(logging, str(settings.get("level", "INFO")).upper(), logging.INFO)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format=settings.get("format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
        force=True,
    )


def parse_and_dispatch(argv: Optional[List[str]] = None, manager: Optional[ConfigManager] = None) -> RunReport:
    """
    인자 파싱 -> 설정 병합 -> 핸들러 실행

    Raises:
        RelqiError: 사용 오류, 도메인 오류, 정확도 실패
    """
    manager = manager or get_config()
    args = build_parser().parse_args(argv)
    if getattr(args, "verbose", None):
        logging.getLogger().setLevel(logging.DEBUG)
    config = resolve_run_config(args, manager)
    logger.debug(f"Run config: {config.to_dict()}")

    start = time.perf_counter()
    report = HANDLERS[config.command](config, manager)
    report.wall_time = time.perf_counter() - start
    logger.info(f"{config.label} finished in {report.wall_time:.3f}s")
    return report


def main(argv: Optional[List[str]] = None) -> int:
    manager = get_config()
    configure_logging(manager)
    try:
        report = parse_and_dispatch(argv, manager)
        report.emit(sys.stdout)
    except RelqiError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return 2
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
