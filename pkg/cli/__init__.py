"""
Command line module
"""
from .main import main, parse_and_dispatch
from .parser import build_parser
from .config import RunConfig, resolve_run_config
from .report import RunReport, VERSION

__all__ = [
    # entry points
    'main',
    'parse_and_dispatch',
    'build_parser',
    # run config / report
    'RunConfig',
    'resolve_run_config',
    'RunReport',
    'VERSION',
]
