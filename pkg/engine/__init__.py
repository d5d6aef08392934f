"""
Sweep engine module
"""
from .sweep_engine import SweepEngine, SweepResult, RangeSpec, SWEEP_COLUMNS, MAX_SWEEP_POINTS
from .metrics import calculate_metrics, calculate_halving_ratios, ChannelMetrics

__all__ = [
    'SweepEngine',
    'SweepResult',
    'RangeSpec',
    'SWEEP_COLUMNS',
    'MAX_SWEEP_POINTS',
    'calculate_metrics',
    'calculate_halving_ratios',
    'ChannelMetrics',
]
