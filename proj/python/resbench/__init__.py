"""Python surface for the reservoir benchmarking toolkit.

Everything heavy lives in the compiled `_core` extension; this package just
re-exports it under stable names.
"""

from ._core import (
    SweepConfig,
    config_from_json,
    dynamic_range_db,
    generate_signal,
    load_config,
    nmse,
    report,
    run_mc_suite,
    run_sweep,
    run_trajectory,
    spectral_radius,
)

__all__ = [
    "SweepConfig",
    "config_from_json",
    "dynamic_range_db",
    "generate_signal",
    "load_config",
    "nmse",
    "report",
    "run_mc_suite",
    "run_sweep",
    "run_trajectory",
    "spectral_radius",
]
