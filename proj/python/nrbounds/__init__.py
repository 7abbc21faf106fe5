"""Numerical radius, operator norm, and spectral radius toolkit.

Matrices are numpy arrays (anything convertible to complex128); report-style
results come back as plain dicts, mirroring the CLI's JSON output.
"""

from ._core import (
    CHECK_SLACK,
    REPRO_TOLERANCE,
    abs_value,
    all_check_names,
    block_bounds,
    hermitian_eigenvalues,
    inner_sum,
    numerical_radius,
    operator_norm,
    oracle_spectral_radius,
    pair_bounds,
    psd_power,
    row_bounds,
    run_repro,
    run_suite,
    sample,
    self_bounds,
    spectral_radius,
    spectral_sum_bounds,
    spectral_summary,
    two_by_two_bounds,
)

__all__ = [
    "CHECK_SLACK",
    "REPRO_TOLERANCE",
    "abs_value",
    "all_check_names",
    "block_bounds",
    "hermitian_eigenvalues",
    "inner_sum",
    "numerical_radius",
    "operator_norm",
    "oracle_spectral_radius",
    "pair_bounds",
    "psd_power",
    "row_bounds",
    "run_repro",
    "run_suite",
    "sample",
    "self_bounds",
    "spectral_radius",
    "spectral_sum_bounds",
    "spectral_summary",
    "two_by_two_bounds",
]

__version__ = "1.0.0"
