"""Information-capacity vs clock-tick feasibility for expanding regions.

Thin re-export of the compiled extension; see the individual docstrings in
``uclock._core`` for the operation-level contracts.
"""

from ._core import (
    ConstantSet,
    Crossing,
    Epoch,
    FeasibilityReport,
    Inflation,
    LogCount,
    MinRadiusResult,
    MonotonicityReport,
    MonotonicityViolation,
    PowerLaw,
    TickModel,
    Timeline,
    ValidationIssue,
    ValidationResult,
    bekenstein_entropy_over_kB,
    constant_set,
    constant_set_names,
    entropy_monotone,
    epoch_start_radii,
    find_crossings,
    inflation_endpoint,
    load_timeline_file,
    log2_capacity,
    log2_tick_count,
    margin,
    margin_at_radius,
    max_energy,
    min_efolds,
    min_radius_for_feasibility,
    ml_min_orthogonal_time,
    radius_at,
    tick_interval,
    tick_model_from_name,
    tick_model_name,
    timeline_from_json,
    validate,
)

__all__ = [
    "ConstantSet",
    "Crossing",
    "Epoch",
    "FeasibilityReport",
    "Inflation",
    "LogCount",
    "MinRadiusResult",
    "MonotonicityReport",
    "MonotonicityViolation",
    "PowerLaw",
    "TickModel",
    "Timeline",
    "ValidationIssue",
    "ValidationResult",
    "bekenstein_entropy_over_kB",
    "constant_set",
    "constant_set_names",
    "entropy_monotone",
    "epoch_start_radii",
    "find_crossings",
    "inflation_endpoint",
    "load_timeline_file",
    "log2_capacity",
    "log2_tick_count",
    "margin",
    "margin_at_radius",
    "max_energy",
    "min_efolds",
    "min_radius_for_feasibility",
    "ml_min_orthogonal_time",
    "radius_at",
    "tick_interval",
    "tick_model_from_name",
    "tick_model_name",
    "timeline_from_json",
    "validate",
]

__version__ = "0.1.0"
