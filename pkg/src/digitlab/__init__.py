"""Digit-sum randomness diagnostics for powers and mathematical constants."""

from .base_digits import BaseQNumber
from .analysis import (
    DeltaPoint,
    Histogram,
    RunningSums,
    chi_square_vs_normal,
    delta_value,
    normal_cdf,
    normal_pdf,
    running_delta,
    series_extrema,
)
from .errors import DigitFileError, ResourceLimitError
from .power_walk import (
    ExpectedStats,
    PowerSample,
    StewartConfig,
    delta_power,
    kappa,
    run_power_walk,
    s_value,
    stewart_margin,
)
from .streams import DigitStream, e_digits, file_digits, pi_digits, sqrt_digits

__version__ = "0.1.0"

__all__ = [
    "BaseQNumber",
    "DeltaPoint",
    "DigitFileError",
    "DigitStream",
    "ExpectedStats",
    "Histogram",
    "PowerSample",
    "ResourceLimitError",
    "RunningSums",
    "StewartConfig",
    "chi_square_vs_normal",
    "delta_power",
    "delta_value",
    "e_digits",
    "file_digits",
    "kappa",
    "normal_cdf",
    "normal_pdf",
    "pi_digits",
    "run_power_walk",
    "running_delta",
    "s_value",
    "series_extrema",
    "sqrt_digits",
    "stewart_margin",
]
