"""Numerical verification of coercivity and Poincare/Friedrichs-type inequalities."""

from .coercivity import (
    CoercivityEstimator,
    CoercivityReport,
    Subspace,
    augmented_coercivity,
    coercivity_via_angle,
    kernel_of_form,
    projection_bounds_check,
    sharp_coercivity,
    subspace_angle,
)

__version__ = "0.1.0"

__all__ = [
    "CoercivityEstimator",
    "CoercivityReport",
    "Subspace",
    "augmented_coercivity",
    "coercivity_via_angle",
    "kernel_of_form",
    "projection_bounds_check",
    "sharp_coercivity",
    "subspace_angle",
]
