"""Poincare, Friedrichs and Laplacian-coercivity experiments."""

from .catalog import CATALOG, CatalogEntry, get_entry, list_scenarios, run, sweep
from .scenarios import (
    HYPOTHESIS_FAILED,
    KIND_NAMES,
    SPACE_TAGS,
    VERIFIED,
    VIOLATED,
    ScenarioKind,
    ScenarioResult,
    check_points,
    classical_poincare_matrix,
    convergence_sweep,
    friedrichs_explicit_form,
    mean_zero_constant,
    polynomial_intersection_dim,
    run_scenario,
    scenario_subspace,
    tag_constraints,
    verify_identity_matrices,
)

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "HYPOTHESIS_FAILED",
    "KIND_NAMES",
    "SPACE_TAGS",
    "VERIFIED",
    "VIOLATED",
    "ScenarioKind",
    "ScenarioResult",
    "check_points",
    "classical_poincare_matrix",
    "convergence_sweep",
    "friedrichs_explicit_form",
    "get_entry",
    "list_scenarios",
    "mean_zero_constant",
    "polynomial_intersection_dim",
    "run",
    "run_scenario",
    "scenario_subspace",
    "sweep",
    "tag_constraints",
    "verify_identity_matrices",
]
