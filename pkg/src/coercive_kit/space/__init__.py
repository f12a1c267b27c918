"""Discrete Sobolev spaces on boxes: bases, quadrature, forms and constraints."""

from .assembly import (
    BILAPLACIAN,
    LAPLACIAN,
    GramSet,
    assemble_gram,
    assemble_operator_form,
    seminorm_matrix,
)
from .basis import FOURIER, LEGENDRE, BasisSpec, eval_basis, polynomial_subspace
from .constraints import (
    BoundaryIntegral,
    DomainIntegralOfDerivative,
    MeanValue,
    PeriodicMatch,
    PointValue,
    TraceCoefficient,
    boundary_mass_matrix,
    build_subspace,
    constraint_matrix,
    constraint_vector,
)
from .domain import BoundaryRegion, DomainBox, enumerate_multi_indices, multinomial
from .quadrature import quadrature_rule

__all__ = [
    "BILAPLACIAN",
    "FOURIER",
    "LAPLACIAN",
    "LEGENDRE",
    "BasisSpec",
    "BoundaryIntegral",
    "BoundaryRegion",
    "DomainBox",
    "DomainIntegralOfDerivative",
    "GramSet",
    "MeanValue",
    "PeriodicMatch",
    "PointValue",
    "TraceCoefficient",
    "assemble_gram",
    "assemble_operator_form",
    "boundary_mass_matrix",
    "build_subspace",
    "constraint_matrix",
    "constraint_vector",
    "enumerate_multi_indices",
    "eval_basis",
    "multinomial",
    "polynomial_subspace",
    "quadrature_rule",
    "seminorm_matrix",
]
