"""Linear functionals that carve subspaces out of a discrete space."""

from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..coercivity import Subspace
from ..exceptions import UnsupportedForBasis, ZeroMeasureRegion
from ..linalg import m_orthonormalize, nullspace
from .assembly import GramSet
from .basis import BasisSpec, eval_basis
from .domain import BoundaryRegion, face_axis

LAPLACIAN_TRACE = "laplacian"


@dataclass(frozen=True)
class MeanValue:
    """``int_Omega v dx``."""


@dataclass(frozen=True)
class DomainIntegralOfDerivative:
    """``int_Omega D^s v dx``."""

    s: Tuple[int, ...]


@dataclass(frozen=True)
class BoundaryIntegral:
    """``int_Gamma v ds``."""

    region: BoundaryRegion


@dataclass(frozen=True)
class PointValue:
    """``v(p)``."""

    point: Tuple[float, ...]


@dataclass(frozen=True)
class TraceCoefficient:
    """Face-basis coefficients of ``d^k v / d nu^k`` (or of ``Lap v``) on a face.

    ``order`` is the normal derivative order or ``"laplacian"``.  ``modes``
    optionally selects a subset of the face coefficients (all by default).
    """

    face: int
    order: Union[int, str] = 0
    modes: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class PeriodicMatch:
    """Equal face traces of ``d^k v/d x_axis^k`` on opposite faces, ``k < orders``."""

    axis: int
    orders: int


ConstraintFunctional = Union[
    MeanValue, DomainIntegralOfDerivative, BoundaryIntegral, PointValue, TraceCoefficient, PeriodicMatch
]


def _integral_row(spec: BasisSpec, s):
    factors = []
    for k, b in enumerate(spec.bases):
        factors.append(b.integrate(b.lo, b.hi) @ b.deriv_matrix(s[k]) if s[k] else b.integrate(b.lo, b.hi))
    return reduce(np.kron, factors)[None, :]


def boundary_integral_row(spec: BasisSpec, region: BoundaryRegion):
    region.validate(spec.box)
    row = np.zeros(spec.n)
    for face, frac in region.parts:
        axis, side = face_axis(face)
        ranges = region.tangential_ranges(spec.box, face, frac)
        factors = []
        for k, b in enumerate(spec.bases):
            if k == axis:
                factors.append(b.values(np.array([b.hi if side else b.lo]))[0])
            else:
                factors.append(b.integrate(*ranges[k]))
        row += reduce(np.kron, factors)
    return row[None, :]


def boundary_mass_matrix(spec: BasisSpec, region: BoundaryRegion):
    """``int_Gamma phi_i phi_j ds``, the L^2(Gamma) form."""
    region.validate(spec.box)
    out = np.zeros((spec.n, spec.n))
    for face, frac in region.parts:
        axis, side = face_axis(face)
        ranges = region.tangential_ranges(spec.box, face, frac)
        factors = []
        for k, b in enumerate(spec.bases):
            if k == axis:
                v = b.values(np.array([b.hi if side else b.lo]))[0]
                factors.append(np.outer(v, v))
            else:
                factors.append(b.mass(*ranges[k]))
        out += reduce(np.kron, factors)
    return 0.5 * (out + out.T)


def _trace_rows(spec: BasisSpec, face, order, signed=True):
    axis, side = face_axis(face)
    bases = spec.bases
    x = np.array([bases[axis].hi if side else bases[axis].lo])

    def normal_factor(r):
        sign = (-1.0) ** r if (signed and side == 0) else 1.0
        return sign * bases[axis].values(x, r)

    def build(axis_factor, other=None):
        factors = []
        for k, b in enumerate(bases):
            if k == axis:
                factors.append(axis_factor)
            elif other is not None and k == other[0]:
                factors.append(other[1])
            else:
                factors.append(np.eye(b.n))
        return reduce(np.kron, factors)

    if order == LAPLACIAN_TRACE:
        rows = build(normal_factor(2))
        for k, b in enumerate(bases):
            if k != axis:
                rows = rows + build(normal_factor(0), (k, b.deriv_matrix(2)))
        return rows
    return build(normal_factor(int(order)))


def constraint_vector(spec: BasisSpec, c: ConstraintFunctional):
    """Rows (shape ``(k, n)``) realizing the functional on every basis function."""
    if isinstance(c, MeanValue):
        return _integral_row(spec, (0,) * spec.d)
    if isinstance(c, DomainIntegralOfDerivative):
        return _integral_row(spec, tuple(c.s))
    if isinstance(c, BoundaryIntegral):
        if c.region.measure(spec.box) <= 0.0:
            raise ZeroMeasureRegion("boundary region has zero measure")
        return boundary_integral_row(spec, c.region)
    if isinstance(c, PointValue):
        p = np.asarray(c.point, dtype=float).reshape(1, -1)
        if p.shape[1] != spec.d:
            raise ValueError(f"point {c.point} does not have {spec.d} coordinates")
        return eval_basis(spec, (0,) * spec.d, p)
    if isinstance(c, TraceCoefficient):
        if not 0 <= c.face < 2 * spec.d:
            raise ValueError(f"face {c.face} does not exist for d={spec.d}")
        rows = _trace_rows(spec, c.face, c.order)
        return rows if c.modes is None else rows[list(c.modes)]
    if isinstance(c, PeriodicMatch):
        if spec.periodic:
            raise UnsupportedForBasis("Fourier bases are periodic already; PeriodicMatch is redundant")
        rows = [
            _trace_rows(spec, 2 * c.axis, k, signed=False) - _trace_rows(spec, 2 * c.axis + 1, k, signed=False)
            for k in range(c.orders)
        ]
        return np.vstack(rows)
    if isinstance(c, np.ndarray):
        return np.atleast_2d(c)
    raise TypeError(f"unknown constraint {c!r}")


def constraint_matrix(spec: BasisSpec, constraints: Sequence):
    rows = [constraint_vector(spec, c) for c in constraints]
    return np.vstack(rows) if rows else np.zeros((0, spec.n))


def build_subspace(gram: GramSet, constraints: Sequence = (), tol=1e-10):
    """``Subspace`` of coefficient vectors annihilated by every constraint row.

    The basis is orthonormal in the H^m inner product ``gram.full``.
    """
    C = constraint_matrix(gram.spec, constraints)
    n = gram.spec.n
    if C.shape[0] == 0:
        null = np.eye(n)
    else:
        norms = np.linalg.norm(C, axis=1)
        C = C[norms > 0] / norms[norms > 0, None]
        null = nullspace(C, tol) if C.shape[0] else np.eye(n)
    if null.shape[1] == 0:
        return Subspace(np.zeros((n, 0)), gram.full)
    return Subspace(m_orthonormalize(null, gram.full), gram.full)
