"""One-dimensional bases and their tensor products on boxes."""

import itertools
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.polynomial import legendre as npleg

from ..exceptions import UnsupportedDerivative
from .domain import DomainBox
from .quadrature import gauss_1d, periodic_1d

LEGENDRE = "legendre"
FOURIER = "fourier"
FAMILIES = (LEGENDRE, FOURIER)


class LegendreBasis1D:
    """Legendre polynomials ``P_0..P_p`` affinely mapped to ``[lo, hi]``."""

    def __init__(self, lo, hi, degree):
        self.lo, self.hi, self.degree = float(lo), float(hi), int(degree)
        self.n = self.degree + 1
        self._jac = 2.0 / (self.hi - self.lo)

    def _check(self, r):
        if r < 0 or r > self.degree + 1:
            raise UnsupportedDerivative(
                f"derivative order {r} exceeds degree {self.degree} + 1"
            )

    def deriv_matrix(self, r):
        """``D`` with ``phi_j^(r) = sum_i D[i, j] phi_i`` (exact)."""
        self._check(r)
        D = np.zeros((self.n, self.n))
        for j in range(self.n):
            e = np.zeros(self.n)
            e[j] = 1.0
            c = npleg.legder(e, r) if r else e
            D[: len(c), j] = c
        return D * self._jac**r

    def values(self, x, r=0):
        """``phi_j^(r)(x)`` as an array of shape ``(len(x), n)``."""
        self._check(r)
        t = (np.asarray(x, dtype=float) - self.lo) * self._jac - 1.0
        V = npleg.legvander(t, self.degree)
        return V if r == 0 else V @ self.deriv_matrix(r)

    def quad_points(self, extra):
        return gauss_1d(self.lo, self.hi, self.degree + extra)

    def integrate(self, a, b):
        """``int_a^b phi_j`` for each ``j`` (exact)."""
        x, w = gauss_1d(a, b, self.degree // 2 + 1)
        return w @ self.values(x)

    def mass(self, a, b):
        x, w = gauss_1d(a, b, self.degree + 1)
        V = self.values(x)
        return V.T @ (w[:, None] * V)

    def poly_degrees(self):
        return np.arange(self.n)


class FourierBasis1D:
    """Real trigonometric basis ``1, cos(w_1 x), sin(w_1 x), ..., sin(w_K x)``.

    ``w_k = 2 pi k / (hi - lo)``, phase measured from ``lo``; every function is
    ``(hi - lo)``-periodic.
    """

    def __init__(self, lo, hi, modes):
        self.lo, self.hi, self.modes = float(lo), float(hi), int(modes)
        self.n = 2 * self.modes + 1
        self.omega = 2.0 * math.pi / (self.hi - self.lo)

    def deriv_matrix(self, r):
        if r < 0:
            raise UnsupportedDerivative("negative derivative order")
        D = np.zeros((self.n, self.n))
        if r == 0:
            D[0, 0] = 1.0
        for k in range(1, self.modes + 1):
            w = (k * self.omega) ** r
            ic, is_ = 2 * k - 1, 2 * k
            # cos^(r) and sin^(r) cycle with period 4
            rc = [(1, 0), (0, -1), (-1, 0), (0, 1)][r % 4]
            rs = [(0, 1), (1, 0), (0, -1), (-1, 0)][r % 4]
            D[ic, ic], D[is_, ic] = w * rc[0], w * rc[1]
            D[ic, is_], D[is_, is_] = w * rs[0], w * rs[1]
        return D

    def _raw(self, x):
        xi = np.asarray(x, dtype=float) - self.lo
        V = np.empty((xi.size, self.n))
        V[:, 0] = 1.0
        for k in range(1, self.modes + 1):
            V[:, 2 * k - 1] = np.cos(k * self.omega * xi)
            V[:, 2 * k] = np.sin(k * self.omega * xi)
        return V

    def values(self, x, r=0):
        V = self._raw(np.atleast_1d(x))
        return V if r == 0 else V @ self.deriv_matrix(r)

    def quad_points(self, extra):
        return periodic_1d(self.lo, self.hi, 2 * self.modes + extra)

    def _rule(self, a, b):
        if np.isclose(a, self.lo, rtol=0, atol=1e-15 * abs(self.hi - self.lo)) and np.isclose(
            b, self.hi, rtol=0, atol=1e-15 * abs(self.hi - self.lo)
        ):
            return periodic_1d(self.lo, self.hi, 2 * self.modes + 2)
        # partial period: Gauss is spectrally accurate, not exact
        return gauss_1d(a, b, max(32, 4 * self.modes + 16))

    def integrate(self, a, b):
        x, w = self._rule(a, b)
        return w @ self.values(x)

    def mass(self, a, b):
        x, w = self._rule(a, b)
        V = self.values(x)
        return V.T @ (w[:, None] * V)

    def poly_degrees(self):
        # only the constant is a polynomial
        deg = np.full(self.n, np.iinfo(np.int64).max // 8)
        deg[0] = 0
        return deg


@dataclass(frozen=True)
class BasisSpec:
    """Tensor-product basis on a box.

    Parameters
    ----------
    family : {"legendre", "fourier"}
    degree : int or tuple of int
        Polynomial degree per dimension (Legendre) or mode cutoff ``K``
        per dimension (Fourier).
    box : DomainBox
    """

    family: str
    degree: Tuple[int, ...]
    box: DomainBox

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown basis family {self.family!r}")
        deg = self.degree
        if isinstance(deg, (int, np.integer)):
            deg = (int(deg),) * self.box.d
        deg = tuple(int(p) for p in deg)
        if len(deg) != self.box.d:
            raise ValueError(f"need {self.box.d} degrees, got {len(deg)}")
        if self.family == LEGENDRE and min(deg) < 0:
            raise ValueError("Legendre degree must be nonnegative")
        if self.family == FOURIER and min(deg) < 1:
            raise ValueError("Fourier mode cutoff must be at least 1")
        object.__setattr__(self, "degree", deg)

    @property
    def d(self):
        return self.box.d

    @property
    def bases(self):
        cls = LegendreBasis1D if self.family == LEGENDRE else FourierBasis1D
        return tuple(cls(lo, hi, p) for (lo, hi), p in zip(self.box.intervals, self.degree))

    @property
    def shape(self):
        return tuple(b.n for b in self.bases)

    @property
    def n(self):
        return math.prod(self.shape)

    @property
    def indices(self):
        """Tensor index of every basis function, in coefficient order."""
        return list(itertools.product(*[range(k) for k in self.shape]))

    @property
    def periodic(self):
        return self.family == FOURIER

    def check_order(self, m):
        """Raise unless ``P_{m-1}`` lies in the span (Legendre needs ``p >= m``)."""
        if self.family == LEGENDRE and min(self.degree) < m:
            raise ValueError(f"Legendre degree {min(self.degree)} < Sobolev order {m}")

    def quad_points_per_dim(self, order):
        """Points per dimension used for assembly with derivatives up to ``order``."""
        return [len(b.quad_points(order + 2)[0]) for b in self.bases]


def row_kron(mats):
    """Row-wise Kronecker product of ``(N, n_k)`` matrices."""
    out = mats[0]
    for m in mats[1:]:
        out = (out[:, :, None] * m[:, None, :]).reshape(out.shape[0], -1)
    return out


def eval_basis(spec: BasisSpec, s, points):
    """Matrix of ``D^s phi_j`` at ``points`` (shape ``(npts, n)``)."""
    s = tuple(int(k) for k in s)
    if len(s) != spec.d:
        raise ValueError(f"multi-index {s} does not match d={spec.d}")
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if spec.d == 1 and pts.shape[0] == 1 and pts.shape[1] != 1:
        pts = pts.T
    if pts.shape[1] != spec.d:
        raise ValueError(f"points must have {spec.d} columns")
    return row_kron([b.values(pts[:, k], s[k]) for k, b in enumerate(spec.bases)])


def polynomial_subspace(spec: BasisSpec, degree):
    """Coefficient basis (unit columns) of the total-degree-``<= degree`` polynomials in the span."""
    per_dim = [b.poly_degrees() for b in spec.bases]
    cols = [
        j
        for j, idx in enumerate(spec.indices)
        if sum(int(per_dim[k][i]) for k, i in enumerate(idx)) <= degree
    ]
    out = np.zeros((spec.n, len(cols)))
    out[cols, np.arange(len(cols))] = 1.0
    return out
