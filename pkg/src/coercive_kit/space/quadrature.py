"""Tensor quadrature rules on boxes."""

import numpy as np
from numpy.polynomial.legendre import leggauss

from .domain import DomainBox


def gauss_1d(lo, hi, npts):
    """Gauss-Legendre rule on ``[lo, hi]``; exact up to degree ``2*npts - 1``."""
    if npts < 1:
        raise ValueError("need at least one quadrature point")
    t, w = leggauss(npts)
    half = 0.5 * (hi - lo)
    return lo + half * (t + 1.0), half * w


def periodic_1d(lo, hi, npts):
    """Equispaced rule on one period; exact for trig polynomials of degree < npts."""
    if npts < 1:
        raise ValueError("need at least one quadrature point")
    h = (hi - lo) / npts
    return lo + h * np.arange(npts), np.full(npts, h)


def tensor_rule(rules):
    """Combine 1-D ``(nodes, weights)`` pairs into a tensor rule.

    Nodes are ordered with the last coordinate varying fastest.
    """
    grids = np.meshgrid(*[r[0] for r in rules], indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=1)
    weights = rules[0][1]
    for _, w in rules[1:]:
        weights = np.multiply.outer(weights, w).ravel()
    return nodes, np.asarray(weights).ravel()


def quadrature_rule(box: DomainBox, points_per_dim, periodic=False):
    """Tensor Gauss-Legendre (or periodic trapezoidal) rule on ``box``.

    Returns ``(nodes, weights)`` with ``nodes`` of shape ``(N**d, d)``.
    """
    make = periodic_1d if periodic else gauss_1d
    return tensor_rule([make(lo, hi, points_per_dim) for lo, hi in box.intervals])
