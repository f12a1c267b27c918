"""Assembly of Gram, seminorm and operator forms on tensor bases.

Every integral over the box factorizes over coordinates, so a form
``sum_{a,b} c_a c_b int D^a phi_i D^b phi_j`` is a sum of Kronecker products
of 1-D matrices ``int phi_i^(r) phi_j^(t)``.  Those are evaluated with the
1-D factors of the tensor quadrature rule, which is the tensor rule itself
applied to a separable integrand.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from ..linalg import cholesky
from .basis import BasisSpec
from .domain import enumerate_multi_indices, multinomial

LAPLACIAN = "laplacian"
BILAPLACIAN = "bilaplacian"
OPERATOR_ORDER = {LAPLACIAN: 2, BILAPLACIAN: 4}


@dataclass(frozen=True)
class GramSet:
    """Discrete inner products on the coefficient space of ``spec``.

    ``full`` is the H^m inner product, ``semi`` its top-order part and
    ``op`` (when requested) the operator form ``int L u L v``.
    """

    spec: BasisSpec
    m: int
    full: np.ndarray
    semi: np.ndarray
    op: Optional[np.ndarray] = None
    op_name: Optional[str] = None


class _OneDimMoments:
    """Cache of ``int phi_i^(r) phi_j^(t)`` per coordinate."""

    def __init__(self, spec: BasisSpec, order):
        self.bases = spec.bases
        self.rules = [b.quad_points(order + 2) for b in self.bases]
        self._vals = {}
        self._mats = {}

    def _values(self, k, r):
        key = (k, r)
        if key not in self._vals:
            x, _ = self.rules[k]
            self._vals[key] = self.bases[k].values(x, r)
        return self._vals[key]

    def matrix(self, k, r, t):
        key = (k, r, t)
        if key not in self._mats:
            w = self.rules[k][1]
            self._mats[key] = self._values(k, r).T @ (w[:, None] * self._values(k, t))
        return self._mats[key]


def _assemble(moments, d, terms_left, terms_right):
    out = None
    for ca, a in terms_left:
        for cb, b in terms_right:
            block = reduce(np.kron, [moments.matrix(k, a[k], b[k]) for k in range(d)])
            out = ca * cb * block if out is None else out + ca * cb * block
    return 0.5 * (out + out.T)


def _diagonal_terms(d, order):
    """``sum_{|s|=order} (|s|!/s!) D^s u D^s v`` as a list of paired terms."""
    return [(multinomial(s), s) for s in enumerate_multi_indices(d, order, "exact")]


def seminorm_matrix(spec: BasisSpec, order, moments=None):
    """``sum over ordered derivative tuples of length order`` of ``int D u D v``.

    Mixed derivatives carry the multinomial weight ``|s|!/s!`` (e.g. ``u_xy``
    counts twice in 2-D for order 2), i.e. the Frobenius norm of the
    derivative tensor.  With this weighting ``||Lap v||^2 = |v|_2^2`` holds on
    the clamped, hinged and periodic spaces.
    """
    moments = moments or _OneDimMoments(spec, order)
    out = None
    for w, s in _diagonal_terms(spec.d, order):
        block = reduce(np.kron, [moments.matrix(k, s[k], s[k]) for k in range(spec.d)])
        out = w * block if out is None else out + w * block
    return 0.5 * (out + out.T)


def operator_terms(d, op):
    """Expansion of the operator into ``(coefficient, multi-index)`` terms."""
    if op == LAPLACIAN:
        return [(1.0, tuple(2 if j == k else 0 for j in range(d))) for k in range(d)]
    if op == BILAPLACIAN:
        out = []
        for s in enumerate_multi_indices(d, 4, "exact"):
            if all(k % 2 == 0 for k in s):
                half = tuple(k // 2 for k in s)
                out.append((float(multinomial(half)), s))
        return out
    raise ValueError(f"unknown operator {op!r}")


def assemble_operator_form(spec: BasisSpec, op):
    """``int (op phi_i)(op phi_j) dx`` for ``op`` in {laplacian, bilaplacian}."""
    order = OPERATOR_ORDER[op]
    moments = _OneDimMoments(spec, order)
    terms = operator_terms(spec.d, op)
    return _assemble(moments, spec.d, terms, terms)


def assemble_gram(spec: BasisSpec, m, op=None):
    """Assemble the H^m Gram matrix, the H^m seminorm and optionally an operator form.

    Raises
    ------
    NotPositiveDefinite
        If the Gram matrix fails the Cholesky test (degenerate basis).
    """
    if m < 0:
        raise ValueError("Sobolev order must be nonnegative")
    order = max(m, OPERATOR_ORDER.get(op, 0))
    moments = _OneDimMoments(spec, order)
    semis = [seminorm_matrix(spec, k, moments) for k in range(m + 1)]
    full = sum(semis[1:], semis[0].copy())
    d = np.sqrt(np.diag(full))
    cholesky(full / np.outer(d, d))
    op_mat = None
    if op is not None:
        terms = operator_terms(spec.d, op)
        op_mat = _assemble(moments, spec.d, terms, terms)
    return GramSet(spec=spec, m=m, full=full, semi=semis[m], op=op_mat, op_name=op)


def integral_moment_matrix(spec: BasisSpec, a, b):
    """Cross form ``int D^a phi_i D^b phi_j`` (not symmetrized)."""
    moments = _OneDimMoments(spec, max(max(a), max(b)))
    return reduce(np.kron, [moments.matrix(k, a[k], b[k]) for k in range(spec.d)])
