"""Coercivity of symmetric forms on subspaces through subspace angles.

A symmetric positive semidefinite form ``a`` with finite-dimensional kernel
that is coercive with constant ``gamma_perp`` on the orthogonal complement of
its kernel is coercive on every subspace ``V`` meeting the kernel trivially,
with constant ``gamma_perp * beta(V, ker a)**2`` where ``beta`` is the sine of
the angle between ``V`` and the kernel.  This module computes all of these
quantities for coefficient-space matrices.
"""

import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_matrix, check_rng, check_same_shape, check_symmetric
from .exceptions import (
    HypothesisViolated,
    IntersectingSubspaces,
    MetricMismatch,
    NotSemidefinite,
    TrivialSubspace,
)
from .linalg import gen_sym_eig, singular_values

KERNEL_TOL = 1e-10
INTERSECTION_GAP = 1e-10
COERCIVITY_THRESHOLD = 1e-8
BOUND_RTOL = 1e-9


@dataclass(frozen=True)
class Subspace:
    """Column span of ``basis``; columns are orthonormal in ``metric``."""

    basis: np.ndarray
    metric: np.ndarray

    def __post_init__(self):
        basis = check_matrix(self.basis, "basis", allow_empty_cols=True)
        if basis.shape[0] != self.metric.shape[0]:
            raise ValueError("basis rows must match the metric dimension")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self):
        return self.basis.shape[1]

    @property
    def ambient_dim(self):
        return self.basis.shape[0]

    def gram_error(self):
        """``max |B^T M B - I|``."""
        if self.dim == 0:
            return 0.0
        G = self.basis.T @ self.metric @ self.basis
        return float(np.max(np.abs(G - np.eye(self.dim))))

    def project(self, x):
        """Metric-orthogonal projection of the columns of ``x`` onto the span."""
        return self.basis @ (self.basis.T @ (self.metric @ x))

    def restrict(self, a):
        """Matrix of the form ``a`` in this basis."""
        return self.basis.T @ a @ self.basis


@dataclass(frozen=True)
class AngleResult:
    alpha: float
    beta: float
    angle: float
    intersects: bool


@dataclass(frozen=True)
class CoercivityReport:
    """Outcome of the angle criterion on one subspace.

    ``gamma_sharp`` is the best constant on ``V``; ``bound`` is
    ``gamma_perp * beta**2``, the constant guaranteed by the criterion.
    """

    gamma_sharp: float
    gamma_perp: float
    alpha: float
    beta: float
    angle: float
    bound: float
    kernel_dim: int
    intersects_kernel: bool
    scale: float
    threshold: float

    @property
    def coercive(self):
        return self.gamma_sharp > self.threshold * self.scale

    @property
    def bound_holds(self):
        return self.gamma_sharp >= self.bound - BOUND_RTOL * max(1.0, abs(self.gamma_sharp))

    @property
    def verified(self):
        return self.coercive and self.bound_holds and not self.intersects_kernel


@dataclass(frozen=True)
class AugmentedReport:
    constant: float
    kernel_dim: int
    b_min: float
    b_kernel_min: float
    scale: float


@dataclass(frozen=True)
class ProjectionCheck:
    """Sampled ratios ``|Pv|/|v|`` and ``beta |v| / |(I-P)v|``."""

    alpha: float
    beta: float
    projection_ratios: np.ndarray
    inverse_ratios: np.ndarray
    pythagoras_residual: float

    @property
    def max_projection_ratio(self):
        return float(np.max(self.projection_ratios, initial=0.0))

    @property
    def max_inverse_ratio(self):
        return float(np.max(self.inverse_ratios, initial=0.0))


def _same_metric(v: Subspace, w: Subspace):
    if v.metric is w.metric:
        return
    if v.metric.shape != w.metric.shape or not np.allclose(v.metric, w.metric, rtol=1e-12, atol=0.0):
        raise MetricMismatch("subspaces use different metrics")


def _pencil(a, metric):
    a = check_symmetric(a, "a")
    metric = check_symmetric(metric, "metric")
    check_same_shape(a, metric, ("a", "metric"))
    return a, metric


def _split_kernel(eig, tol):
    values = eig.values
    lam_max = float(values[-1]) if values.size else 0.0
    if lam_max <= 0.0:
        if values.size and values[0] < 0.0:
            raise NotSemidefinite(f"form is negative definite (max eigenvalue {lam_max:.3e})")
        return np.ones(values.size, dtype=bool), 0.0
    if values[0] < -tol * lam_max:
        raise NotSemidefinite(
            f"smallest eigenvalue {values[0]:.3e} below -{tol:g} * {lam_max:.3e}"
        )
    return values <= tol * lam_max, lam_max


def kernel_of_form(a, metric, tol=KERNEL_TOL):
    """Metric-orthonormal basis of ``{v : a(v, v) = 0}`` (numerically)."""
    a, metric = _pencil(a, metric)
    eig = gen_sym_eig(a, metric)
    mask, _ = _split_kernel(eig, tol)
    return Subspace(eig.vectors[:, mask], metric)


def subspace_angle(v: Subspace, w: Subspace):
    """Cosine ``alpha`` and sine ``beta`` of the minimal angle between ``v`` and ``w``.

    ``alpha`` is the largest singular value of ``V^T M W``; it is 0 when either
    space is trivial.
    """
    _same_metric(v, w)
    if v.dim == 0 or w.dim == 0:
        alpha = 0.0
    else:
        alpha = float(singular_values(v.basis.T @ v.metric @ w.basis)[0])
        alpha = min(alpha, 1.0)
    beta = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    return AngleResult(alpha, beta, math.acos(alpha), alpha >= 1.0 - INTERSECTION_GAP)


def projection_bounds_check(v: Subspace, w: Subspace, samples=1000, seed=None):
    """Sample the projection inequalities ``|Pv| <= alpha |v|`` and ``|v| <= |(I-P)v| / beta``.

    ``P`` is the metric-orthogonal projection onto ``w``; vectors are drawn
    isotropically from ``v``.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    ang = subspace_angle(v, w)
    if ang.intersects:
        raise IntersectingSubspaces(f"alpha = {ang.alpha:.16g} is 1 to within {INTERSECTION_GAP:g}")
    if v.dim == 0:
        raise TrivialSubspace("cannot sample from the trivial subspace")
    rng = check_rng(seed)
    X = v.basis @ rng.standard_normal((v.dim, samples))
    M = v.metric

    def norms(Y):
        return np.sqrt(np.maximum(np.einsum("ij,ij->j", Y, M @ Y), 0.0))

    PX = w.project(X) if w.dim else np.zeros_like(X)
    nx, npx, nqx = norms(X), norms(PX), norms(X - PX)
    pyth = float(np.max(np.abs(npx**2 + nqx**2 - nx**2) / nx**2))
    return ProjectionCheck(ang.alpha, ang.beta, npx / nx, ang.beta * nx / nqx, pyth)


def sharp_coercivity(a, metric, v: Subspace):
    """Largest ``gamma`` with ``gamma |x|^2 <= a(x, x)`` on ``v``."""
    a, metric = _pencil(a, metric)
    if v.dim == 0:
        raise TrivialSubspace("sharp constant is undefined on {0}")
    return float(gen_sym_eig(v.restrict(a), v.restrict(metric)).values[0])


class CoercivityEstimator(BaseEstimator):
    """Learn the kernel of a form and its coercivity on the kernel's complement.

    Parameters
    ----------
    tol : float
        Relative eigenvalue level below which a direction counts as kernel.
    threshold : float
        A subspace is called coercive when its sharp constant exceeds
        ``threshold`` times the largest eigenvalue of the pencil on it.

    Attributes
    ----------
    kernel_ : Subspace
    complement_ : Subspace
    gamma_perp_ : float
    lambda_max_ : float
    kernel_dim_ : int

    Examples
    --------
    >>> import numpy as np
    >>> est = CoercivityEstimator().fit(np.diag([0.0, 1.0]), np.eye(2))
    >>> est.kernel_dim_
    1
    """

    def __init__(self, tol=KERNEL_TOL, threshold=COERCIVITY_THRESHOLD):
        self.tol = tol
        self.threshold = threshold

    def fit(self, a, metric):
        a, metric = _pencil(a, metric)
        eig = gen_sym_eig(a, metric)
        mask, lam_max = _split_kernel(eig, self.tol)
        self.a_ = a
        self.metric_ = metric
        self.kernel_ = Subspace(eig.vectors[:, mask], metric)
        self.complement_ = Subspace(eig.vectors[:, ~mask], metric)
        self.kernel_dim_ = int(mask.sum())
        self.lambda_max_ = lam_max
        self.gamma_perp_ = float(eig.values[~mask][0]) if (~mask).any() else 0.0
        return self

    def transform(self, X):
        """Remove the kernel component: rows of ``X`` are coefficient vectors."""
        check_is_fitted(self)
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if self.kernel_dim_ == 0:
            return X.copy()
        return X - self.kernel_.project(X.T).T

    def evaluate(self, v: Subspace):
        """Full :class:`CoercivityReport` for the subspace ``v``."""
        check_is_fitted(self)
        if v.dim == 0:
            raise TrivialSubspace("cannot evaluate coercivity on {0}")
        _same_metric(v, self.kernel_)
        ang = subspace_angle(v, self.kernel_)
        eig = gen_sym_eig(v.restrict(self.a_), v.restrict(self.metric_))
        return CoercivityReport(
            gamma_sharp=float(eig.values[0]),
            gamma_perp=self.gamma_perp_,
            alpha=ang.alpha,
            beta=ang.beta,
            angle=ang.angle,
            bound=self.gamma_perp_ * ang.beta**2,
            kernel_dim=self.kernel_dim_,
            intersects_kernel=ang.intersects,
            scale=max(float(eig.values[-1]), 0.0),
            threshold=self.threshold,
        )

    def predict(self, v: Subspace):
        return self.evaluate(v).verified

    def score(self, v: Subspace):
        return self.evaluate(v).gamma_sharp


def coercivity_via_angle(a, metric, v: Subspace, tol=KERNEL_TOL, threshold=COERCIVITY_THRESHOLD):
    """Sharp constant on ``v`` together with the angle-based lower bound."""
    return CoercivityEstimator(tol=tol, threshold=threshold).fit(a, metric).evaluate(v)


def augmented_coercivity(a, b, metric, tol=KERNEL_TOL):
    """Coercivity of ``a + b`` on the whole space.

    Requires ``b`` positive semidefinite everywhere and positive definite on
    the kernel of ``a``; otherwise :class:`HypothesisViolated` names the
    failing requirement.
    """
    a, metric = _pencil(a, metric)
    b = check_symmetric(b, "b")
    check_same_shape(a, b, ("a", "b"))
    est = CoercivityEstimator(tol=tol).fit(a, metric)
    b_eig = gen_sym_eig(b, metric).values
    scale = max(est.lambda_max_, float(b_eig[-1]), 0.0)
    b_min = float(b_eig[0])
    if b_min < -tol * scale:
        raise HypothesisViolated("b positive semidefinite", f"min eigenvalue {b_min:.3e}")
    if est.kernel_dim_:
        K = est.kernel_
        b_kernel_min = float(gen_sym_eig(K.restrict(b), K.restrict(metric)).values[0])
    else:
        b_kernel_min = math.inf
    if not b_kernel_min > tol * scale:
        raise HypothesisViolated(
            "b positive definite on ker a", f"min eigenvalue on kernel {b_kernel_min:.3e}"
        )
    constant = float(gen_sym_eig(a + b, metric).values[0])
    return AugmentedReport(constant, est.kernel_dim_, b_min, b_kernel_min, scale)
