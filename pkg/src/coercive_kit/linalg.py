"""Dense symmetric linear algebra used by the coercivity machinery.

Everything here is deterministic and works on plain ``numpy`` arrays.  The
eigensolvers are Jacobi methods: a cyclic-by-rows two-sided Jacobi iteration
for symmetric matrices and a one-sided (Hestenes) Jacobi iteration for
singular values.  The sweep kernels are compiled with numba.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.linalg import solve_triangular

from ._validation import check_matrix, check_same_shape, check_symmetric
from .exceptions import NoConvergence, NotPositiveDefinite, RankDeficient

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 30
SVD_TOL = 1e-15
SVD_MAX_SWEEPS = 60
NULLSPACE_TOL = 1e-10
CHOLESKY_PIVOT_RTOL = 1e-14
ORTHO_RTOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray

    def __iter__(self):
        return iter((self.values, self.vectors))


@njit(cache=True)
def _rotation(app, aqq, apq):
    """Jacobi rotation ``(c, s, t)`` annihilating ``apq``."""
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
        if theta < 0.0:
            t = -t
    c = 1.0 / np.sqrt(1.0 + t * t)
    return c, t * c, t


@njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return np.sqrt(acc)


@njit(cache=True)
def _jacobi_sweeps(a, v, tol_abs, max_sweeps):
    """Cyclic-by-rows Jacobi on ``a`` in place, accumulating rotations in ``v``.

    Returns the number of sweeps used, or -1 if the budget ran out.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        if _offdiag_norm(a) <= tol_abs:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                c, s, t = _rotation(app, aqq, apq)
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    nkp = c * akp - s * akq
                    nkq = s * akp + c * akq
                    a[k, p] = nkp
                    a[p, k] = nkp
                    a[k, q] = nkq
                    a[q, k] = nkq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return -1


@njit(cache=True)
def _hestenes_sweeps(w, v, tol, negligible, max_sweeps):
    """One-sided Jacobi: rotate column pairs of ``w`` until mutually orthogonal.

    Pairs involving a column of norm below ``negligible`` are left alone.
    Returns the number of sweeps used, or -1 if the budget ran out.
    """
    r, n = w.shape
    for sweep in range(max_sweeps):
        worst = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for k in range(r):
                    alpha += w[k, p] * w[k, p]
                    beta += w[k, q] * w[k, q]
                    gamma += w[k, p] * w[k, q]
                if gamma == 0.0 or min(alpha, beta) <= negligible * negligible:
                    continue
                rel = abs(gamma) / np.sqrt(alpha * beta)
                if rel > worst:
                    worst = rel
                if rel <= tol:
                    continue
                c, s, _ = _rotation(alpha, beta, gamma)
                for k in range(r):
                    wkp = w[k, p]
                    wkq = w[k, q]
                    w[k, p] = c * wkp - s * wkq
                    w[k, q] = s * wkp + c * wkq
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        if worst <= tol:
            return sweep + 1
    return -1


def sym_eig(m, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Symmetric matrix.
    tol : float
        Stop once the off-diagonal Frobenius norm is below ``tol * ||m||_F``.
    max_sweeps : int
        Sweep budget; exceeding it raises :class:`NoConvergence`.

    Returns
    -------
    EigenDecomposition
        Ascending eigenvalues and orthonormal eigenvectors (columns).
    """
    a = np.ascontiguousarray(check_symmetric(m))
    n = a.shape[0]
    vecs = np.eye(n)
    peak = float(np.max(np.abs(a), initial=0.0))
    if n > 1 and peak > 0.0:
        a /= peak
        norm = float(np.linalg.norm(a))
        if _jacobi_sweeps(a, vecs, tol * norm, max_sweeps) < 0:
            raise NoConvergence(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_offdiag_norm(a) * peak:.3e}, ||A||_F {norm * peak:.3e})"
            )
        a *= peak
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], vecs[:, order])


def cholesky(m):
    """Lower-triangular ``L`` with ``L @ L.T == m``.

    Raises :class:`NotPositiveDefinite` when a pivot drops to
    ``1e-14 * max(diag(m))`` or below.
    """
    a = check_symmetric(m)
    n = a.shape[0]
    dmax = float(np.max(np.diag(a)))
    if dmax <= 0.0:
        raise NotPositiveDefinite("matrix has no positive diagonal entry")
    floor = CHOLESKY_PIVOT_RTOL * dmax
    L = np.zeros_like(a)
    for j in range(n):
        row = L[j, :j]
        pivot = a[j, j] - row @ row
        if pivot <= floor:
            raise NotPositiveDefinite(
                f"pivot {pivot:.3e} at index {j} is below {floor:.3e}"
            )
        L[j, j] = np.sqrt(pivot)
        L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ row) / L[j, j]
    return L


def gen_sym_eig(a, m):
    """Solve ``a x = lam m x`` for symmetric ``a`` and SPD ``m``.

    ``m`` is first equilibrated by its diagonal, then reduced with a Cholesky
    factor; the reduced symmetric problem goes through :func:`sym_eig`.
    Eigenvectors are returned ``m``-orthonormal.
    """
    a = check_symmetric(a, "a")
    m = check_symmetric(m, "m")
    check_same_shape(a, m, ("a", "m"))
    diag = np.diag(m)
    if np.any(diag <= 0.0):
        raise NotPositiveDefinite("metric has a non-positive diagonal entry")
    d = 1.0 / np.sqrt(diag)
    a_s = a * d[:, None] * d[None, :]
    m_s = m * d[:, None] * d[None, :]
    L = cholesky(m_s)
    half = solve_triangular(L, a_s, lower=True)
    reduced = solve_triangular(L, half.T, lower=True)
    eig = sym_eig(0.5 * (reduced + reduced.T))
    vecs = solve_triangular(L.T, eig.vectors, lower=False) * d[:, None]
    return EigenDecomposition(eig.values, vecs)


def _one_sided_jacobi(b, tol=SVD_TOL, max_sweeps=SVD_MAX_SWEEPS):
    """Orthogonalize the columns of ``b`` by plane rotations.

    Returns ``(w, v)`` with ``w = b @ v`` having mutually orthogonal columns
    and ``v`` orthogonal.  Column norms of ``w`` are the singular values.
    """
    w = np.array(b, dtype=float, order="C")
    n = w.shape[1]
    v = np.eye(n)
    peak = float(np.max(np.abs(w), initial=0.0))
    if n < 2 or peak == 0.0:
        return w, v
    # rotations commute with scaling; unit scale keeps the sums of squares
    # away from underflow and overflow
    w /= peak
    negligible = np.finfo(float).eps * float(np.linalg.norm(w)) * 1e-2
    if _hestenes_sweeps(w, v, tol, negligible, max_sweeps) < 0:
        raise NoConvergence(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")
    return w * peak, v


def singular_values(b):
    """Descending singular values of ``b``; ``min(rows, cols)`` of them."""
    b = check_matrix(b, "b", allow_empty_cols=True)
    if b.shape[1] == 0:
        return np.zeros(0)
    work = b if b.shape[0] >= b.shape[1] else b.T
    w, _ = _one_sided_jacobi(work)
    sv = np.sort(np.linalg.norm(w, axis=0))[::-1]
    return sv[: min(b.shape)]


def nullspace(m, tol=NULLSPACE_TOL):
    """Orthonormal basis of the right singular directions with ``sigma <= tol * sigma_max``.

    Directions beyond the row count (wide input) count as zero singular
    values.  A zero matrix returns the identity.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    b = check_matrix(m, "m")
    n = b.shape[1]
    w, v = _one_sided_jacobi(b)
    norms = np.linalg.norm(w, axis=0)
    smax = float(np.max(norms, initial=0.0))
    if smax == 0.0:
        return np.eye(n)
    keep = norms <= tol * smax
    # stable column order: by increasing norm, ties by index
    idx = np.flatnonzero(keep)
    idx = idx[np.argsort(norms[idx], kind="stable")]
    return v[:, idx]


def m_orthonormalize(b, m):
    """``m``-orthonormal basis of the column span of ``b``.

    Modified Gram-Schmidt in the ``m`` inner product with one full
    re-orthogonalization pass.
    """
    b = check_matrix(b, "b", allow_empty_cols=True)
    m = check_symmetric(m, "m")
    if b.shape[0] != m.shape[0]:
        raise ValueError(f"basis has {b.shape[0]} rows, metric is {m.shape[0]}x{m.shape[0]}")
    k = b.shape[1]
    q = np.zeros_like(b)
    mq = np.zeros_like(b)
    for j in range(k):
        x = b[:, j].copy()
        orig = float(np.sqrt(max(x @ m @ x, 0.0)))
        for _ in range(2):
            for i in range(j):
                x -= q[:, i] * (mq[:, i] @ x)
        mx = m @ x
        nrm = float(np.sqrt(max(x @ mx, 0.0)))
        if orig == 0.0 or nrm < ORTHO_RTOL * orig:
            raise RankDeficient(f"column {j} is (numerically) dependent on previous columns")
        q[:, j] = x / nrm
        mq[:, j] = mx / nrm
    return q
