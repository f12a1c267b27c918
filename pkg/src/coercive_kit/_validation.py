"""Input validation helpers in the spirit of ``sklearn.utils.validation``."""

import numpy as np

from .exceptions import DimensionMismatch

SYMMETRY_RTOL = 1e-14


def check_matrix(m, name="matrix", allow_empty_cols=False):
    """Return ``m`` as a 2-D float array, rejecting NaN/inf."""
    arr = np.asarray(m, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.shape[0] < 1:
        raise DimensionMismatch(f"{name} must have at least one row")
    if arr.shape[1] < 1 and not allow_empty_cols:
        raise DimensionMismatch(f"{name} must have at least one column")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or inf")
    return arr


def check_symmetric(m, name="matrix"):
    """Validate a square symmetric matrix and return its exact symmetrization.

    Asymmetry up to ``1e-14 * max(1, ||m||_F)`` is accepted and removed.
    """
    arr = check_matrix(m, name)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got {arr.shape}")
    scale = max(1.0, float(np.linalg.norm(arr)))
    if np.max(np.abs(arr - arr.T), initial=0.0) > SYMMETRY_RTOL * scale:
        raise ValueError(f"{name} is not symmetric")
    return 0.5 * (arr + arr.T)


def check_same_shape(a, b, names=("a", "b")):
    if a.shape != b.shape:
        raise DimensionMismatch(
            f"{names[0]} has shape {a.shape} but {names[1]} has shape {b.shape}"
        )


def check_rng(seed):
    """Turn ``seed`` into a ``numpy.random.Generator``."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


SEED_ENV = "COERCIVE_KIT_SEED"


def env_seed(default=0):
    """Seed from ``$COERCIVE_KIT_SEED`` (falls back to ``default``)."""
    import os

    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw not in (None, "") else default
