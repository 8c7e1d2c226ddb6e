"""Perron-Frobenius quantities for nonnegative irreducible matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NonContraction, NotIrreducible
from .matrix import WeightMatrix, as_weight_matrix, is_irreducible

DEFAULT_TOL = 1e-12
DEFAULT_SEED = 42


def default_max_iter(n: int) -> int:
    return 100 * n + 10_000


@dataclass(frozen=True)
class PerronPair:
    lambda1: float
    p: np.ndarray
    q: np.ndarray
    residual: float
    iterations: int = 0


def _require_irreducible(W) -> WeightMatrix:
    W = as_weight_matrix(W)
    if not is_irreducible(W):
        raise NotIrreducible("matrix is not irreducible (its digraph is not strongly connected)")
    return W


def _start_vector(n, seed):
    if seed is None:
        return np.full(n, 1.0 / n)
    x = np.random.default_rng(seed).uniform(0.1, 1.0, n)
    return x / x.sum()


def _power_iteration(a, tol, max_iter, x):
    """Power iteration on ``a + I``.

    The unit shift keeps the Perron vector but makes the Perron root strictly
    dominant for every irreducible ``a``, periodic ones included. Iterates
    are kept on the simplex; returns ``(x, iterations)``.
    """
    n = a.shape[0]
    shifted = a + np.eye(n)
    for it in range(1, max_iter + 1):
        y = shifted @ x
        y /= y.sum()
        change = np.max(np.abs(y - x))
        x = y
        if change <= tol:
            break
    else:
        lam = float(np.sum(a @ x))
        res = float(np.max(np.abs(a @ x - lam * x)))
        raise NoConvergence(
            f"power iteration did not converge in {max_iter} iterations (residual {res:.3g})",
            iterations=max_iter,
            residual=res,
        )
    return x, it


def spectral_radius(A, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> float:
    return perron_pair(A, tol, max_iter).lambda1


def perron_pair(A, tol: float = DEFAULT_TOL, max_iter: int | None = None, seed: int | None = None) -> PerronPair:
    """Spectral radius with right and left Perron vectors, each summing to 1.

    ``seed`` picks a random strictly positive starting vector; ``None``
    starts from the uniform vector. The left vector comes from running the
    same iteration on the transpose, and ``lambda1`` is ``q^T A p / q^T p``.
    """
    A = _require_irreducible(A)
    n = A.n
    max_iter = max_iter or default_max_iter(n)
    a = A.entries
    p, it_p = _power_iteration(a, tol, max_iter, _start_vector(n, seed))
    q, it_q = _power_iteration(a.T, tol, max_iter, _start_vector(n, seed))
    # two-sided Rayleigh quotient: error is the product of the two vector errors
    lam = float(q @ (a @ p)) / float(q @ p)
    res = max(float(np.max(np.abs(a @ p - lam * p))), float(np.max(np.abs(q @ a - lam * q))))
    return PerronPair(lam, p, q, res, it_p + it_q)


def is_primitive(A) -> bool:
    """Whether some power of ``A`` is entrywise positive.

    Checked on the zero pattern at Wielandt's exponent ``n^2 - 2n + 2``,
    beyond which an irreducible matrix can no longer become positive.
    """
    A = _require_irreducible(A)
    n = A.n
    pattern = A.entries > 0
    exponent = n * n - 2 * n + 2
    result = np.eye(n, dtype=bool)
    base = pattern
    while exponent:
        if exponent & 1:
            result = (result.astype(np.int64) @ base.astype(np.int64)) > 0
        exponent >>= 1
        if exponent:
            base = (base.astype(np.int64) @ base.astype(np.int64)) > 0
    return bool(result.all())


def rank1_limit(A, tol: float = DEFAULT_TOL, pair: PerronPair | None = None) -> np.ndarray:
    """``p q^T / (q^T p)`` from the Perron pair of ``A``."""
    pair = pair or perron_pair(A, tol)
    return np.outer(pair.p, pair.q) / float(pair.q @ pair.p)


def _check_contraction(alpha, r):
    if alpha * r >= 1.0:
        raise NonContraction(f"alpha * r(A) = {alpha * r:.17g} >= 1; the resolvent is not a convergent series")


def scaled_resolvent(A, alpha: float, tol: float = DEFAULT_TOL, r: float | None = None) -> np.ndarray:
    """``(1 - alpha r(A)) (I - alpha A)^{-1}`` for ``0 < alpha < 1 / r(A)``."""
    A = as_weight_matrix(A)
    if r is None:
        r = spectral_radius(A, tol)
    _check_contraction(alpha, r)
    n = A.n
    inverse = np.linalg.solve(np.eye(n) - alpha * A.entries, np.eye(n))
    return (1.0 - alpha * r) * inverse


def power_ratio(A, ell: int, tol: float = DEFAULT_TOL, r: float | None = None) -> np.ndarray:
    """``A^ell / r(A)^ell``, scaling by ``1/r`` before powering so it stays bounded."""
    A = _require_irreducible(A)
    if ell < 1:
        raise ValueError("ell must be positive")
    if r is None:
        r = spectral_radius(A, tol)
    return np.linalg.matrix_power(A.entries / r, ell)
