"""Bonacich centrality ``beta(W; alpha, b) = (I - alpha W)^{-1} b``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NoConvergence, NonContraction
from .matrix import WeightMatrix, as_weight_matrix
from .spectral import DEFAULT_TOL, default_max_iter, spectral_radius


@dataclass(frozen=True)
class CentralityQuery:
    """Matrix, decay parameter and base vector for a centrality computation.

    ``b_hat`` defaults to the all-ones vector. Construction computes
    ``r(W_hat)`` and rejects ``alpha_hat * r(W_hat) >= 1``.
    """

    W_hat: WeightMatrix
    alpha_hat: float
    b_hat: np.ndarray | None = None
    radius: float = field(default=None, compare=False)

    def __post_init__(self):
        W = as_weight_matrix(self.W_hat)
        object.__setattr__(self, "W_hat", W)
        b = np.ones(W.n) if self.b_hat is None else np.array(self.b_hat, dtype=float)
        if b.shape != (W.n,):
            raise InputError(f"base vector has shape {b.shape}, expected ({W.n},)")
        if np.any(b < 0) or not np.all(np.isfinite(b)):
            raise InputError("base vector must be finite and nonnegative")
        b.setflags(write=False)
        object.__setattr__(self, "b_hat", b)
        if not self.alpha_hat > 0:
            raise InputError("alpha_hat must be positive")
        r = self.radius if self.radius is not None else spectral_radius(W)
        object.__setattr__(self, "radius", r)
        if self.alpha_hat * r >= 1.0:
            raise NonContraction(f"alpha_hat * r(W_hat) = {self.alpha_hat * r:.17g} >= 1")


def neumann_solve(M: np.ndarray, alpha: float, b: np.ndarray, tol: float, max_iter: int, x0=None):
    """Iterate ``x <- b + alpha M x`` until the sup-norm step is at most ``tol``.

    The step test is scaled by ``max(1, |x|_inf)`` so that large solutions are
    not held to an absolute bound below their rounding floor. Returns
    ``(x, iterations)``.
    """
    x = np.array(b if x0 is None else x0, dtype=float)
    for it in range(1, max_iter + 1):
        x_new = b + alpha * (M @ x)
        change = np.max(np.abs(x_new - x))
        x = x_new
        if change <= tol * max(1.0, np.max(np.abs(x))):
            return x, it
    res = float(np.max(np.abs(x - b - alpha * (M @ x))))
    raise NoConvergence(f"Neumann iteration did not converge in {max_iter} iterations", max_iter, res)


def _solve(query, method, tol, max_iter):
    W, alpha, b = query.W_hat.entries, query.alpha_hat, query.b_hat
    if method == "direct":
        return np.linalg.solve(np.eye(W.shape[0]) - alpha * W, b), 0
    if method == "neumann":
        return neumann_solve(W, alpha, b, tol, max_iter or default_max_iter(W.shape[0]))
    raise InputError(f"unknown method {method!r}")


def bonacich(query: CentralityQuery, method: str = "direct", tol: float = DEFAULT_TOL, max_iter: int | None = None) -> np.ndarray:
    beta, _ = _solve(query, method, tol, max_iter)
    return beta


def bonacich_with_diagnostics(query, method="direct", tol=DEFAULT_TOL, max_iter=None):
    beta, iterations = _solve(query, method, tol, max_iter)
    return beta, {"iterations": iterations, "residual": verify_recursion(query, beta), "spectral_radius": query.radius}


def verify_recursion(query: CentralityQuery, beta) -> float:
    """Sup-norm residual of ``beta = b + alpha W beta``."""
    beta = np.asarray(beta, dtype=float)
    W = query.W_hat.entries
    return float(np.max(np.abs(beta - query.b_hat - query.alpha_hat * (W @ beta))))


def truncated_series(query: CentralityQuery, L: int) -> np.ndarray:
    """Partial sum ``sum_{l=0}^{L} alpha^l W^l b``."""
    W, alpha = query.W_hat.entries, query.alpha_hat
    term = query.b_hat.copy()
    total = term.copy()
    for _ in range(L):
        term = alpha * (W @ term)
        total += term
    return total
