"""Linear best-response network game.

Player ``i`` best-responds with ``alpha * sum_j W[i, j] a[j] + b[i]``. When
``r(alpha W) < 1`` the unique Nash equilibrium is ``(I - alpha W)^{-1} b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .centrality import neumann_solve
from .errors import InputError, InvalidSpec, NonContraction, NotIrreducible
from .matrix import WeightMatrix, as_weight_matrix, is_irreducible
from .spectral import DEFAULT_TOL, default_max_iter, spectral_radius

# r(alpha W) within this of 1 is treated as failing the contraction hypothesis
CONTRACTION_GUARD = 1e-12


@dataclass(frozen=True)
class GameSpec:
    W: WeightMatrix
    alpha: float
    b: np.ndarray
    radius: float = field(default=None, compare=False)

    def __post_init__(self):
        W = as_weight_matrix(self.W)
        object.__setattr__(self, "W", W)
        if np.any(np.diag(W.entries) != 0):
            raise InvalidSpec("the interaction matrix must have a zero diagonal")
        if not self.alpha > 0:
            raise InvalidSpec("alpha must be positive")
        b = np.array(self.b, dtype=float)
        if b.shape != (W.n,):
            raise InvalidSpec(f"b has shape {b.shape}, expected ({W.n},)")
        if not np.all(np.isfinite(b)) or np.any(b <= 0):
            raise InvalidSpec("every standalone term b_i must be positive")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)
        if not is_irreducible(W):
            raise NotIrreducible("the interaction matrix is not irreducible")
        if self.radius is None:
            object.__setattr__(self, "radius", spectral_radius(W))

    @property
    def n(self) -> int:
        return self.W.n

    @property
    def contraction(self) -> float:
        """``r(alpha W)``."""
        return self.alpha * self.radius

    def with_b(self, b) -> GameSpec:
        return GameSpec(self.W, self.alpha, b, self.radius)

    def with_alpha(self, alpha) -> GameSpec:
        return GameSpec(self.W, alpha, self.b, self.radius)


@dataclass(frozen=True)
class EquilibriumResult:
    a_star: np.ndarray
    aggregate: float
    method: str
    iterations: int
    residual: float
    condition: float = float("nan")


def _check(spec):
    if spec.contraction >= 1.0 - CONTRACTION_GUARD:
        raise NonContraction(f"r(alpha W) = {spec.contraction:.17g} >= 1; no unique equilibrium is guaranteed")


def best_response(spec: GameSpec, a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return spec.alpha * (spec.W.entries @ a) + spec.b


def equilibrium(
    spec: GameSpec,
    method: str = "direct",
    tol: float = DEFAULT_TOL,
    max_iter: int | None = None,
    start=None,
) -> EquilibriumResult:
    """Unique Nash equilibrium.

    ``direct`` solves the linear system; ``neumann`` iterates simultaneous
    best responses from ``start`` (default ``b``). ``condition`` reports
    ``1 / (1 - r(alpha W))``.
    """
    _check(spec)
    W = spec.W.entries
    if method == "direct":
        a, iterations = np.linalg.solve(np.eye(spec.n) - spec.alpha * W, spec.b), 0
    elif method == "neumann":
        a, iterations = neumann_solve(W, spec.alpha, spec.b, tol, max_iter or default_max_iter(spec.n), start)
    else:
        raise InputError(f"unknown method {method!r}")
    residual = float(np.max(np.abs(a - best_response(spec, a))))
    return EquilibriumResult(a, float(a.sum()), method, iterations, residual, 1.0 / (1.0 - spec.contraction))


def keyness(spec: GameSpec, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Marginal effect of each ``b_i`` on aggregate equilibrium activity.

    The aggregate is ``1^T (I - alpha W)^{-1} b``, so the gradient in ``b``
    solves ``(I - alpha W^T) k = 1``.
    """
    _check(spec)
    return np.linalg.solve(np.eye(spec.n) - spec.alpha * spec.W.entries.T, np.ones(spec.n))


def blow_up_alphas(radius: float, k_max: int) -> list[float]:
    return [(1.0 - 2.0**-k) / radius for k in range(1, k_max + 1)]


def blow_up_scan(W, b, k_max: int = 30) -> list[tuple[float, float, float]]:
    """Equilibria as ``alpha`` climbs to ``1 / r(W)``.

    Evaluates ``alpha_k = (1 - 2^-k) / r(W)`` for ``k = 1..k_max`` and returns
    ``(alpha_k, min_i a*_i, aggregate)`` per step.
    """
    base = GameSpec(W, 1.0, b)
    rows = []
    for alpha in blow_up_alphas(base.radius, k_max):
        res = equilibrium(base.with_alpha(alpha))
        rows.append((alpha, float(res.a_star.min()), res.aggregate))
    return rows
