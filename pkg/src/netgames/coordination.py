"""Coordination game on a row-stochastic network.

With ``W = Gamma`` row-stochastic and ``b = (1 - alpha) y`` every player
targets a weighted average of their own ideal point and the neighbours'
actions. Equilibrium actions are convex combinations of the ideal points,
and as ``alpha -> 1`` they collapse onto the common value ``q^T y`` where
``q`` is the left Perron vector of ``Gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, InvalidSpec, NotIrreducible
from .matrix import WeightMatrix, as_weight_matrix, is_irreducible
from .spectral import DEFAULT_TOL, perron_pair

ROW_SUM_TOL = 1e-12


def _validate_gamma(Gamma) -> WeightMatrix:
    Gamma = as_weight_matrix(Gamma)
    rows = Gamma.entries.sum(axis=1)
    if np.any(np.abs(rows - 1.0) > ROW_SUM_TOL):
        bad = int(np.argmax(np.abs(rows - 1.0)))
        raise InvalidSpec(f"row {bad} of Gamma sums to {rows[bad]:.17g}, not 1")
    if np.any(np.diag(Gamma.entries) != 0):
        raise InvalidSpec("Gamma must have a zero diagonal")
    if not is_irreducible(Gamma):
        raise NotIrreducible("Gamma is not irreducible")
    return Gamma


@dataclass(frozen=True)
class CoordinationSpec:
    Gamma: WeightMatrix
    alpha: float
    y: np.ndarray

    def __post_init__(self):
        Gamma = _validate_gamma(self.Gamma)
        object.__setattr__(self, "Gamma", Gamma)
        if not 0 < self.alpha < 1:
            raise InvalidSpec("alpha must lie strictly between 0 and 1")
        y = _ideal_points(self.y, Gamma.n)
        object.__setattr__(self, "y", y)


def _ideal_points(y, n):
    y = np.array(y, dtype=float)
    if y.shape != (n,):
        raise InputError(f"y has shape {y.shape}, expected ({n},)")
    if not np.all(np.isfinite(y)):
        raise InputError("ideal points must be finite")
    y.setflags(write=False)
    return y


def influence_weights(spec: CoordinationSpec, tol: float = DEFAULT_TOL) -> np.ndarray:
    """``V = (1 - alpha) (I - alpha Gamma)^{-1}``; row ``i`` weights the ideal points in ``a*_i``."""
    n = spec.Gamma.n
    return (1.0 - spec.alpha) * np.linalg.solve(np.eye(n) - spec.alpha * spec.Gamma.entries, np.eye(n))


def coordination_equilibrium(spec: CoordinationSpec, tol: float = DEFAULT_TOL) -> np.ndarray:
    n = spec.Gamma.n
    return (1.0 - spec.alpha) * np.linalg.solve(np.eye(n) - spec.alpha * spec.Gamma.entries, spec.y)


def consensus_weights(Gamma, tol: float = DEFAULT_TOL, seed: int | None = None) -> np.ndarray:
    """Left Perron vector of ``Gamma``: each player's weight in the consensus."""
    return perron_pair(_validate_gamma(Gamma), tol, seed=seed).q


def consensus_limit(Gamma, y, tol: float = DEFAULT_TOL, seed: int | None = None) -> float:
    q = consensus_weights(Gamma, tol, seed)
    return float(q @ _ideal_points(y, q.shape[0]))
