"""Dense nonnegative weight matrices and their digraph view.

Entry ``(i, j)`` is the weight player ``i`` places on player ``j``'s action,
so a positive entry is a directed edge ``i -> j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, DuplicateEdge, IndexOutOfRange, InputError, NegativeWeight

DEFAULT_WALK_CAP = 10**6


@dataclass(frozen=True)
class WeightMatrix:
    entries: np.ndarray
    labels: tuple[str, ...] | None = None
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InputError(f"weight matrix must be square with n >= 1, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InputError("weights must be finite")
        if np.any(a < 0):
            i, j = map(int, np.argwhere(a < 0)[0])
            raise NegativeWeight(f"negative weight {a[i, j]!r} at ({i}, {j})")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

        index = {}
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != a.shape[0]:
                raise InputError(f"{len(labels)} labels for {a.shape[0]} nodes")
            index = {s: k for k, s in enumerate(labels)}
            if len(index) != len(labels):
                raise InputError("node labels must be distinct")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise InputError("matrix has no node labels")
        try:
            return self._index[label]
        except KeyError:
            raise IndexOutOfRange(f"unknown node label {label!r}") from None

    def node_labels(self) -> tuple[str, ...]:
        """Labels if present, else the indices rendered as strings."""
        if self.labels is not None:
            return self.labels
        return tuple(str(i) for i in range(self.n))

    def transpose(self) -> WeightMatrix:
        return WeightMatrix(self.entries.T, self.labels)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def as_weight_matrix(W) -> WeightMatrix:
    if isinstance(W, WeightMatrix):
        return W
    return WeightMatrix(np.asarray(W, dtype=float))


def build_matrix(n: int, edges: Iterable[tuple[int, int, float]], labels: Sequence[str] | None = None) -> WeightMatrix:
    """Dense matrix from ``(src, dst, weight)`` triples; unlisted entries are 0."""
    if n < 1:
        raise InputError("n must be at least 1")
    a = np.zeros((n, n))
    seen = set()
    for src, dst, w in edges:
        if not (0 <= src < n and 0 <= dst < n):
            raise IndexOutOfRange(f"edge ({src}, {dst}) out of range for n={n}")
        if w < 0:
            raise NegativeWeight(f"negative weight {w!r} on edge ({src}, {dst})")
        if (src, dst) in seen:
            raise DuplicateEdge(f"duplicate edge ({src}, {dst})")
        seen.add((src, dst))
        a[src, dst] = w
    return WeightMatrix(a, labels)


def _reaches_all(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.flatnonzero(adj[i] & ~seen):
            seen[j] = True
            stack.append(int(j))
    return bool(seen.all())


def is_irreducible(W) -> bool:
    """Strong connectivity of the digraph of positive entries.

    A 1x1 matrix counts as irreducible only when its entry is positive.
    """
    a = as_weight_matrix(W).entries
    if a.shape[0] == 1:
        return bool(a[0, 0] > 0)
    adj = a > 0
    return _reaches_all(adj) and _reaches_all(adj.T)


def matrix_power(W, ell: int) -> WeightMatrix:
    if ell < 0:
        raise InputError("exponent must be nonnegative")
    W = as_weight_matrix(W)
    return WeightMatrix(np.linalg.matrix_power(W.entries, ell), W.labels)


@dataclass(frozen=True)
class Walk:
    nodes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1


def _walks(a: np.ndarray, ell: int, i: int, j: int) -> Iterator[tuple[tuple[int, ...], float]]:
    n = a.shape[0]
    succ = [[int(k) for k in np.flatnonzero(a[v] > 0)] for v in range(n)]
    pred = [[int(k) for k in np.flatnonzero(a[:, v] > 0)] for v in range(n)]

    # can_finish[t]: nodes with some walk of exactly t edges ending at j
    can_finish = [{j}]
    for _ in range(ell):
        can_finish.append({u for v in can_finish[-1] for u in pred[v]})

    path = [i]

    def extend(weight, left):
        if left == 0:
            yield tuple(path), weight
            return
        for k in succ[path[-1]]:
            if k in can_finish[left - 1]:
                path.append(k)
                yield from extend(weight * a[path[-2], k], left - 1)
                path.pop()

    if i in can_finish[ell]:
        yield from extend(1.0, ell)


def enumerate_walks(W, ell: int, i: int, j: int, cap: int = DEFAULT_WALK_CAP) -> list[tuple[Walk, float]]:
    """All length-``ell`` walks from ``i`` to ``j`` with their weight products.

    Walks come out in lexicographic order of their node sequences. This is a
    brute-force oracle for small graphs; it raises BudgetExceeded once more
    than ``cap`` walks have been produced.
    """
    a = as_weight_matrix(W).entries
    n = a.shape[0]
    if ell < 1:
        raise InputError("walk length must be positive")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"endpoints ({i}, {j}) out of range for n={n}")
    out = []
    for nodes, weight in _walks(a, ell, i, j):
        if len(out) >= cap:
            raise BudgetExceeded(f"more than {cap} walks of length {ell} from {i} to {j}")
        out.append((Walk(nodes), weight))
    return out


def walk_sum(W, ell: int, i: int, j: int, cap: int = DEFAULT_WALK_CAP) -> float:
    return float(sum(w for _, w in enumerate_walks(W, ell, i, j, cap)))
