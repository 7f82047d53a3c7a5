"""float64 mirror of the exact matrix operations, for large instances.

Accuracy is whatever LAPACK delivers; this backend never backs verification,
it exists so that building W and solving against it stays fast at sizes where
exact arithmetic is impractical.
"""

from __future__ import annotations

import numpy as np

from .graphs import AnyGraph, Multigraph

__all__ = [
    "graph_matrix_array",
    "forest_matrix_array",
    "det_value",
    "cofactor_value",
    "accessibility_array",
    "charpoly_coeffs",
]


def graph_matrix_array(graph: AnyGraph) -> np.ndarray:
    """Laplacian / Kirchhoff matrix as a float64 array."""
    n = graph.n
    m = np.zeros((n, n))
    if isinstance(graph, Multigraph):
        for u, v, w in graph.edges:
            fw = float(w)
            m[u, v] -= fw
            m[v, u] -= fw
            m[u, u] += fw
            m[v, v] += fw
    else:
        for tail, head, w in graph.arcs:
            fw = float(w)
            m[head, tail] -= fw
            m[head, head] += fw
    return m


def forest_matrix_array(graph: AnyGraph, lam: float = 1.0) -> np.ndarray:
    return lam * np.eye(graph.n) + graph_matrix_array(graph)


def det_value(graph: AnyGraph, lam: float = 1.0) -> float:
    return float(np.linalg.det(forest_matrix_array(graph, lam)))


def cofactor_value(graph: AnyGraph, i: int, j: int, lam: float = 1.0) -> float:
    w = forest_matrix_array(graph, lam)
    n = w.shape[0]
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"cofactor index ({i}, {j}) out of range for n={n}")
    if n == 1:
        return 1.0
    minor = np.delete(np.delete(w, i, axis=0), j, axis=1)
    sign = -1.0 if (i + j) % 2 else 1.0
    return float(sign * np.linalg.det(minor))


def accessibility_array(graph: AnyGraph, lam: float = 1.0) -> np.ndarray:
    """Q = W**-1 by LU solve against the identity (partial pivoting)."""
    w = forest_matrix_array(graph, lam)
    return np.linalg.solve(w, np.eye(graph.n))


def charpoly_coeffs(graph: AnyGraph) -> np.ndarray:
    """Coefficients of det(lambda*I + L), constant term first."""
    n = graph.n
    if n == 0:
        return np.array([1.0])
    return np.poly(-graph_matrix_array(graph))[::-1].copy()
