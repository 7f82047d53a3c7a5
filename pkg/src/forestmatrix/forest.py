"""Forest-matrix operations on weighted multigraphs and multidigraphs.

The central object is W = lambda*I + L, where L is the Laplacian (undirected)
or Kirchhoff (directed) matrix. det W at lambda = 1 is the total weight of
spanning rooted / diverging forests, the (i, j) cofactor is the weight of the
forests joining j into i's tree, and Q = W**-1 is the relative
forest-accessibility matrix. Everything here is exact; the enumeration-based
counterparts live in `oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import oracle
from .graphs import (
    AnyGraph,
    Multidigraph,
    Multigraph,
    kirchhoff,
    laplacian,
)
from .linalg import (
    Polynomial,
    SingularMatrixError,
    SquareMatrix,
    as_rational,
    surviving_index,
)
from .oracle import DEFAULT_GUARD, Guard

__all__ = [
    "SingularForestMatrixError",
    "ForestMatrixReport",
    "AccessibilityMatrix",
    "MatrixTreeReport",
    "graph_matrix",
    "forest_matrix",
    "forest_matrix_report",
    "forest_det",
    "forest_cofactor",
    "accessibility",
    "charpoly_forest_coeffs",
    "cofactor_poly",
    "signed_cofactor_poly",
    "path_expansion_cofactor",
    "matrix_tree_check",
    "forest_minor",
]


class SingularForestMatrixError(SingularMatrixError):
    """W is singular: the total spanning-forest weight is zero.

    Possible only when some weights are negative or zero; with positive
    weights det W is a sum of positive forest weights.
    """


def graph_matrix(graph: AnyGraph) -> SquareMatrix:
    """The graph's Laplacian (undirected) or Kirchhoff (directed) matrix."""
    if isinstance(graph, Multigraph):
        return laplacian(graph)
    return kirchhoff(graph)


def forest_matrix(matrix: SquareMatrix, lam=1) -> SquareMatrix:
    """lambda*I + matrix."""
    return SquareMatrix.identity(matrix.n).scaled(as_rational(lam)) + matrix


@dataclass(frozen=True)
class ForestMatrixReport:
    """W at a given lambda together with its determinant."""

    matrix: SquareMatrix
    det: Fraction
    lam: Fraction


def forest_matrix_report(graph: AnyGraph, lam=1) -> ForestMatrixReport:
    lam = as_rational(lam)
    w = forest_matrix(graph_matrix(graph), lam)
    return ForestMatrixReport(w, w.det(), lam)


def forest_det(graph: AnyGraph, lam=1) -> Fraction:
    """det(lambda*I + L); at lambda = 1 this is the total spanning-forest weight."""
    return forest_matrix(graph_matrix(graph), lam).det()


def forest_cofactor(graph: AnyGraph, i: int, j: int, lam=1) -> Fraction:
    """Cofactor of entry (i, j) of lambda*I + L.

    At lambda = 1: the weight of spanning forests in which i and j share a
    tree rooted at / diverging from i. Symmetric in i and j for undirected
    input.
    """
    return forest_matrix(graph_matrix(graph), lam).cofactor(i, j)


@dataclass(frozen=True)
class AccessibilityMatrix:
    """Q = W**-1; row sums are exactly 1, and Q is symmetric for undirected input."""

    matrix: SquareMatrix


def accessibility(graph: AnyGraph, lam=1) -> AccessibilityMatrix:
    """Relative forest-accessibility matrix Q = (lambda*I + L)**-1, exact.

    Entry (i, j) is the fraction of total forest weight carried by the
    forests connecting i into the tree of j. Raises
    SingularForestMatrixError when the total forest weight is zero.
    """
    w = forest_matrix(graph_matrix(graph), lam)
    try:
        return AccessibilityMatrix(w.inverse())
    except SingularMatrixError:
        raise SingularForestMatrixError(
            "total spanning-forest weight is zero; the accessibility matrix does not exist"
        ) from None


def charpoly_forest_coeffs(graph: AnyGraph) -> Polynomial:
    """Coefficients of det(lambda*I + L), constant first.

    Coefficient k is the total weight of spanning forests with exactly k
    trees (summed over every k-subset of root vertices); the constant term is
    det L (always zero for a graph matrix) and the leading coefficient is 1.
    """
    return graph_matrix(graph).char_poly()


def _cofactor_poly_of(matrix: SquareMatrix, i: int, j: int) -> Polynomial:
    """Cofactor of (i, j) in lambda*I + matrix as a degree n-1 coefficient list.

    Coefficient k sums, over every size-k subset phi of the other indices,
    the cofactor taken inside the submatrix with phi deleted at the entry
    that was (i, j); for i == j that inner cofactor is the principal minor
    with phi and i deleted. surviving_index owns the index remap.
    """
    n = matrix.n
    for v in (i, j):
        if not (0 <= v < n):
            raise IndexError(f"index {v} out of range for n={n}")
    others = [v for v in range(n) if v != i and v != j]
    coeffs = [Fraction(0)] * n
    for k in range(len(others) + 1):
        for phi in combinations(others, k):
            if i == j:
                coeffs[k] += matrix.delete_rows_cols(phi + (i,)).det()
            else:
                sub = matrix.delete_rows_cols(phi)
                coeffs[k] += sub.cofactor(surviving_index(i, phi), surviving_index(j, phi))
    return Polynomial(tuple(coeffs))


def cofactor_poly(graph: AnyGraph, i: int, j: int) -> Polynomial:
    """The cofactor of (i, j) in lambda*I + L as a polynomial in lambda.

    Evaluating at 1 gives forest_cofactor; coefficient k is the weight of the
    forests with k+1 trees that join j into i's tree (i among the roots).
    """
    return _cofactor_poly_of(graph_matrix(graph), i, j)


def signed_cofactor_poly(graph: AnyGraph, i: int, j: int) -> Polynomial:
    """The cofactor of (i, j) in lambda*I - L as a polynomial in lambda.

    A forest counted in coefficient k of cofactor_poly has k+1 trees, hence
    exactly n-1-k arcs, so flipping each coefficient by (-1)**(n-1-k) is the
    same as weighting every forest by (-1)**(number of arcs). Arranged as a
    matrix (transposed), these polynomials form the adjugate of the
    characteristic matrix of L.
    """
    base = cofactor_poly(graph, i, j)
    n = graph.n
    return Polynomial(
        tuple(c if (n - 1 - k) % 2 == 0 else -c for k, c in enumerate(base.coeffs))
    )


def path_expansion_cofactor(
    matrix: SquareMatrix, i: int, j: int, guard: Guard = DEFAULT_GUARD
) -> Fraction:
    """Cofactor of (i, j), i != j, via simple-path expansion.

    The companion digraph has an arc c -> r of weight -matrix[r, c] for every
    nonzero off-diagonal entry; the cofactor is the sum over simple paths
    i -> j of the path weight times det(matrix with the path's vertices
    deleted). The digraph is built here from the matrix rather than accepted
    from the caller, because the required correspondence is easy to violate
    silently. Undefined (and rejected) for i == j.
    """
    n = matrix.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"index ({i}, {j}) out of range for n={n}")
    if i == j:
        raise ValueError("path expansion is only valid for i != j")
    arcs = [
        (c, r, -matrix.entries[r][c])
        for r in range(n)
        for c in range(n)
        if r != c and matrix.entries[r][c] != 0
    ]
    companion = Multidigraph(n, tuple(arcs))
    total = Fraction(0)
    for p in oracle.enum_paths(companion, i, j, guard):
        total += oracle.weight_of(p.arcs, companion) * matrix.delete_rows_cols(p.vertices).det()
    return total


@dataclass(frozen=True)
class MatrixTreeReport:
    """Cofactor grid of L against the enumerated spanning-tree weights.

    Undirected: all n**2 cofactors must equal the total spanning-tree weight.
    Directed: cofactors are constant along each row i and equal the weight of
    trees diverging from i; tree_weights[i] is the row-i enumeration total
    (undirected reports repeat the single total n times).
    """

    directed: bool
    cofactors: SquareMatrix
    tree_weights: tuple[Fraction, ...]

    @property
    def cofactors_constant(self) -> bool:
        """Constancy pattern of the grid: per row, and across rows if undirected."""
        rows_ok = all(len(set(row)) == 1 for row in self.cofactors.entries)
        if self.directed or not rows_ok:
            return rows_ok
        return len({row[0] for row in self.cofactors.entries}) == 1

    @property
    def matches_enumeration(self) -> bool:
        return all(
            x == self.tree_weights[i]
            for i, row in enumerate(self.cofactors.entries)
            for x in row
        )

    @property
    def passed(self) -> bool:
        return self.cofactors_constant and self.matches_enumeration


def matrix_tree_check(graph: AnyGraph, guard: Guard = DEFAULT_GUARD) -> MatrixTreeReport:
    """Check every cofactor of L against the brute-force spanning-tree weights."""
    m = graph_matrix(graph)
    if m.n == 0:
        raise ValueError("matrix-tree check needs at least one vertex")
    grid = SquareMatrix(
        tuple(tuple(m.cofactor(i, j) for j in range(m.n)) for i in range(m.n))
    )
    if isinstance(graph, Multidigraph):
        weights = tuple(
            oracle.set_weight(
                (t.arcs for t in oracle.enum_diverging_trees(graph, i, guard)), graph
            )
            for i in range(graph.n)
        )
        return MatrixTreeReport(True, grid, weights)
    total = oracle.set_weight(oracle.enum_spanning_trees(graph, guard), graph)
    return MatrixTreeReport(False, grid, (total,) * graph.n)


def forest_minor(graph: AnyGraph, vertices) -> Fraction:
    """det of L with the given rows/columns deleted.

    Equals the total weight of spanning forests whose root set is exactly the
    deleted vertex set; the empty set returns det L itself and deleting all
    vertices returns 1 (empty-matrix convention).
    """
    return graph_matrix(graph).delete_rows_cols(vertices).det()
