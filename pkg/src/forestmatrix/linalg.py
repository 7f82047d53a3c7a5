"""Exact dense linear algebra over rational scalars.

Every scalar is a `fractions.Fraction`, so all results are exact and always
in canonical form (positive denominator, fully reduced). Matrices are small
and dense by design; the determinant uses fraction-free elimination so that
intermediate values stay integral instead of blowing up as unreduced
fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable

__all__ = [
    "Rational",
    "SingularMatrixError",
    "SquareMatrix",
    "Polynomial",
    "as_rational",
    "surviving_index",
]

# All exact scalars in this package are plain fractions.
Rational = Fraction


class SingularMatrixError(ZeroDivisionError):
    """An exact inverse was requested for a matrix with zero determinant."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and exact literal strings ("3", "1/2", "0.25").

    Floats are refused: a binary float is almost never the number the caller
    wrote down, and silently converting one would poison exact results.
    """
    if isinstance(value, float):
        raise TypeError(
            f"refusing inexact float {value!r}; pass an int, Fraction or string"
        )
    if type(value) is Fraction:
        return value
    return Fraction(value)


def surviving_index(index: int, removed: Iterable[int]) -> int:
    """Position of `index` in a matrix after the rows/columns in `removed` are deleted.

    Single authority for the index remap used when a cofactor has to be taken
    "at the entry that was (i, j)" inside a submatrix.
    """
    kept = index
    for r in set(removed):
        if r == index:
            raise ValueError(f"index {index} was itself deleted")
        if r < index:
            kept -= 1
    return kept


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable dense n-by-n matrix of exact rationals (n = 0 permitted)."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError(f"matrix is not square: {len(row)} != {len(rows)}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "SquareMatrix":
        zero = Fraction(0)
        return cls(tuple((zero,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._same_size(other)
        return SquareMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._same_size(other)
        return SquareMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._same_size(other)
        cols = tuple(zip(*other.entries)) if other.n else ()
        return SquareMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def scaled(self, factor) -> "SquareMatrix":
        c = as_rational(factor)
        return SquareMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.entries))) if self.n else self

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.n)), Fraction(0))

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.entries)

    def is_symmetric(self) -> bool:
        return self.entries == self.transpose().entries

    def _same_size(self, other: "SquareMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    # -- determinant and friends -------------------------------------------

    def det(self) -> Fraction:
        """Exact determinant; the empty matrix has determinant 1.

        Each row is scaled integer by its denominator lcm (the accumulated
        factor is divided back out at the end), then reduced by fraction-free
        Bareiss elimination: every interior division is exact, which keeps
        intermediate entries at the size of actual minors.
        """
        n = self.n
        if n == 0:
            return Fraction(1)
        scale = 1
        rows: list[list[int]] = []
        for row in self.entries:
            mult = lcm(*(x.denominator for x in row))
            scale *= mult
            rows.append([int(x * mult) for x in row])

        sign = 1
        prev = 1
        for k in range(n - 1):
            if rows[k][k] == 0:
                pivot = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
                if pivot is None:
                    return Fraction(0)
                rows[k], rows[pivot] = rows[pivot], rows[k]
                sign = -sign
            pkk = rows[k][k]
            rk = rows[k]
            for i in range(k + 1, n):
                ri = rows[i]
                rik = ri[k]
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * pkk - rik * rk[j]) // prev
                ri[k] = 0
            prev = pkk
        return Fraction(sign * rows[n - 1][n - 1], scale)

    def cofactor(self, i: int, j: int) -> Fraction:
        """Signed minor (-1)**(i+j) * det(self without row i and column j).

        A 1-by-1 matrix has cofactor 1 (the minor is the empty matrix).
        """
        n = self.n
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"cofactor index ({i}, {j}) out of range for n={n}")
        minor = SquareMatrix(
            tuple(
                tuple(x for c, x in enumerate(row) if c != j)
                for r, row in enumerate(self.entries)
                if r != i
            )
        )
        sign = -1 if (i + j) % 2 else 1
        return sign * minor.det()

    def adjugate(self) -> "SquareMatrix":
        """Transposed cofactor matrix; satisfies self @ adjugate == det * I.

        Built from the n**2 cofactors for small or singular matrices (the
        cofactor route works even when det == 0); larger nonsingular matrices
        go through inverse() * det, which is one elimination instead of n**2.
        """
        n = self.n
        if n == 0:
            raise ValueError("adjugate is undefined for the empty matrix")
        if n > 12:
            d = self.det()
            if d != 0:
                return self.inverse().scaled(d)
        return SquareMatrix(
            tuple(tuple(self.cofactor(j, i) for j in range(n)) for i in range(n))
        )

    def inverse(self) -> "SquareMatrix":
        """Exact inverse via Gauss-Jordan elimination.

        Raises SingularMatrixError when det == 0.
        """
        n = self.n
        work = [list(row) for row in self.entries]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                inv[col], inv[pivot] = inv[pivot], inv[col]
            p = work[col][col]
            work[col] = [x / p for x in work[col]]
            inv[col] = [x / p for x in inv[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                    inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
        return SquareMatrix(tuple(tuple(row) for row in inv))

    def delete_rows_cols(self, indices: Iterable[int]) -> "SquareMatrix":
        """Submatrix with the given rows AND columns removed, survivor order kept."""
        removed = set(indices)
        for r in removed:
            if not (0 <= r < self.n):
                raise IndexError(f"index {r} out of range for n={self.n}")
        kept = [i for i in range(self.n) if i not in removed]
        return SquareMatrix(
            tuple(tuple(self.entries[r][c] for c in kept) for r in kept)
        )

    def char_poly(self) -> Polynomial:
        """Coefficients of det(x*I + self), constant term first; leading coefficient 1.

        Computed by the Faddeev-LeVerrier recurrence (trace of matrix powers
        with exact division by the step index), which is independent of the
        subset-minor route exposed as principal_minor_sum.
        """
        n = self.n
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        a = -self
        m = SquareMatrix.identity(n)
        for k in range(1, n + 1):
            m = a @ m
            c = -m.trace() / k
            coeffs[n - k] = c
            m = m + SquareMatrix.identity(n).scaled(c)
        return Polynomial(tuple(coeffs))

    def principal_minor_sum(self, k: int) -> Fraction:
        """Sum of det(self with every size-k index subset deleted).

        Equals coefficient k of char_poly(); k = n gives the empty-matrix
        convention det = 1.
        """
        n = self.n
        if not (0 <= k <= n):
            raise ValueError(f"k={k} out of range 0..{n}")
        total = Fraction(0)
        for gone in combinations(range(n), k):
            total += self.delete_rows_cols(gone).det()
        return total


@dataclass(frozen=True)
class Polynomial:
    """Coefficient sequence, low degree first: coeffs[k] multiplies x**k.

    Trailing zeros are kept; the declared degree is always len(coeffs) - 1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x) -> Fraction:
        point = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc
