"""Dense exact-rational linear algebra.

Everything here works over the field of rationals with no tolerances: row
reduction, kernels, subspace sums/intersections, direct-sum tests, quotient
projections, and determinants.  Subspaces are kept in a canonical form (the
reduced row echelon basis), so subspace equality is plain entry-wise
comparison.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

__all__ = [
    "Matrix",
    "Subspace",
    "determinant",
    "is_direct_sum",
    "kernel_basis",
    "quotient_projection",
    "rref",
    "solve",
    "subspace_intersection",
    "subspace_sum",
]

Vector = tuple[Fraction, ...]


class Matrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Fraction | int]], cols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("rows of unequal length")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction | int]], rows: int | None = None) -> Matrix:
        if not columns:
            if rows is None:
                raise ValueError("a matrix with no columns needs an explicit row count")
            return cls([[] for _ in range(rows)], cols=0)
        return cls(list(zip(*columns)), cols=len(columns))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> Matrix:
        return Matrix.from_columns(self.entries, rows=self.cols)

    def mul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        cols = other.transpose().entries
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries],
            cols=other.cols,
        )

    def apply(self, vec: Sequence[Fraction | int]) -> Vector:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in row] for row in self.entries]})"


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns, exactly."""
    a = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        lead = a[r][c]
        if lead != 1:
            a[r] = [x / lead for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(a, cols=m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """Linear subspace of QQ^n, held as a canonical RREF basis.

    Two equal subspaces always have byte-identical bases, so ``==`` decides
    subspace equality.  Construct through :meth:`from_vectors` unless the
    rows are already canonical.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence[Fraction | int]] = ()):
        rows = tuple(tuple(Fraction(x) for x in row) for row in basis)
        last_pivot = -1
        for i, row in enumerate(rows):
            if len(row) != ambient_dim:
                raise ValueError("basis vector length does not match ambient dimension")
            lead = next((j for j, x in enumerate(row) if x != 0), None)
            if lead is None or lead <= last_pivot or row[lead] != 1:
                raise ValueError("basis is not in reduced row echelon form")
            if any(other[lead] != 0 for k, other in enumerate(rows) if k != i):
                raise ValueError("basis is not in reduced row echelon form")
            last_pivot = lead
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[Fraction | int]], ambient_dim: int) -> Subspace:
        reduced, pivots = rref(Matrix(list(vectors), cols=ambient_dim))
        return cls(ambient_dim, reduced.entries[: len(pivots)])

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.basis, cols=self.ambient_dim)

    def contains(self, vector: Sequence[Fraction | int]) -> bool:
        v = [Fraction(x) for x in vector]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x != 0)
            if v[lead] != 0:
                f = v[lead]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the right kernel {v : m v = 0}."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        vectors.append(v)
    return Subspace.from_vectors(vectors, m.cols)


def solve(m: Matrix, rhs: Sequence[Fraction | int]) -> Vector | None:
    """One exact solution of m x = rhs, or None if the system is inconsistent.

    Free variables are set to zero, so the result is the minimum-support
    solution produced by the row reduction.
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = Matrix(
        [tuple(row) + (Fraction(x),) for row, x in zip(m.entries, rhs)],
        cols=m.cols + 1,
    )
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entries[r][m.cols]
    return tuple(x)


def _annihilator(s: Subspace) -> Subspace:
    # All w with <w, v> = 0 for every v in s; over QQ, (s^perp)^perp = s.
    return kernel_basis(Matrix(s.basis, cols=s.ambient_dim))


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.from_vectors(a.basis + b.basis, a.ambient_dim)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Canonical basis of a ∩ b, via the kernel of the stacked constraints."""
    _check_same_ambient(a, b)
    constraints = _annihilator(a).basis + _annihilator(b).basis
    return kernel_basis(Matrix(constraints, cols=a.ambient_dim))


def is_direct_sum(parts: Sequence[Subspace], whole: Subspace) -> bool:
    """True iff the parts are independent and together span the whole space."""
    total = Subspace.zero(whole.ambient_dim)
    for part in parts:
        _check_same_ambient(part, whole)
        total = subspace_sum(total, part)
    return sum(part.dim for part in parts) == whole.dim and total == whole


def quotient_projection(relations: Subspace) -> Matrix:
    """Matrix of the quotient map QQ^n -> QQ^n / relations.

    The complement is the span of the coordinates that are not pivots of the
    relations' RREF basis; the returned matrix P has kernel exactly
    ``relations`` and satisfies P restricted to the complement = identity.
    """
    n = relations.ambient_dim
    pivots = [next(j for j, x in enumerate(row) if x != 0) for row in relations.basis]
    free = [c for c in range(n) if c not in pivots]
    rows = []
    for f in free:
        row = [Fraction(0)] * n
        row[f] = Fraction(1)
        for r, p in enumerate(pivots):
            row[p] = -relations.basis[r][f]
        rows.append(row)
    return Matrix(rows, cols=n)


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det
