"""Exact linear algebra over cyclotomic fields."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import ONE, ZERO, Cyclotomic, as_cyclotomic
from .exceptions import DivisionByZero

Vector = tuple[Cyclotomic, ...]
Entry = Cyclotomic | int | Fraction


def vector(values: Iterable[Entry]) -> Vector:
    """Build a vector of Cyclotomic entries."""
    return tuple(as_cyclotomic(v) for v in values)


def dot(u: Sequence[Cyclotomic], w: Sequence[Cyclotomic]) -> Cyclotomic:
    """Return the bilinear pairing sum u_i w_i (no conjugation)."""
    total = ZERO
    for a, b in zip(u, w, strict=True):
        if a and b:
            total = total + a * b
    return total


@dataclass(frozen=True, slots=True)
class Matrix:
    """Square or rectangular matrix of cyclotomic numbers."""

    rows: tuple[Vector, ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable[Entry]]) -> Matrix:
        """Build a matrix from nested iterables of scalars."""
        return cls(tuple(vector(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        """Return the n x n identity matrix."""
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> Matrix:
        """Return an n x m zero matrix."""
        return cls(tuple(tuple(ZERO for _ in range(n if m is None else m)) for _ in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Cyclotomic]]) -> Matrix:
        """Build a matrix whose columns are the given vectors."""
        return cls(tuple(tuple(col[i] for col in columns) for i in range(len(columns[0]))))

    @property
    def dim(self) -> int:
        """Return the number of rows."""
        return len(self.rows)

    @property
    def ncols(self) -> int:
        """Return the number of columns."""
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, index: int) -> Vector:
        return self.rows[index]

    def column(self, j: int) -> Vector:
        """Return column j."""
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> Matrix:
        """Return the transpose."""
        return Matrix(tuple(zip(*self.rows, strict=True)))

    def conjugate_transpose(self) -> Matrix:
        """Return the conjugate transpose."""
        return Matrix(tuple(tuple(x.conjugate() for x in col) for col in zip(*self.rows, strict=True)))

    def __matmul__(self, other: Matrix) -> Matrix:
        columns = [other.column(j) for j in range(other.ncols)]
        return Matrix(tuple(tuple(dot(row, col) for col in columns) for row in self.rows))

    def apply(self, v: Sequence[Cyclotomic]) -> Vector:
        """Return the matrix-vector product."""
        return tuple(dot(row, v) for row in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(r, s, strict=True))
                for r, s in zip(self.rows, other.rows, strict=True)
            )
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, factor: Entry) -> Matrix:
        """Multiply every entry by a scalar."""
        return Matrix(tuple(tuple(a * factor for a in row) for row in self.rows))

    def is_zero(self) -> bool:
        """Return whether every entry vanishes."""
        return not any(a for row in self.rows for a in row)

    def is_skew(self) -> bool:
        """Return whether the matrix equals minus its transpose."""
        n = self.dim
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    def trace(self) -> Cyclotomic:
        """Return the trace."""
        total = ZERO
        for i, row in enumerate(self.rows):
            total = total + row[i]
        return total

    def det(self) -> Cyclotomic:
        """Return the determinant by Gaussian elimination."""
        work = [list(row) for row in self.rows]
        n = len(work)
        result = ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if work[i][c]), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                work[c], work[pivot] = work[pivot], work[c]
                result = -result
            lead = work[c][c]
            result = result * lead
            inv = lead.inverse()
            for i in range(c + 1, n):
                if work[i][c]:
                    factor = work[i][c] * inv
                    work[i] = [a - factor * b for a, b in zip(work[i], work[c], strict=True)]
        return result

    def inverse(self) -> Matrix:
        """Return the inverse matrix."""
        n = self.dim
        augmented = [
            (*row, *(ONE if i == j else ZERO for j in range(n))) for i, row in enumerate(self.rows)
        ]
        reduced, pivots = rref(augmented)
        if pivots[:n] != tuple(range(n)) or len(reduced) < n:
            raise DivisionByZero("matrix is singular")
        return Matrix(tuple(tuple(row[n:]) for row in reduced))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.rows)


def rref(rows: Sequence[Sequence[Cyclotomic]]) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Return the nonzero rows of the reduced row echelon form and the pivot columns."""
    work = [list(row) for row in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [a * inv for a in work[r]]
        for i, row in enumerate(work):
            if i != r and row[c]:
                factor = row[c]
                work[i] = [a - factor * b for a, b in zip(row, work[r], strict=True)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[Cyclotomic]]) -> int:
    """Return the rank of a list of row vectors."""
    return len(rref(rows)[0])


def kernel(matrix: Matrix) -> tuple[Vector, ...]:
    """Return a basis of the null space of the matrix."""
    reduced, pivots = rref(matrix.rows)
    ncols = matrix.ncols
    basis: list[Vector] = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(reduced, pivots, strict=True):
            v[p] = -row[free]
        basis.append(tuple(v))
    return tuple(basis)


def column_space(matrix: Matrix) -> tuple[Vector, ...]:
    """Return a canonical basis of the column space."""
    return rref(matrix.transpose().rows)[0]


def solve(matrix: Matrix, b: Sequence[Cyclotomic]) -> Vector:
    """Solve matrix @ x = b for an invertible square matrix."""
    n = matrix.dim
    augmented = [(*row, b[i]) for i, row in enumerate(matrix.rows)]
    reduced, pivots = rref(augmented)
    if pivots != tuple(range(n)):
        raise DivisionByZero("matrix is singular")
    return tuple(row[n] for row in reduced)


@dataclass(frozen=True, slots=True)
class Subspace:
    """Subspace of an n-dimensional space with a canonical (RREF) basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence[Cyclotomic]]) -> Subspace:
        """Return the span of the vectors in canonical form."""
        return cls(ambient_dim, rref(vectors)[0])

    @property
    def dim(self) -> int:
        """Return the dimension."""
        return len(self.basis)

    def contains(self, v: Sequence[Cyclotomic]) -> bool:
        """Return whether v lies in the subspace."""
        return rank([*self.basis, tuple(v)]) == self.dim


def sparse_rank(vectors: Iterable[Mapping[Hashable, Cyclotomic]]) -> int:
    """Return the rank of sparse vectors keyed by orderable coordinates."""
    pivots: dict = {}
    result = 0
    for vec in vectors:
        row = {k: v for k, v in vec.items() if v}
        while row:
            key = min(row)
            pivot = pivots.get(key)
            if pivot is None:
                inv = row[key].inverse()
                pivots[key] = {k: v * inv for k, v in row.items()}
                result += 1
                break
            factor = row[key]
            for k, v in pivot.items():
                value = row.get(k, ZERO) - factor * v
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
    return result
