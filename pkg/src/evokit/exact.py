"""Exact rational scalars and linear algebra.

Everything here works over Python's `fractions.Fraction`, so ranks,
determinants and solution sets are decided exactly.  All values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, FormatError, SingularMatrixError

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational written as optional sign, integer, optional "/" and
    positive integer (e.g. "-3/4", "7").  Anything else is a format error."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FormatError(f"not a rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise FormatError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`; round-trips bit-exactly."""
    return str(value)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise FormatError(f"cannot interpret {value!r} as a rational")


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix with entrywise exact equality."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise FormatError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(vector(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(tuple((Fraction(0),) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.col(j) for j in range(self.cols)))

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return Matrix(
            tuple(
                tuple(
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                        Fraction(0))
                    for j in range(other.cols)
                )
                for i in range(self.rows)
            )
        )

    def mat_vec(self, v: Sequence[Fraction]) -> Vector:
        if self.cols != len(v):
            raise DimensionMismatchError("matrix/vector size mismatch")
        return tuple(
            sum((row[j] * v[j] for j in range(self.cols)), Fraction(0)) for row in self.entries
        )

    def vec_mat(self, v: Sequence[Fraction]) -> Vector:
        """Left action v^T * M, returned as a plain vector."""
        if self.rows != len(v):
            raise DimensionMismatchError("vector/matrix size mismatch")
        return tuple(
            sum((v[i] * self.entries[i][j] for i in range(self.rows)), Fraction(0))
            for j in range(self.cols)
        )

    def augment(self, v: Sequence[Fraction]) -> "Matrix":
        if self.rows != len(v):
            raise DimensionMismatchError("augmentation length mismatch")
        return Matrix(tuple(row + (v[i],) for i, row in enumerate(self.entries)))

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.entries]


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns the unique RREF, the rank and the pivot columns (numbered
    from 1, matching the 1-based index convention used everywhere else).
    """
    rows = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c + 1)
        r += 1
        if r == nrows:
            break
    reduced = Matrix(tuple(tuple(row) for row in rows))
    return reduced, len(pivots), tuple(pivots)


class SolutionStatus(Enum):
    INCONSISTENT = "inconsistent"
    UNIQUE = "unique"
    AFFINE = "affine"


@dataclass(frozen=True)
class SolutionSet:
    """Exact affine description of the solutions of a linear system.

    Every solution has the form `particular + sum(c_i * basis_i)`.
    INCONSISTENT carries no particular vector; UNIQUE has an empty basis.
    """

    status: SolutionStatus
    particular: Vector | None
    nullspace_basis: tuple[Vector, ...]

    def contains_nonzero(self) -> bool:
        if self.status is SolutionStatus.INCONSISTENT:
            return False
        if self.nullspace_basis:
            # An affine set of dimension >= 1 meets {0} in at most one point.
            return True
        return not is_zero_vector(self.particular)

    def some_nonzero(self) -> Vector | None:
        if not self.contains_nonzero():
            return None
        if not is_zero_vector(self.particular):
            return self.particular
        return vec_add(self.particular, self.nullspace_basis[0])


def _nullspace_from_rref(reduced: Matrix, pivots: tuple[int, ...], ncols: int) -> tuple[Vector, ...]:
    pivot_cols = [p - 1 for p in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivot_cols):
            v[pc] = -reduced.entries[r][free]
        basis.append(tuple(v))
    return tuple(basis)


def solve_linear(a: Matrix, b: Sequence[Fraction]) -> SolutionSet:
    """Exact description of {x : a @ x = b}.  Inconsistency is a value."""
    if a.rows != len(b):
        raise DimensionMismatchError("right-hand side length must equal row count")
    ncols = a.cols
    reduced_aug, _, aug_pivots = rref(a.augment(tuple(b)))
    if (ncols + 1) in aug_pivots:
        return SolutionSet(SolutionStatus.INCONSISTENT, None, ())
    pivots = aug_pivots
    particular = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        particular[p - 1] = reduced_aug.entries[r][ncols]
    reduced = Matrix(tuple(row[:ncols] for row in reduced_aug.entries))
    basis = _nullspace_from_rref(reduced, pivots, ncols)
    status = SolutionStatus.UNIQUE if not basis else SolutionStatus.AFFINE
    return SolutionSet(status, tuple(particular), basis)


def invert(a: Matrix) -> Matrix:
    """Inverse of a square matrix; raises SingularMatrixError on rank deficiency."""
    if not a.is_square:
        raise DimensionMismatchError("only square matrices can be inverted")
    n = a.rows
    augmented = Matrix(tuple(a.entries[i] + Matrix.identity(n).entries[i] for i in range(n)))
    reduced, rank, _ = rref(augmented)
    if rank < n or any(reduced.entries[i][i] != 1 for i in range(n)):
        raise SingularMatrixError("matrix is singular")
    left = Matrix(tuple(row[:n] for row in reduced.entries))
    if left != Matrix.identity(n):
        raise SingularMatrixError("matrix is singular")
    return Matrix(tuple(row[n:] for row in reduced.entries))


def determinant(a: Matrix) -> Fraction:
    if not a.is_square:
        raise DimensionMismatchError("determinant needs a square matrix")
    rows = [list(r) for r in a.entries]
    n = a.rows
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        det *= rows[c][c]
        inv = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = rows[i][c] * inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[c])]
    return det


@dataclass(frozen=True)
class Subspace:
    """Linear subspace stored by its canonical RREF basis.

    The canonical basis makes equality a structural comparison, which is
    what the power-chain stabilisation checks rely on.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return subspace_span([row for row in Matrix.identity(ambient_dim).entries])

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector has wrong ambient dimension")
        residue = list(v)
        for b in self.basis:
            lead = next(j for j in range(self.ambient_dim) if b[j] != 0)
            if residue[lead] != 0:
                factor = residue[lead]
                residue = [x - factor * y for x, y in zip(residue, b)]
        return all(x == 0 for x in residue)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(self.contains_vector(b) for b in other.basis)


def subspace_span(vectors: Sequence[Sequence[Fraction]], ambient_dim: int | None = None) -> Subspace:
    """Span of the given vectors with a canonical RREF basis."""
    vecs = [tuple(v) for v in vectors]
    if ambient_dim is None:
        if not vecs:
            raise DimensionMismatchError("empty span needs an explicit ambient dimension")
        ambient_dim = len(vecs[0])
    if any(len(v) != ambient_dim for v in vecs):
        raise DimensionMismatchError("vectors of mixed length")
    if not vecs:
        return Subspace(ambient_dim, ())
    reduced, rank, _ = rref(Matrix.from_rows(vecs))
    return Subspace(ambient_dim, tuple(reduced.entries[i] for i in range(rank)))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    return subspace_span(list(a.basis) + list(b.basis), a.ambient_dim)


def solve_integer_linear(rows: list[list[int]], rhs: list[int]):
    """Solve A x = rhs over the integers.

    Returns ("ok", x) with one integer solution (free variables pinned to
    zero), ("inconsistent",) when there is no rational solution, and
    ("nonintegral",) when rational solutions exist but none is integral.
    Diagonalisation by elementary row and column operations; column
    operations are tracked so the solution can be mapped back.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [row[:] for row in rows]
    b = list(rhs)
    # col_ops[j] holds column j of the accumulated column-operation matrix V.
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        b[i], b[j] = b[j], b[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        b[dst] -= q * b[src]

    def add_col(src, dst, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    r = 0
    while r < min(m, n):
        candidates = [
            (abs(a[i][j]), i, j)
            for i in range(r, m)
            for j in range(r, n)
            if a[i][j] != 0
        ]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        swap_rows(r, pi)
        swap_cols(r, pj)
        if a[r][r] < 0:
            a[r] = [-x for x in a[r]]
            b[r] = -b[r]
        clean = True
        for i in range(m):
            if i != r and a[i][r] != 0:
                q = a[i][r] // a[r][r]
                add_row(r, i, q)
                if a[i][r] != 0:
                    clean = False
        for j in range(n):
            if a[r][j] != 0 and j != r:
                q = a[r][j] // a[r][r]
                add_col(r, j, q)
                if a[r][j] != 0:
                    clean = False
        if clean:
            r += 1

    y = [0] * n
    for i in range(m):
        d = a[i][i] if i < n else 0
        if d != 0:
            if b[i] % d != 0:
                return ("nonintegral",)
            y[i] = b[i] // d
        elif b[i] != 0:
            return ("inconsistent",)
    x = [sum(v[i][j] * y[j] for j in range(n)) for i in range(n)]
    return ("ok", x)
