"""Structure-constant tensors, linear forms and the sup-norm distance.

A cubic tensor holds the scalars g[i,j,k] defining a multiplication
e_i e_j = sum_k g[i,j,k] e_k on an n-dimensional space.  Indices are
1-based throughout; absent entries are zero.  Storage is sparse because
the algebras of interest are overwhelmingly zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, IndexRangeError
from .exact import Matrix, Vector, as_fraction, invert

GammaKey = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class CubicTensor:
    """Sparse cubic tensor of structure constants, the central data model."""

    dim: int
    gamma: Mapping[GammaKey, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise IndexRangeError("dimension must be at least 1")
        cleaned: dict[GammaKey, Fraction] = {}
        for (i, j, k), value in self.gamma.items():
            if not all(1 <= t <= self.dim for t in (i, j, k)):
                raise IndexRangeError(f"index {(i, j, k)} outside 1..{self.dim}")
            coeff = as_fraction(value)
            if coeff != 0:
                cleaned[(i, j, k)] = coeff
        object.__setattr__(self, "gamma", dict(sorted(cleaned.items())))

    def get(self, i: int, j: int, k: int) -> Fraction:
        return self.gamma.get((i, j, k), Fraction(0))

    def entries(self) -> Iterable[tuple[GammaKey, Fraction]]:
        return self.gamma.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubicTensor):
            return NotImplemented
        return self.dim == other.dim and self.gamma == other.gamma

    def is_zero(self) -> bool:
        return not self.gamma


def tensor_from_products(dim: int, products: Iterable[tuple[int, int, Sequence]]) -> CubicTensor:
    """Build a tensor from a list of (i, j, coefficient-vector) products.

    Unlisted products are zero; the k-th coefficient of the (i, j) entry
    becomes g[i,j,k].
    """
    gamma: dict[GammaKey, Fraction] = {}
    for i, j, coeffs in products:
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise IndexRangeError(f"product index {(i, j)} outside 1..{dim}")
        coeffs = list(coeffs)
        if len(coeffs) != dim:
            raise DimensionMismatchError(
                f"coefficient vector for {(i, j)} has length {len(coeffs)}, expected {dim}"
            )
        for k, value in enumerate(coeffs, start=1):
            coeff = as_fraction(value)
            if coeff != 0:
                gamma[(i, j, k)] = coeff
    return CubicTensor(dim, gamma)


def apply_basis_change(t: CubicTensor, p: Matrix) -> CubicTensor:
    """Structure constants of the same multiplication in the basis
    e'_i = sum_a p[i][a] e_a.

    g'[i,j,d] = sum over (a,b,c) of p[i][a] p[j][b] g[a,b,c] pinv[c][d].
    """
    n = t.dim
    if not p.is_square or p.rows != n:
        raise DimensionMismatchError("basis-change matrix must be square of the tensor's dimension")
    pinv = invert(p)
    gamma: dict[GammaKey, Fraction] = {}
    for (a, b, c), value in t.entries():
        for i in range(1, n + 1):
            pia = p.entries[i - 1][a - 1]
            if pia == 0:
                continue
            for j in range(1, n + 1):
                pjb = p.entries[j - 1][b - 1]
                if pjb == 0:
                    continue
                scale = pia * pjb * value
                for d in range(1, n + 1):
                    w = pinv.entries[c - 1][d - 1]
                    if w == 0:
                        continue
                    key = (i, j, d)
                    gamma[key] = gamma.get(key, Fraction(0)) + scale * w
    return CubicTensor(n, gamma)


def sup_distance(a: CubicTensor, b: CubicTensor) -> Fraction:
    """Sup-norm distance max |g_a - g_b| over all index triples.

    Algebra b is an eps-approximation of a exactly when the result is
    at most eps; the definition is symmetric in a and b.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError("tensors have different dimensions")
    keys = set(a.gamma) | set(b.gamma)
    best = Fraction(0)
    for key in keys:
        diff = abs(a.gamma.get(key, Fraction(0)) - b.gamma.get(key, Fraction(0)))
        if diff > best:
            best = diff
    return best


LinearForm = tuple[Fraction, ...]
"""Degree-1 form in x_1..x_n, stored as its coefficient vector."""


def form_is_zero(form: LinearForm) -> bool:
    return all(c == 0 for c in form)


def form_to_string(form: LinearForm) -> str:
    terms = []
    for i, c in enumerate(form, start=1):
        if c == 0:
            continue
        if c == 1:
            terms.append(f"x{i}")
        elif c == -1:
            terms.append(f"-x{i}")
        else:
            terms.append(f"{c}*x{i}")
    if not terms:
        return "0"
    rendered = terms[0]
    for term in terms[1:]:
        rendered += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return rendered


@dataclass(frozen=True)
class LinearFormMatrix:
    """Square grid of linear forms; specialising at a point yields a Matrix."""

    dim: int
    forms: tuple[tuple[LinearForm, ...], ...]

    def __post_init__(self):
        canonical = tuple(tuple(tuple(form) for form in row) for row in self.forms)
        object.__setattr__(self, "forms", canonical)
        if len(self.forms) != self.dim or any(len(row) != self.dim for row in self.forms):
            raise DimensionMismatchError("form grid must be dim x dim")
        for row in self.forms:
            for form in row:
                if len(form) != self.dim:
                    raise DimensionMismatchError("every form needs one coefficient per variable")

    @classmethod
    def zero(cls, dim: int) -> "LinearFormMatrix":
        z = (Fraction(0),) * dim
        return cls(dim, tuple((z,) * dim for _ in range(dim)))

    def form(self, p: int, k: int) -> LinearForm:
        """Entry at 1-based position (p, k)."""
        return self.forms[p - 1][k - 1]

    def to_strings(self) -> list[list[str]]:
        return [[form_to_string(f) for f in row] for row in self.forms]


def specialize(m: LinearFormMatrix, x: Sequence[Fraction]) -> Matrix:
    """Evaluate every form at the point x."""
    if len(x) != m.dim:
        raise DimensionMismatchError("point has wrong length")
    return Matrix(
        tuple(
            tuple(sum((c * x[i] for i, c in enumerate(form)), Fraction(0)) for form in row)
            for row in m.forms
        )
    )
