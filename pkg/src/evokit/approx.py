"""Evolution-algebra approximations of a general algebra.

A cubic tensor induces the quadratic evolution operator
F_k(x) = sum over (i, j) of g[i,j,k] x_i x_j.  Its derivative at a point
is linear in the point, and reading the derivative matrix as a
natural-basis matrix attaches an evolution algebra E_x to every point x.
This module builds those approximations pointwise and symbolically,
solves the existence problem "which evolution algebras arise as E_x",
and transfers nilpotency from the symbolic zero pattern.

Row convention, used everywhere: the approximation's matrix has entry
(p, k) equal to the form

    standard:   b_pk(x) = sum_i (g[p,i,k] + g[i,p,k]) x_i
    transposed: b_pk(x) = sum_i (g[k,i,p] + g[i,k,p]) x_i

so row p lists the coefficients of the p-th squared basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, ZeroPointError
from .exact import (
    Matrix,
    SolutionSet,
    SolutionStatus,
    Vector,
    determinant,
    invert,
    rref,
    solve_linear,
)
from .evolution import EvolutionMatrix, triangularizable
from .structure import CubicTensor, LinearFormMatrix, form_is_zero, specialize


class BetaVariant(Enum):
    STANDARD = "standard"
    TRANSPOSED = "transposed"


def evolution_operator(t: CubicTensor, x: Sequence[Fraction]) -> Vector:
    """Value of the quadratic map F at x."""
    n = t.dim
    if len(x) != n:
        raise DimensionMismatchError("point has wrong length")
    result = [Fraction(0)] * n
    for (i, j, k), coeff in t.entries():
        xi = x[i - 1]
        if xi == 0:
            continue
        xj = x[j - 1]
        if xj == 0:
            continue
        result[k - 1] += coeff * xi * xj
    return tuple(result)


def beta_symbolic(t: CubicTensor, variant: BetaVariant) -> LinearFormMatrix:
    """The approximation as a matrix of linear forms in x_1..x_n."""
    n = t.dim
    rows = []
    for p in range(1, n + 1):
        row = []
        for k in range(1, n + 1):
            if variant is BetaVariant.STANDARD:
                coeffs = tuple(t.get(p, i, k) + t.get(i, p, k) for i in range(1, n + 1))
            else:
                coeffs = tuple(t.get(k, i, p) + t.get(i, k, p) for i in range(1, n + 1))
            row.append(coeffs)
        rows.append(tuple(row))
    return LinearFormMatrix(n, tuple(rows))


def approximate_at(
    t: CubicTensor, x: Sequence[Fraction], variant: BetaVariant = BetaVariant.STANDARD
) -> EvolutionMatrix:
    """The evolution algebra attached to the tensor at the point x."""
    if len(x) != t.dim:
        raise DimensionMismatchError("point has wrong length")
    return EvolutionMatrix(specialize(beta_symbolic(t, variant), x))


def jacobian(t: CubicTensor, x: Sequence[Fraction]) -> Matrix:
    """Derivative matrix of the evolution operator at x.

    Entry (p, k) is the standard form b_pk evaluated at x, i.e. rows are
    indexed by the coordinate of differentiation.  With that layout the
    exact linearisation identity reads

        F(x + h) - F(x) - F(h) = h^T J(x)

    for every h (use `Matrix.vec_mat` for the left action).
    """
    if len(x) != t.dim:
        raise DimensionMismatchError("point has wrong length")
    return specialize(beta_symbolic(t, BetaVariant.STANDARD), x)


class ExistenceVerdictKind(Enum):
    SOLUTION = "solution"
    NO_NONZERO_SOLUTION = "no_nonzero_solution"
    NO_SOLUTION = "no_solution"


@dataclass(frozen=True)
class ExistenceVerdict:
    kind: ExistenceVerdictKind
    point: Vector | None = None


@dataclass(frozen=True)
class ExistenceReport:
    """Full transcript of the existence analysis.

    `coefficient_blocks[p-1]` is the n x n block G_p with
    G_p[k][i] = g[p,i,k] + g[i,p,k], so block p of the system reads
    G_p x = targets[p-1] (row p of the requested evolution matrix).
    `invertible_blocks` lists the p with det G_p != 0.

    Two classical solvability conditions are reported for transparency:
    all invertible blocks must propose the same point
    (`invertible_blocks_agree`) and every singular block must be
    consistent on its own (`singular_blocks_consistent`).  The verdict
    itself always comes from the stacked n^2 x n system, which stays
    unambiguous when the invertible set is empty or singular blocks
    interact; `conditions_match_verdict` flags any input where the two
    disagree.
    """

    invertible_blocks: tuple[int, ...]
    coefficient_blocks: tuple[Matrix, ...]
    targets: tuple[Vector, ...]
    invertible_blocks_agree: bool
    singular_blocks_consistent: bool
    stacked_solution: SolutionSet
    verdict: ExistenceVerdict
    conditions_match_verdict: bool


def gamma_block(t: CubicTensor, p: int) -> Matrix:
    """Coefficient block G_p of the p-th row of equations."""
    n = t.dim
    return Matrix(
        tuple(
            tuple(t.get(p, i, k) + t.get(i, p, k) for i in range(1, n + 1))
            for k in range(1, n + 1)
        )
    )


def existence_solve(t: CubicTensor, target: EvolutionMatrix) -> ExistenceReport:
    """Decide whether some nonzero point x has approximation exactly `target`.

    A point satisfies n^2 linear equations b_pk(x) = target[p][k]; the
    verdict distinguishes "no solution at all" from "only x = 0".
    """
    n = t.dim
    if target.dim != n:
        raise DimensionMismatchError("target must match the tensor's dimension")
    blocks = tuple(gamma_block(t, p) for p in range(1, n + 1))
    targets = tuple(target.m.row(p - 1) for p in range(1, n + 1))

    invertible = tuple(
        p for p in range(1, n + 1) if determinant(blocks[p - 1]) != 0
    )
    candidates = [invert(blocks[p - 1]).mat_vec(targets[p - 1]) for p in invertible]
    agree = all(c == candidates[0] for c in candidates) if candidates else True

    singular_ok = True
    for p in range(1, n + 1):
        if p in invertible:
            continue
        block = blocks[p - 1]
        _, rank_plain, _ = rref(block)
        _, rank_aug, _ = rref(block.augment(targets[p - 1]))
        if rank_plain != rank_aug:
            singular_ok = False

    rows = []
    rhs = []
    for p in range(1, n + 1):
        for k in range(1, n + 1):
            rows.append(blocks[p - 1].row(k - 1))
            rhs.append(targets[p - 1][k - 1])
    stacked = solve_linear(Matrix(tuple(rows)), tuple(rhs))

    if stacked.status is SolutionStatus.INCONSISTENT:
        verdict = ExistenceVerdict(ExistenceVerdictKind.NO_SOLUTION)
    else:
        point = stacked.some_nonzero()
        if point is None:
            verdict = ExistenceVerdict(ExistenceVerdictKind.NO_NONZERO_SOLUTION)
        else:
            verdict = ExistenceVerdict(ExistenceVerdictKind.SOLUTION, point)

    predicted = agree and singular_ok
    actual = verdict.kind is ExistenceVerdictKind.SOLUTION
    return ExistenceReport(
        invertible_blocks=invertible,
        coefficient_blocks=blocks,
        targets=targets,
        invertible_blocks_agree=agree,
        singular_blocks_consistent=singular_ok,
        stacked_solution=stacked,
        verdict=verdict,
        conditions_match_verdict=predicted == actual,
    )


def symbolic_right_nilpotent(m: LinearFormMatrix) -> bool:
    """True when the generic zero pattern of the form matrix is acyclic.

    The digraph has an edge p -> k whenever the form at (p, k) is not
    identically zero.  Acyclicity makes every specialisation strictly
    triangularizable (a point can only remove edges), so the attached
    evolution algebra is right nilpotent for every x.  The converse
    fails for a fixed point: use `approximate_at` plus `right_nilpotency`
    there.
    """
    pattern = Matrix(
        tuple(
            tuple(Fraction(0 if form_is_zero(form) else 1) for form in row)
            for row in m.forms
        )
    )
    return triangularizable(EvolutionMatrix(pattern)).triangularizable


def equal_point_self_iso(m: EvolutionMatrix, c: Fraction) -> Matrix:
    """Witness that the approximation at the equal-coordinate point
    (c, ..., c) is isomorphic to the algebra itself.

    The standard approximation there has matrix 2c * m, and scaling the
    whole basis by 1/(2c) undoes that: the returned homothety passes
    `verify_isomorphism_witness` from the approximation to m.
    """
    c = Fraction(c)
    if c == 0:
        raise ZeroPointError("the equal-coordinate point must be nonzero")
    n = m.dim
    scale = Fraction(1) / (2 * c)
    return Matrix(
        tuple(
            tuple(scale if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        )
    )
