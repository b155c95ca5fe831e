"""Evolution-algebra specifics.

An evolution algebra is a commutative algebra with a basis in which
distinct basis elements multiply to zero, so a square matrix m (row i =
coefficients of e_i^2) carries all of its structure.  This module holds
the triangularizability and right-nilpotency deciders, direct sums,
dim(E^2), and an exact isomorphism search over monomial maps
phi(e_i) = t_i f_sigma(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra import ChainKind, FDAlgebra, power_chain, verify_isomorphism_witness
from .errors import DimensionMismatchError, FormatError
from .exact import Matrix, rref, solve_integer_linear
from .structure import CubicTensor


@dataclass(frozen=True)
class EvolutionMatrix:
    """Natural-basis matrix of an evolution algebra; row i lists the
    coefficients of e_i^2."""

    m: Matrix

    def __post_init__(self):
        if not self.m.is_square or self.m.rows < 1:
            raise FormatError("evolution matrix must be square and non-empty")

    @property
    def dim(self) -> int:
        return self.m.rows

    def entry(self, i: int, k: int) -> Fraction:
        """1-based access to the coefficient of e_k in e_i^2."""
        return self.m.entries[i - 1][k - 1]


def to_tensor(e: EvolutionMatrix) -> CubicTensor:
    """Embed as a cubic tensor: g[i,i,k] = m[i][k], zero off the diagonal."""
    gamma = {}
    for i in range(1, e.dim + 1):
        for k in range(1, e.dim + 1):
            value = e.entry(i, k)
            if value != 0:
                gamma[(i, i, k)] = value
    return CubicTensor(e.dim, gamma)


def _adjacency(e: EvolutionMatrix) -> dict[int, list[int]]:
    # Edge i -> k whenever e_i^2 has a nonzero e_k coefficient.
    n = e.dim
    return {
        i: [k for k in range(1, n + 1) if e.entry(i, k) != 0]
        for i in range(1, n + 1)
    }


def _find_cycle(adjacency: dict[int, list[int]]) -> tuple[int, ...]:
    nodes = sorted(adjacency)
    done: set[int] = set()
    for start in nodes:
        if start in done:
            continue
        path: list[int] = []
        on_path: set[int] = set()
        stack: list[tuple[int, iter]] = [(start, iter(adjacency[start]))]
        path.append(start)
        on_path.add(start)
        while stack:
            node, neighbors = stack[-1]
            advanced = False
            for nxt in neighbors:
                if nxt in on_path:
                    idx = path.index(nxt)
                    return tuple(path[idx:])
                if nxt in done:
                    continue
                stack.append((nxt, iter(adjacency[nxt])))
                path.append(nxt)
                on_path.add(nxt)
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
                done.add(node)
    return ()


@dataclass(frozen=True)
class TriangularizabilityReport:
    """Yes/no plus a witness either way: a basis reordering that makes the
    matrix strictly upper triangular, or an index cycle showing none exists."""

    triangularizable: bool
    permutation: tuple[int, ...] | None = None
    cycle_witness: tuple[int, ...] | None = None


def triangularizable(e: EvolutionMatrix) -> TriangularizabilityReport:
    """Decide whether some basis reordering makes the matrix strictly
    upper triangular.

    Equivalent to acyclicity of the digraph with an edge i -> k whenever
    m[i][k] != 0 (a self-loop counts as a cycle), which in turn is
    equivalent to right nilpotency of the algebra.  The permutation lists
    old indices in their new order; ties are broken toward smaller
    indices so the result is deterministic.
    """
    n = e.dim
    adjacency = _adjacency(e)
    indegree = {i: 0 for i in range(1, n + 1)}
    for i, outs in adjacency.items():
        for k in outs:
            indegree[k] += 1
    ready = sorted(i for i in indegree if indegree[i] == 0)
    order: list[int] = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        for k in adjacency[node]:
            indegree[k] -= 1
            if indegree[k] == 0:
                ready.append(k)
        ready.sort()
    if len(order) == n:
        return TriangularizabilityReport(True, permutation=tuple(order))
    return TriangularizabilityReport(False, cycle_witness=_find_cycle(adjacency))


def permute_matrix(m: Matrix, permutation: tuple[int, ...]) -> Matrix:
    """Apply a basis reordering to rows and columns: result[r][c] =
    m[permutation[r]][permutation[c]] (1-based entries in `permutation`)."""
    return Matrix(
        tuple(
            tuple(m.entries[pi - 1][pj - 1] for pj in permutation)
            for pi in permutation
        )
    )


@dataclass(frozen=True)
class RightNilpotencyResult:
    nilpotent: bool
    index: int | None = None

    def __str__(self) -> str:
        return f"nilpotent of index {self.index}" if self.nilpotent else "not nilpotent"


def right_nilpotency(e: EvolutionMatrix) -> RightNilpotencyResult:
    """Right-nilpotency verdict with the index (smallest s with the s-th
    right power zero), computed from the right power chain."""
    chain = power_chain(FDAlgebra(to_tensor(e)), ChainKind.RIGHT)
    if chain.verdict.reaches_zero:
        return RightNilpotencyResult(True, chain.verdict.index)
    return RightNilpotencyResult(False)


def direct_sum(a: EvolutionMatrix, b: EvolutionMatrix) -> EvolutionMatrix:
    """Block-diagonal natural-basis matrix on the sum of the spaces."""
    n, m = a.dim, b.dim
    zero = Fraction(0)
    rows = [tuple(a.m.entries[i]) + (zero,) * m for i in range(n)]
    rows += [(zero,) * n + tuple(b.m.entries[i]) for i in range(m)]
    return EvolutionMatrix(Matrix(tuple(rows)))


def dim_square(e: EvolutionMatrix) -> int:
    """Dimension of E^2, the span of the rows of the natural-basis matrix."""
    _, rank, _ = rref(e.m)
    return rank


# ---------------------------------------------------------------------------
# Monomial isomorphism search
# ---------------------------------------------------------------------------

class MonomialSearchStatus(Enum):
    WITNESS = "witness"
    NONE_OVER_RATIONALS = "none_over_rationals"
    NONE_OVER_REALS = "none_over_reals"


@dataclass(frozen=True)
class MonomialObstruction:
    """Why a particular basis bijection admits no real scales.

    kind "sign" records an equation forcing an even power of a scale (or
    a scale ratio) to equal the negative rational `square_value`; kind
    "magnitude" records an exactly inconsistent absolute-value relation;
    kind "pattern" means the zero patterns cannot correspond at all.
    """

    sigma: tuple[int, ...]
    kind: str
    description: str
    scale_index: int | None = None
    reference_index: int | None = None
    square_value: Fraction | None = None


@dataclass(frozen=True)
class MonomialSearchResult:
    status: MonomialSearchStatus
    witness: Matrix | None = None
    sigma: tuple[int, ...] | None = None
    scales: tuple[Fraction, ...] | None = None
    obstructions: tuple[MonomialObstruction, ...] = ()


def _prime_factors(value: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    remaining = abs(value)
    d = 2
    while d * d <= remaining:
        while remaining % d == 0:
            factors[d] = factors.get(d, 0) + 1
            remaining //= d
        d += 1 if d == 2 else 2
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return factors


def _valuation(q: Fraction, p: int) -> int:
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _solve_for_permutation(a: EvolutionMatrix, b: EvolutionMatrix, sigma: tuple[int, ...]):
    """Try to solve t_i^2 * b[s(i)][s(k)] = a[i][k] * t_k for nonzero
    rational scales, for one basis bijection s.

    Returns ("witness", scales), ("real", obstruction) when the system is
    provably unsolvable even over the reals, or ("rational", None) when
    real solutions exist but none is rational.
    """
    n = a.dim

    def s(i: int) -> int:
        return sigma[i - 1]

    # Nonzero patterns must correspond: the scales are nonzero.
    edges: list[tuple[int, int, Fraction]] = []
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            av = a.entry(i, k)
            bv = b.entry(s(i), s(k))
            if (av == 0) != (bv == 0):
                obstruction = MonomialObstruction(
                    sigma,
                    "pattern",
                    f"zero patterns differ at ({i},{k})",
                )
                return ("real", obstruction)
            if av != 0:
                edges.append((i, k, av / bv))  # ratio m with t_i^2 = m * t_k

    # Squares are positive, so every constraint pins the sign of its target.
    sign_of: dict[int, tuple[int, tuple[int, int, Fraction]]] = {}
    for i, k, m in edges:
        sign = 1 if m > 0 else -1
        if k not in sign_of:
            sign_of[k] = (sign, (i, k, m))
        elif sign_of[k][0] != sign:
            i0, _, m0 = sign_of[k][1]
            if i0 == k:
                value = m * m0  # t_k is pinned to m0 by its self-loop
                obstruction = MonomialObstruction(
                    sigma, "sign", f"t{i}^2 = {value}",
                    scale_index=i, square_value=value,
                )
            elif i == k:
                value = m0 * m
                obstruction = MonomialObstruction(
                    sigma, "sign", f"t{i0}^2 = {value}",
                    scale_index=i0, square_value=value,
                )
            else:
                value = m0 / m
                obstruction = MonomialObstruction(
                    sigma, "sign", f"(t{i0}/t{i})^2 = {value}",
                    scale_index=i0, reference_index=i, square_value=value,
                )
            return ("real", obstruction)

    # Magnitudes decompose prime by prime: 2 v_p(t_i) - v_p(t_k) = v_p(m).
    primes: set[int] = set()
    for _, _, m in edges:
        primes |= set(_prime_factors(m.numerator))
        primes |= set(_prime_factors(m.denominator))
    exponents = {p: [0] * n for p in sorted(primes)}
    for p in sorted(primes):
        rows = []
        rhs = []
        for i, k, m in edges:
            row = [0] * n
            row[i - 1] += 2
            row[k - 1] -= 1
            rows.append(row)
            rhs.append(_valuation(m, p))
        outcome = solve_integer_linear(rows, rhs)
        if outcome[0] == "inconsistent":
            obstruction = MonomialObstruction(
                sigma, "magnitude",
                f"absolute-value constraints are inconsistent at prime {p}",
            )
            return ("real", obstruction)
        if outcome[0] == "nonintegral":
            return ("rational", None)
        exponents[p] = outcome[1]

    scales = []
    for j in range(1, n + 1):
        value = Fraction(sign_of.get(j, (1, None))[0])
        for p, vec in exponents.items():
            value *= Fraction(p) ** vec[j - 1]
        scales.append(value)
    # Unconstrained scales come out as 1: no sign record and zero exponents.

    for i, k, m in edges:
        if scales[i - 1] ** 2 != m * scales[k - 1]:  # pragma: no cover - engine invariant
            raise AssertionError("monomial scale propagation produced a non-solution")
    return ("witness", tuple(scales))


def monomial_isomorphism_search(a: EvolutionMatrix, b: EvolutionMatrix) -> MonomialSearchResult:
    """Search for an isomorphism of the form phi(e_i) = t_i f_sigma(i).

    Complete within the monomial class over the rationals: permutations
    are tried in lexicographic order and the first rational solution
    wins.  When no permutation admits even a real solution the verdict is
    NONE_OVER_REALS, carrying one obstruction per permutation; otherwise
    NONE_OVER_RATIONALS.  This is not a general isomorphism decider.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError("evolution algebras have different dimensions")
    n = a.dim
    obstructions: list[MonomialObstruction] = []
    rational_open = False
    for sigma in itertools.permutations(range(1, n + 1)):
        outcome = _solve_for_permutation(a, b, sigma)
        if outcome[0] == "witness":
            scales = outcome[1]
            inverse = {s: i for i, s in enumerate(sigma, start=1)}
            rows = []
            for i in range(1, n + 1):
                row = [Fraction(0)] * n
                source = inverse[i]
                row[source - 1] = Fraction(1) / scales[source - 1]
                rows.append(tuple(row))
            witness = Matrix(tuple(rows))
            if not verify_isomorphism_witness(
                FDAlgebra(to_tensor(a)), FDAlgebra(to_tensor(b)), witness
            ):  # pragma: no cover - engine invariant
                raise AssertionError("monomial witness failed verification")
            return MonomialSearchResult(
                MonomialSearchStatus.WITNESS,
                witness=witness,
                sigma=sigma,
                scales=scales,
                obstructions=tuple(obstructions),
            )
        if outcome[0] == "real":
            obstructions.append(outcome[1])
        else:
            rational_open = True
    status = (
        MonomialSearchStatus.NONE_OVER_RATIONALS
        if rational_open
        else MonomialSearchStatus.NONE_OVER_REALS
    )
    return MonomialSearchResult(status, obstructions=tuple(obstructions))
