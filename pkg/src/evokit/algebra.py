"""Finite-dimensional algebra semantics on top of a cubic tensor.

Covers the bilinear multiplication, the testable identity predicates,
the three power chains (full, right, plenary) with their termination
verdicts, and verification of change-of-basis isomorphism witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError
from .exact import (
    Matrix,
    Subspace,
    Vector,
    is_zero_vector,
    subspace_span,
    subspace_sum,
    zero_vector,
)
from .structure import CubicTensor, apply_basis_change


@dataclass(frozen=True)
class FDAlgebra:
    """A finite-dimensional algebra, fully described by its tensor."""

    tensor: CubicTensor

    @property
    def dim(self) -> int:
        return self.tensor.dim


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(1, n + 1))


def multiply(a: FDAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Bilinear extension of the basis products:
    result_k = sum over (i, j) of g[i,j,k] u_i v_j."""
    n = a.dim
    if len(u) != n or len(v) != n:
        raise DimensionMismatchError("operands must have the algebra's dimension")
    result = [Fraction(0)] * n
    for (i, j, k), coeff in a.tensor.entries():
        ui = u[i - 1]
        if ui == 0:
            continue
        vj = v[j - 1]
        if vj == 0:
            continue
        result[k - 1] += coeff * ui * vj
    return tuple(result)


class AlgebraIdentity(str, Enum):
    COMMUTATIVE = "commutative"
    ANTICOMMUTATIVE = "anticommutative"
    ASSOCIATIVE = "associative"
    FLEXIBLE = "flexible"
    LEIBNIZ = "leibniz"
    EVOLUTION_NATURAL_BASIS = "evolution_natural_basis"


def check_identity(a: FDAlgebra, which: AlgebraIdentity) -> bool:
    """Decide an identity by checking it on basis tuples.

    Multilinearity makes the basis check complete.  The flexible law
    (xy)x = x(yx) is quadratic in x, so it is checked in its linearised
    trilinear form (xy)z + (zy)x = x(yz) + z(yx), equivalent over the
    rationals.  The Leibniz identity is [x,[y,z]] = [[x,y],z] - [[x,z],y].
    """
    n = a.dim
    basis = [basis_vector(n, i) for i in range(1, n + 1)]

    def prod(u, v):
        return multiply(a, u, v)

    if which is AlgebraIdentity.COMMUTATIVE:
        return all(prod(x, y) == prod(y, x) for x in basis for y in basis)
    if which is AlgebraIdentity.ANTICOMMUTATIVE:
        minus = lambda v: tuple(-c for c in v)
        return all(prod(x, y) == minus(prod(y, x)) for x in basis for y in basis)
    if which is AlgebraIdentity.ASSOCIATIVE:
        return all(
            prod(prod(x, y), z) == prod(x, prod(y, z))
            for x in basis
            for y in basis
            for z in basis
        )
    if which is AlgebraIdentity.FLEXIBLE:
        def ok(x, y, z):
            left = tuple(p + q for p, q in zip(prod(prod(x, y), z), prod(prod(z, y), x)))
            right = tuple(p + q for p, q in zip(prod(x, prod(y, z)), prod(z, prod(y, x))))
            return left == right

        return all(ok(x, y, z) for x in basis for y in basis for z in basis)
    if which is AlgebraIdentity.LEIBNIZ:
        def ok(x, y, z):
            left = prod(x, prod(y, z))
            right = tuple(p - q for p, q in zip(prod(prod(x, y), z), prod(prod(x, z), y)))
            return left == right

        return all(ok(x, y, z) for x in basis for y in basis for z in basis)
    if which is AlgebraIdentity.EVOLUTION_NATURAL_BASIS:
        return all(
            is_zero_vector(prod(basis[i], basis[j]))
            for i in range(n)
            for j in range(n)
            if i != j
        )
    raise ValueError(f"unknown identity {which!r}")


def subspace_product(a: FDAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of the pairwise products of basis vectors of u and v."""
    n = a.dim
    if u.ambient_dim != n or v.ambient_dim != n:
        raise DimensionMismatchError("subspaces must live in the algebra's space")
    products = [multiply(a, x, y) for x in u.basis for y in v.basis]
    return subspace_span(products, n)


class ChainKind(Enum):
    FULL = "full"
    RIGHT = "right"
    PLENARY = "plenary"


@dataclass(frozen=True)
class ChainVerdict:
    """Either the chain reached zero (index = smallest step with a zero
    subspace, counting from 1) or it stabilised at a positive dimension."""

    reaches_zero: bool
    index: int | None = None
    stable_dim: int | None = None

    def __str__(self) -> str:
        if self.reaches_zero:
            return f"reaches zero at step {self.index}"
        return f"stabilizes at dimension {self.stable_dim}"


@dataclass(frozen=True)
class PowerChain:
    kind: ChainKind
    subspaces: tuple[Subspace, ...]
    verdict: ChainVerdict

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)


def chain_subspaces(a: FDAlgebra, kind: ChainKind, count: int) -> list[Subspace]:
    """First `count` members of the chain, straight from the recurrences:

        full:    A^1 = A,  A^k = sum over i of A^i A^(k-i)
        right:   A^<1> = A,  A^<k+1> = A^<k> A
        plenary: A^[1] = A,  A^[k+1] = A^[k] A^[k]

    For a commutative algebra the full sum collapses to i <= floor(k/2);
    the general sum is used otherwise.
    """
    n = a.dim
    full_space = Subspace.full(n)
    chain = [full_space]
    commutative = check_identity(a, AlgebraIdentity.COMMUTATIVE) if kind is ChainKind.FULL else False
    while len(chain) < count:
        if kind is ChainKind.RIGHT:
            nxt = subspace_product(a, chain[-1], full_space)
        elif kind is ChainKind.PLENARY:
            nxt = subspace_product(a, chain[-1], chain[-1])
        else:
            k = len(chain) + 1
            top = k // 2 if commutative else k - 1
            nxt = Subspace.zero(n)
            for i in range(1, top + 1):
                nxt = subspace_sum(nxt, subspace_product(a, chain[i - 1], chain[k - i - 1]))
        chain.append(nxt)
    return chain


def _full_chain_stabilized(a: FDAlgebra, chain: list[Subspace], k: int) -> bool:
    """Certificate that the full chain is constant from step k on.

    Requires the chain to be constant through step 2k+1 and the constant
    subspace S to absorb products with every computed power:
    S = span(S*S and A^i*S and S*A^i for i <= k).  Under those conditions
    every later sum reproduces exactly S.
    """
    if len(chain) < 2 * k + 1:
        return False
    s = chain[k - 1]
    if any(chain[m] != s for m in range(k, 2 * k + 1)):
        return False
    closure = subspace_product(a, s, s)
    for i in range(1, k + 1):
        closure = subspace_sum(closure, subspace_product(a, chain[i - 1], s))
        closure = subspace_sum(closure, subspace_product(a, s, chain[i - 1]))
    return closure == s


def power_chain(a: FDAlgebra, kind: ChainKind) -> PowerChain:
    """Run a chain until it reaches zero or provably stabilises.

    The right and plenary chains are monotone, so one repeat certifies
    stabilisation.  The full chain needs the stronger certificate from
    `_full_chain_stabilized` because a single repeat does not rule out a
    later decrease.
    """
    n = a.dim
    full_space = Subspace.full(n)
    chain = [full_space]
    commutative = check_identity(a, AlgebraIdentity.COMMUTATIVE) if kind is ChainKind.FULL else False
    while True:
        if kind is ChainKind.RIGHT:
            nxt = subspace_product(a, chain[-1], full_space)
        elif kind is ChainKind.PLENARY:
            nxt = subspace_product(a, chain[-1], chain[-1])
        else:
            k = len(chain) + 1
            top = k // 2 if commutative else k - 1
            nxt = Subspace.zero(n)
            for i in range(1, top + 1):
                nxt = subspace_sum(nxt, subspace_product(a, chain[i - 1], chain[k - i - 1]))
        chain.append(nxt)
        if nxt.is_zero:
            verdict = ChainVerdict(reaches_zero=True, index=len(chain))
            return PowerChain(kind, tuple(chain), verdict)
        if kind in (ChainKind.RIGHT, ChainKind.PLENARY):
            if nxt == chain[-2]:
                verdict = ChainVerdict(reaches_zero=False, stable_dim=nxt.dim)
                return PowerChain(kind, tuple(chain), verdict)
        else:
            for k in range(1, len(chain)):
                if chain[k - 1] == chain[k] and _full_chain_stabilized(a, chain, k):
                    verdict = ChainVerdict(reaches_zero=False, stable_dim=chain[k - 1].dim)
                    return PowerChain(kind, tuple(chain[:k + 1]), verdict)


def lower_central_series(a: FDAlgebra) -> PowerChain:
    """Lower central series L^1 = L, L^(k+1) = [L^k, L].

    The recurrence coincides with the right power chain; this name is the
    one used for Leibniz algebras.
    """
    return power_chain(a, ChainKind.RIGHT)


def annihilator(a: FDAlgebra) -> Subspace:
    """The two-sided annihilator {v : v A = A v = 0}, a basis-change
    invariant used to tell small algebras apart."""
    n = a.dim
    rows = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            rows.append(tuple(a.tensor.get(i, j, k) for i in range(1, n + 1)))
            rows.append(tuple(a.tensor.get(j, i, k) for i in range(1, n + 1)))
    from .exact import solve_linear

    solution = solve_linear(Matrix(tuple(rows)), zero_vector(len(rows)))
    return subspace_span(solution.nullspace_basis, n)


def verify_isomorphism_witness(a: FDAlgebra, b: FDAlgebra, p: Matrix) -> bool:
    """True exactly when rewriting a in the basis e'_i = sum_a p[i][a] e_a
    reproduces b's structure constants."""
    if a.dim != b.dim:
        raise DimensionMismatchError("algebras have different dimensions")
    if not p.is_square or p.rows != a.dim:
        raise DimensionMismatchError("witness matrix has the wrong shape")
    return apply_basis_change(a.tensor, p) == b.tensor
