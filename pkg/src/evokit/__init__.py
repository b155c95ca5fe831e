"""evokit: exact-arithmetic toolkit for structure-constant tensors and
their evolution-algebra approximations."""

from .algebra import (
    AlgebraIdentity,
    ChainKind,
    ChainVerdict,
    FDAlgebra,
    PowerChain,
    check_identity,
    lower_central_series,
    multiply,
    power_chain,
    subspace_product,
    verify_isomorphism_witness,
)
from .approx import (
    BetaVariant,
    ExistenceReport,
    ExistenceVerdict,
    ExistenceVerdictKind,
    approximate_at,
    beta_symbolic,
    equal_point_self_iso,
    evolution_operator,
    existence_solve,
    jacobian,
    symbolic_right_nilpotent,
)
from .errors import (
    BadParamsError,
    DimensionMismatchError,
    EvokitError,
    FormatError,
    IndexRangeError,
    SingularMatrixError,
    UnknownNameError,
    ZeroPointError,
)
from .exact import (
    Matrix,
    SolutionSet,
    SolutionStatus,
    Subspace,
    format_rational,
    invert,
    parse_rational,
    rref,
    solve_linear,
    subspace_span,
)
from .evolution import (
    EvolutionMatrix,
    MonomialSearchResult,
    MonomialSearchStatus,
    RightNilpotencyResult,
    TriangularizabilityReport,
    dim_square,
    direct_sum,
    monomial_isomorphism_search,
    right_nilpotency,
    to_tensor,
    triangularizable,
)
from .structure import (
    CubicTensor,
    LinearFormMatrix,
    apply_basis_change,
    specialize,
    sup_distance,
    tensor_from_products,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
