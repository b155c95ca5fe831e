"""Service layer: every operation as a pure function from a request
model to a response model.

The FastAPI endpoints and the CLI are both thin clients of these
handlers, so their results are identical by construction.
"""

from __future__ import annotations

from fractions import Fraction

from .. import catalog
from ..algebra import (
    AlgebraIdentity,
    ChainKind,
    FDAlgebra,
    check_identity,
    power_chain,
    verify_isomorphism_witness,
)
from ..approx import (
    BetaVariant,
    approximate_at,
    beta_symbolic,
    existence_solve,
    symbolic_right_nilpotent,
)
from ..errors import FormatError
from ..exact import Matrix, format_rational, parse_rational
from ..evolution import (
    EvolutionMatrix,
    dim_square,
    monomial_isomorphism_search,
    right_nilpotency,
    to_tensor,
    triangularizable,
)
from ..serialization import (
    KIND_EVOLUTION,
    AlgebraInput,
    algebra_document,
    parse_algebra_document,
    parse_matrix_document,
)
from ..structure import CubicTensor
from . import models


def _to_core(doc: models.AlgebraDocument) -> AlgebraInput:
    return parse_algebra_document(doc.model_dump(exclude_none=True))


def _to_wire(alg: AlgebraInput) -> models.AlgebraDocument:
    return models.AlgebraDocument(**algebra_document(alg))


def _matrix_to_core(doc: models.MatrixDocument) -> Matrix:
    return parse_matrix_document(doc.model_dump())


def _point(values: list[str] | None, dim: int) -> tuple[Fraction, ...]:
    if values is None:
        raise FormatError("a point is required")
    point = tuple(parse_rational(v) for v in values)
    if len(point) != dim:
        raise FormatError(f"point has {len(point)} coordinates, expected {dim}")
    return point


def _chain_summary(alg: FDAlgebra, kind: ChainKind) -> models.ChainSummary:
    chain = power_chain(alg, kind)
    return models.ChainSummary(
        kind=kind.value,
        dims=list(chain.dims),
        reaches_zero=chain.verdict.reaches_zero,
        index=chain.verdict.index,
        stable_dim=chain.verdict.stable_dim,
    )


def info(request: models.InfoRequest) -> models.InfoReport:
    alg_input = _to_core(request.algebra)
    alg = FDAlgebra(alg_input.tensor)
    identities = {
        which.value: check_identity(alg, which) for which in AlgebraIdentity
    }
    chains = [_chain_summary(alg, kind) for kind in ChainKind]
    square = tri = None
    if alg_input.evolution is not None:
        square = dim_square(alg_input.evolution)
        tri = triangularizable(alg_input.evolution).triangularizable
    return models.InfoReport(
        dim=alg_input.dim,
        kind=alg_input.kind,
        identities=identities,
        chains=chains,
        dim_square=square,
        triangularizable=tri,
    )


def _variant(transposed: bool) -> BetaVariant:
    return BetaVariant.TRANSPOSED if transposed else BetaVariant.STANDARD


def approx(request: models.ApproxRequest) -> models.ApproxReport:
    alg_input = _to_core(request.algebra)
    variant = _variant(request.transposed)
    if request.symbolic:
        forms = beta_symbolic(alg_input.tensor, variant)
        return models.ApproxReport(
            variant=variant.value,
            symbolic=True,
            forms=forms.to_strings(),
            form_coefficients=[
                [[format_rational(c) for c in form] for form in row]
                for row in forms.forms
            ],
        )
    point = _point(request.point, alg_input.dim)
    matrix = approximate_at(alg_input.tensor, point, variant)
    return models.ApproxReport(
        variant=variant.value,
        symbolic=False,
        point=[format_rational(c) for c in point],
        matrix=matrix.m.to_strings(),
    )


def exists(request: models.ExistsRequest) -> models.ExistenceReportModel:
    alg_input = _to_core(request.algebra)
    target_input = _to_core(request.target)
    if target_input.kind != KIND_EVOLUTION:
        raise FormatError("the existence target must be an evolution algebra file")
    report = existence_solve(alg_input.tensor, target_input.evolution)
    return models.ExistenceReportModel(
        verdict=report.verdict.kind.value,
        point=(
            [format_rational(c) for c in report.verdict.point]
            if report.verdict.point is not None
            else None
        ),
        invertible_blocks=list(report.invertible_blocks),
        coefficient_blocks=[b.to_strings() for b in report.coefficient_blocks],
        targets=[[format_rational(c) for c in t] for t in report.targets],
        invertible_blocks_agree=report.invertible_blocks_agree,
        singular_blocks_consistent=report.singular_blocks_consistent,
        stacked_status=report.stacked_solution.status.value,
        conditions_match_verdict=report.conditions_match_verdict,
    )


def nilpotent(request: models.NilpotentRequest) -> models.NilpotentReport:
    alg_input = _to_core(request.algebra)
    if request.symbolic:
        forms = beta_symbolic(alg_input.tensor, _variant(request.transposed))
        holds = symbolic_right_nilpotent(forms)
        return models.NilpotentReport(
            symbolic=True,
            variant=_variant(request.transposed).value,
            right_nilpotent=holds,
        )
    if alg_input.evolution is None:
        raise FormatError("right-nilpotency needs an evolution algebra file")
    result = right_nilpotency(alg_input.evolution)
    report = triangularizable(alg_input.evolution)
    return models.NilpotentReport(
        symbolic=False,
        right_nilpotent=result.nilpotent,
        index=result.index,
        triangularizable=report.triangularizable,
        permutation=list(report.permutation) if report.permutation else None,
        cycle=list(report.cycle_witness) if report.cycle_witness else None,
    )


def iso(request: models.IsoRequest) -> models.IsoReport:
    left = _to_core(request.left)
    right = _to_core(request.right)
    if request.monomial and request.witness is not None:
        raise FormatError("choose either a witness check or the monomial search")
    if request.witness is not None:
        witness = _matrix_to_core(request.witness)
        verified = verify_isomorphism_witness(
            FDAlgebra(left.tensor), FDAlgebra(right.tensor), witness
        )
        return models.IsoReport(mode="witness", verified=verified)
    if not request.monomial:
        raise FormatError("choose either a witness check or the monomial search")
    if left.evolution is None or right.evolution is None:
        raise FormatError("the monomial search needs two evolution algebra files")
    result = monomial_isomorphism_search(left.evolution, right.evolution)
    return models.IsoReport(
        mode="monomial",
        status=result.status.value,
        witness=result.witness.to_strings() if result.witness else None,
        sigma=list(result.sigma) if result.sigma else None,
        scales=[format_rational(t) for t in result.scales] if result.scales else None,
        obstructions=[
            models.ObstructionModel(
                sigma=list(o.sigma),
                kind=o.kind,
                description=o.description,
                scale_index=o.scale_index,
                reference_index=o.reference_index,
                square_value=(
                    format_rational(o.square_value) if o.square_value is not None else None
                ),
            )
            for o in result.obstructions
        ],
    )


def distance(request: models.DistanceRequest) -> models.DistanceReport:
    from ..structure import sup_distance

    left = _to_core(request.left)
    right = _to_core(request.right)
    return models.DistanceReport(
        distance=format_rational(sup_distance(left.tensor, right.tensor))
    )


def catalog_list() -> models.CatalogListReport:
    return models.CatalogListReport(
        names=list(catalog.names()),
        required_params={
            name: list(catalog.required_params(name))
            for name in catalog.names()
            if catalog.required_params(name)
        },
    )


def catalog_entry(request: models.CatalogEntryRequest) -> models.CatalogEntryReport:
    entry = catalog.get(request.name, request.params or None)
    if entry.evolution is not None:
        doc = AlgebraInput(KIND_EVOLUTION, entry.tensor, entry.evolution)
    else:
        doc = AlgebraInput("general", entry.tensor, None)
    return models.CatalogEntryReport(
        name=entry.name,
        params={k: format_rational(v) for k, v in entry.params},
        source=entry.source,
        document=_to_wire(doc),
    )


def verify(request: models.VerifyRequest) -> models.VerifyReport:
    if request.suite == "section2":
        reports = (catalog.verify_section2_fixtures(),)
    elif request.suite == "leibniz":
        reports = (catalog.verify_leibniz_approximation_nilpotency(),)
    elif request.suite == "canonical":
        reports = (catalog.verify_canonical_forms(),)
    else:
        reports = catalog.verify_all()
    suites = [
        models.SuiteModel(
            suite=r.suite,
            passed=r.passed,
            checks=[
                models.CheckModel(name=c.name, passed=c.passed, detail=c.detail)
                for c in r.checks
            ],
        )
        for r in reports
    ]
    return models.VerifyReport(suites=suites, all_passed=all(r.passed for r in reports))
