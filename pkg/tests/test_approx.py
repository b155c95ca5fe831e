import random
from fractions import Fraction as F

import pytest

from conftest import (
    rand_anticommutative_tensor,
    rand_evolution,
    rand_point,
    rand_strict_upper_evolution,
    rand_tensor,
)
from evokit.algebra import FDAlgebra, verify_isomorphism_witness
from evokit.approx import (
    BetaVariant,
    ExistenceVerdictKind,
    approximate_at,
    beta_symbolic,
    equal_point_self_iso,
    evolution_operator,
    existence_solve,
    gamma_block,
    jacobian,
    symbolic_right_nilpotent,
)
from evokit.catalog import get
from evokit.errors import ZeroPointError
from evokit.exact import Matrix, vec_add, vec_sub
from evokit.evolution import EvolutionMatrix, right_nilpotency, to_tensor
from evokit.structure import LinearFormMatrix, specialize


def forms_matrix(dim, entries):
    """Build a form grid from {(p, k): coefficient tuple}."""
    zero = (F(0),) * dim
    rows = []
    for p in range(1, dim + 1):
        rows.append(tuple(
            tuple(F(c) for c in entries.get((p, k), zero)) for k in range(1, dim + 1)
        ))
    return LinearFormMatrix(dim, tuple(rows))


class TestEvolutionOperator:
    def test_zero_point(self):
        rng = random.Random(50)
        t = rand_tensor(rng, 3)
        assert evolution_operator(t, (F(0),) * 3) == (F(0),) * 3

    def test_worked_value(self):
        t = get("ex2_3").tensor
        assert evolution_operator(t, (F(1), F(0))) == (F(1), F(2))

    def test_degree_two_homogeneity(self):
        rng = random.Random(51)
        for _ in range(20):
            n = rng.randint(1, 4)
            t = rand_tensor(rng, n)
            x = rand_point(rng, n)
            c = F(rng.randint(-5, 5), rng.randint(1, 3))
            scaled = evolution_operator(t, tuple(c * xi for xi in x))
            assert scaled == tuple(c * c * v for v in evolution_operator(t, x))


class TestBetaSymbolic:
    def test_mu1_transposed(self):
        forms = beta_symbolic(get("mu1").tensor, BetaVariant.TRANSPOSED)
        assert forms == forms_matrix(2, {(2, 1): (2, 0)})

    def test_lambda4_transposed_row(self):
        alpha = F(2)
        forms = beta_symbolic(get("lambda4", {"alpha": alpha}).tensor, BetaVariant.TRANSPOSED)
        assert forms == forms_matrix(3, {
            (3, 1): (2, 1, 0),
            (3, 2): (1, 2 * alpha, 0),
        })

    def test_lambda3_transposed_zero(self):
        forms = beta_symbolic(get("lambda3").tensor, BetaVariant.TRANSPOSED)
        assert forms == LinearFormMatrix.zero(3)

    def test_standard_on_evolution_input(self):
        # For a natural-basis input the standard forms are 2 x_p m[p][k].
        rng = random.Random(52)
        for _ in range(10):
            e = rand_evolution(rng, rng.randint(1, 4))
            forms = beta_symbolic(to_tensor(e), BetaVariant.STANDARD)
            x = rand_point(rng, e.dim)
            expected = Matrix(tuple(
                tuple(2 * x[p] * e.m.entries[p][k] for k in range(e.dim))
                for p in range(e.dim)
            ))
            assert specialize(forms, x) == expected

    def test_transposed_is_standard_index_swap(self):
        rng = random.Random(53)
        for _ in range(15):
            n = rng.randint(1, 4)
            t = rand_tensor(rng, n)
            std = beta_symbolic(t, BetaVariant.STANDARD)
            tra = beta_symbolic(t, BetaVariant.TRANSPOSED)
            for p in range(1, n + 1):
                for k in range(1, n + 1):
                    assert tra.form(p, k) == std.form(k, p)


class TestApproximateAt:
    def test_standard_worked_value(self):
        e = EvolutionMatrix(Matrix.from_rows([[1, 2], [3, 0]]))
        approx = approximate_at(to_tensor(e), (F(1), F(1)), BetaVariant.STANDARD)
        assert approx == EvolutionMatrix(Matrix.from_rows([[2, 4], [6, 0]]))

    def test_mu1_transposed_point(self):
        approx = approximate_at(get("mu1").tensor, (F(1), F(0)), BetaVariant.TRANSPOSED)
        assert approx == EvolutionMatrix(Matrix.from_rows([[0, 0], [2, 0]]))

    def test_anticommutative_gives_abelian(self):
        rng = random.Random(54)
        for _ in range(10):
            n = rng.randint(2, 4)
            t = rand_anticommutative_tensor(rng, n)
            x = rand_point(rng, n)
            for variant in BetaVariant:
                assert approximate_at(t, x, variant).m == Matrix.zero(n, n)

    def test_linear_in_the_point(self):
        rng = random.Random(55)
        for _ in range(15):
            n = rng.randint(1, 4)
            t = rand_tensor(rng, n)
            x = rand_point(rng, n)
            c = F(rng.randint(-4, 4), rng.randint(1, 3))
            for variant in BetaVariant:
                scaled = approximate_at(t, tuple(c * xi for xi in x), variant)
                plain = approximate_at(t, x, variant)
                assert scaled.m == Matrix(
                    tuple(tuple(c * v for v in row) for row in plain.m.entries)
                )


class TestJacobian:
    def test_zero_point(self):
        rng = random.Random(56)
        t = rand_tensor(rng, 3)
        assert jacobian(t, (F(0),) * 3) == Matrix.zero(3, 3)

    def test_linearization_identity(self):
        rng = random.Random(57)
        for _ in range(40):
            n = rng.randint(1, 4)
            t = rand_tensor(rng, n)
            x, h = rand_point(rng, n), rand_point(rng, n)
            lhs = vec_sub(
                vec_sub(evolution_operator(t, vec_add(x, h)), evolution_operator(t, x)),
                evolution_operator(t, h),
            )
            assert lhs == jacobian(t, x).vec_mat(h)

    def test_evolution_input_action(self):
        rng = random.Random(58)
        for _ in range(10):
            e = rand_evolution(rng, rng.randint(1, 4))
            n = e.dim
            x, h = rand_point(rng, n), rand_point(rng, n)
            action = jacobian(to_tensor(e), x).vec_mat(h)
            expected = tuple(
                2 * sum((e.m.entries[i][k] * x[i] * h[i] for i in range(n)), F(0))
                for k in range(n)
            )
            assert action == expected

    def test_matches_specialized_forms(self):
        rng = random.Random(59)
        for _ in range(15):
            n = rng.randint(1, 4)
            t = rand_tensor(rng, n)
            x = rand_point(rng, n)
            assert jacobian(t, x) == specialize(beta_symbolic(t, BetaVariant.STANDARD), x)


class TestExistenceSolve:
    def test_first_fixture(self):
        target = EvolutionMatrix(Matrix.from_rows([[1, 1], [-1, -1]]))
        report = existence_solve(get("ex2_3").tensor, target)
        assert report.verdict.kind is ExistenceVerdictKind.NO_SOLUTION
        assert report.invertible_blocks == (1, 2)
        assert not report.invertible_blocks_agree
        assert report.coefficient_blocks[0] == Matrix.from_rows([[2, 0], [4, 3]])
        assert report.coefficient_blocks[1] == Matrix.from_rows([[0, 2], [3, 2]])
        assert report.conditions_match_verdict

    def test_second_fixture(self):
        target = EvolutionMatrix(Matrix.from_rows([[1, 1], [-1, -1]]))
        report = existence_solve(get("ex2_4").tensor, target)
        assert report.verdict.kind is ExistenceVerdictKind.NO_SOLUTION
        assert report.invertible_blocks == ()
        assert not report.singular_blocks_consistent

    def test_third_fixture(self):
        target = EvolutionMatrix(Matrix.from_rows([[1, 5], [1, 5]]))
        report = existence_solve(get("ex2_5").tensor, target)
        assert report.verdict.kind is ExistenceVerdictKind.SOLUTION
        assert report.verdict.point == (F(1), F(1))

    def test_solution_reproduces_target(self):
        rng = random.Random(60)
        for _ in range(15):
            n = rng.randint(1, 3)
            t = rand_tensor(rng, n)
            x = rand_point(rng, n, allow_zero=False)
            target = approximate_at(t, x, BetaVariant.STANDARD)
            report = existence_solve(t, target)
            assert report.verdict.kind is ExistenceVerdictKind.SOLUTION
            assert approximate_at(t, report.verdict.point, BetaVariant.STANDARD) == target

    def test_only_zero_solution(self):
        # Identity natural-basis input with zero target forces x = 0,
        # while the blockwise conditions hold vacuously; the report must
        # flag the disagreement.
        e = EvolutionMatrix(Matrix.identity(2))
        report = existence_solve(to_tensor(e), EvolutionMatrix(Matrix.zero(2, 2)))
        assert report.verdict.kind is ExistenceVerdictKind.NO_NONZERO_SOLUTION
        assert report.invertible_blocks == ()
        assert report.singular_blocks_consistent
        assert report.invertible_blocks_agree
        assert not report.conditions_match_verdict

    def test_gamma_block_definition(self):
        rng = random.Random(61)
        t = rand_tensor(rng, 3)
        for p in range(1, 4):
            block = gamma_block(t, p)
            for k in range(1, 4):
                for i in range(1, 4):
                    assert block.entries[k - 1][i - 1] == t.get(p, i, k) + t.get(i, p, k)


class TestSymbolicNilpotency:
    def test_strict_upper_standard(self):
        rng = random.Random(62)
        for _ in range(10):
            e = rand_strict_upper_evolution(rng, rng.randint(2, 5))
            forms = beta_symbolic(to_tensor(e), BetaVariant.STANDARD)
            assert symbolic_right_nilpotent(forms)

    def test_mu1_transposed(self):
        assert symbolic_right_nilpotent(
            beta_symbolic(get("mu1").tensor, BetaVariant.TRANSPOSED)
        )

    def test_diagonal_has_self_loops(self):
        forms = beta_symbolic(to_tensor(EvolutionMatrix(Matrix.identity(2))), BetaVariant.STANDARD)
        assert not symbolic_right_nilpotent(forms)

    def test_sound_for_every_point(self):
        rng = random.Random(63)
        for _ in range(15):
            n = rng.randint(2, 4)
            t = rand_tensor(rng, n, density=0.25)
            forms = beta_symbolic(t, BetaVariant.STANDARD)
            if not symbolic_right_nilpotent(forms):
                continue
            for _ in range(5):
                x = rand_point(rng, n)
                assert right_nilpotency(approximate_at(t, x, BetaVariant.STANDARD)).nilpotent


class TestEqualPointSelfIso:
    def test_half_point_is_identity(self):
        m = EvolutionMatrix(Matrix.from_rows([[1, 2], [3, 4]]))
        witness = equal_point_self_iso(m, F(1, 2))
        assert witness == Matrix.identity(2)
        approx = approximate_at(to_tensor(m), (F(1, 2), F(1, 2)), BetaVariant.STANDARD)
        assert approx == m

    def test_unit_point(self):
        m = get("E4").evolution
        witness = equal_point_self_iso(m, F(1))
        assert witness == Matrix.from_rows([["1/2", "0"], ["0", "1/2"]])
        approx = approximate_at(to_tensor(m), (F(1), F(1)), BetaVariant.STANDARD)
        assert approx == EvolutionMatrix(Matrix.from_rows([[0, 2], [0, 0]]))
        assert verify_isomorphism_witness(
            FDAlgebra(to_tensor(approx)), FDAlgebra(to_tensor(m)), witness
        )

    def test_zero_rejected(self):
        with pytest.raises(ZeroPointError):
            equal_point_self_iso(get("E4").evolution, F(0))

    def test_random_homotheties(self):
        rng = random.Random(64)
        for _ in range(15):
            m = rand_evolution(rng, rng.randint(1, 4))
            for c in (F(1, 2), F(1), F(-3)):
                witness = equal_point_self_iso(m, c)
                point = (c,) * m.dim
                approx = approximate_at(to_tensor(m), point, BetaVariant.STANDARD)
                assert verify_isomorphism_witness(
                    FDAlgebra(to_tensor(approx)), FDAlgebra(to_tensor(m)), witness
                )
