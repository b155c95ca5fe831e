from fractions import Fraction as F

import pytest

from evokit import catalog
from evokit.algebra import (
    AlgebraIdentity,
    ChainKind,
    FDAlgebra,
    annihilator,
    check_identity,
    power_chain,
)
from evokit.errors import BadParamsError, UnknownNameError
from evokit.exact import Matrix
from evokit.evolution import dim_square

LEIBNIZ_NAMES = ["mu1", "lambda1", "lambda2", "lambda3", "lambda5", "lambda6"]


class TestGet:
    def test_lambda4_products(self):
        entry = catalog.get("lambda4", {"alpha": 2})
        t = entry.tensor
        assert t.get(1, 1, 3) == 1
        assert t.get(2, 2, 3) == 2
        assert t.get(1, 2, 3) == 1
        assert len(dict(t.entries())) == 3

    def test_lambda1_abelian(self):
        assert catalog.get("lambda1").tensor.is_zero()

    def test_e6_bad_params(self):
        with pytest.raises(BadParamsError):
            catalog.get("E6", {"a2": 1, "a3": 1})

    def test_e7_reads_second_basis_vector(self):
        entry = catalog.get("E7", {"a4": F(5)})
        assert entry.evolution.m == Matrix.from_rows([[0, 1], [1, 5]])

    def test_ex2_12_formula(self):
        entry = catalog.get("ex2_12", {"a": 4, "d": 1})
        assert entry.evolution.m == Matrix.from_rows([[4, 3], [2, 1]])
        with pytest.raises(BadParamsError):
            catalog.get("ex2_12", {"a": 0, "d": 1})

    def test_unknown_name(self):
        with pytest.raises(UnknownNameError):
            catalog.get("lambda9")

    def test_missing_and_extra_params(self):
        with pytest.raises(BadParamsError):
            catalog.get("lambda4")
        with pytest.raises(BadParamsError):
            catalog.get("mu1", {"alpha": 1})

    def test_names_constructible(self):
        defaults = {
            "lambda4": {"alpha": F(1)},
            "E6": {"a2": F(1), "a3": F(2)},
            "E7": {"a4": F(0)},
            "ex2_8": {"a": F(0), "b": F(1), "c": F(1)},
            "ex2_12": {"a": F(1), "d": F(-1)},
        }
        for name in catalog.names():
            entry = catalog.get(name, defaults.get(name))
            assert entry.name == name
            assert entry.dim in (2, 3)


class TestEntryProperties:
    @pytest.mark.parametrize("name", LEIBNIZ_NAMES)
    def test_leibniz_identity(self, name):
        alg = FDAlgebra(catalog.get(name).tensor)
        assert check_identity(alg, AlgebraIdentity.LEIBNIZ)

    @pytest.mark.parametrize("alpha", [F(0), F(1), F(-1), F(1, 4), F(5)])
    def test_lambda4_leibniz(self, alpha):
        alg = FDAlgebra(catalog.get("lambda4", {"alpha": alpha}).tensor)
        assert check_identity(alg, AlgebraIdentity.LEIBNIZ)

    def test_evolution_entries_natural_basis(self):
        params = {"E6": {"a2": 1, "a3": 2}, "E7": {"a4": 3}}
        for name in ["E1", "E2", "E3", "E4", "E5", "E6", "E7"]:
            entry = catalog.get(name, params.get(name))
            assert entry.evolution is not None
            assert check_identity(
                FDAlgebra(entry.tensor), AlgebraIdentity.EVOLUTION_NATURAL_BASIS
            )

    def test_dim_square_classes(self):
        for name in ["E1", "E2", "E3", "E4", "E5"]:
            assert dim_square(catalog.get(name).evolution) == 1
        assert dim_square(catalog.get("E6", {"a2": 2, "a3": 3}).evolution) == 2
        assert dim_square(catalog.get("E7", {"a4": 0}).evolution) == 2

    def test_three_dim_leibniz_pairwise_distinguished(self):
        def fingerprint(tensor):
            alg = FDAlgebra(tensor)
            return (
                check_identity(alg, AlgebraIdentity.COMMUTATIVE),
                check_identity(alg, AlgebraIdentity.ANTICOMMUTATIVE),
                power_chain(alg, ChainKind.RIGHT).dims,
                power_chain(alg, ChainKind.FULL).dims,
                power_chain(alg, ChainKind.PLENARY).dims,
                annihilator(alg).dim,
            )

        tensors = {
            "lambda1": catalog.get("lambda1").tensor,
            "lambda2": catalog.get("lambda2").tensor,
            "lambda3": catalog.get("lambda3").tensor,
            "lambda4": catalog.get("lambda4", {"alpha": 1}).tensor,
            "lambda5": catalog.get("lambda5").tensor,
            "lambda6": catalog.get("lambda6").tensor,
        }
        prints = {name: fingerprint(t) for name, t in tensors.items()}
        names = sorted(prints)
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert prints[a] != prints[b], f"{a} and {b} share a fingerprint"

    def test_mu1_differs_from_abelian(self):
        from evokit.structure import CubicTensor

        mu1 = FDAlgebra(catalog.get("mu1").tensor)
        abelian = FDAlgebra(CubicTensor(2, {}))
        assert power_chain(mu1, ChainKind.RIGHT).dims != power_chain(abelian, ChainKind.RIGHT).dims

    def test_ex2_8_cycle(self):
        from evokit.evolution import right_nilpotency, triangularizable

        entry = catalog.get("ex2_8", {"a": 0, "b": 1, "c": 1})
        report = triangularizable(entry.evolution)
        assert not report.triangularizable
        assert report.cycle_witness == (1, 2)
        assert not right_nilpotency(entry.evolution).nilpotent

    def test_ex2_8_nilpotent_approximation_at_degenerate_point(self):
        # The algebra itself is not nilpotent, yet killing the first
        # coordinate of the point makes its approximation triangular.
        from evokit.approx import BetaVariant, approximate_at
        from evokit.evolution import right_nilpotency

        entry = catalog.get("ex2_8", {"a": 1, "b": 2, "c": 3})
        assert not right_nilpotency(entry.evolution).nilpotent
        approx = approximate_at(entry.tensor, (F(0), F(5)), BetaVariant.STANDARD)
        assert right_nilpotency(approx).nilpotent


class TestVerifiers:
    def test_section2(self):
        report = catalog.verify_section2_fixtures()
        assert report.passed, [c for c in report.checks if not c.passed]
        assert len(report.checks) == 5

    def test_leibniz(self):
        report = catalog.verify_leibniz_approximation_nilpotency()
        assert report.passed, [c for c in report.checks if not c.passed]
        # mu1, lambda1..lambda3, five lambda4 samples, lambda5, lambda6.
        assert len(report.checks) == 11

    def test_canonical(self):
        report = catalog.verify_canonical_forms()
        assert report.passed, [c for c in report.checks if not c.passed]

    def test_deterministic(self):
        assert catalog.verify_all() == catalog.verify_all()
