import numpy as np
import pytest

from tangentlie.algebra import (
    DimensionError,
    LieAlgebra,
    LinearMap,
    ad_matrix,
    bracket,
    check_homomorphism,
    verify_algebra,
)
from tangentlie.catalog import abelian

from oracles import central_jacobian, jacobi_residuals_loops


class TestBracket:
    def test_abelian_is_zero(self):
        assert np.array_equal(bracket(abelian(2), [1, 0], [0, 1]), [0, 0])

    def test_heisenberg_matches_commutator(self, heis):
        # [E12, E23] = E13
        np.testing.assert_array_equal(bracket(heis, [1, 0, 0], [0, 1, 0]), [0, 0, 1])

    def test_so3_matches_cross_product(self, so3, rng):
        np.testing.assert_array_equal(bracket(so3, [0, 1, 0], [1, 0, 0]), [0, 0, -1])
        for _ in range(20):
            u, v = rng.normal(size=(2, 3))
            np.testing.assert_allclose(bracket(so3, u, v), np.cross(u, v), atol=1e-14)

    def test_dimension_error_names_operand(self, so3):
        with pytest.raises(DimensionError) as info:
            bracket(so3, [1, 0, 0], [1, 0])
        assert info.value.operand == "y"
        with pytest.raises(DimensionError) as info:
            bracket(so3, [1, 0], [1, 0, 0])
        assert info.value.operand == "x"


class TestVerify:
    def test_so3_passes_against_loop_oracle(self, so3):
        oracle = jacobi_residuals_loops(so3.structure_constants)
        assert len(oracle) == 27
        assert all(np.all(r == 0) for r in oracle.values())
        assert verify_algebra(so3).passed

    def test_broken_constants_fail_at_first_triple(self, broken):
        oracle = jacobi_residuals_loops(broken.structure_constants)
        np.testing.assert_array_equal(oracle[(0, 1, 2)], [0, 1, 0])

        report = verify_algebra(broken)
        assert report["antisymmetry"].passed
        jac = report["jacobi"]
        assert not jac.passed
        assert jac.location == (0, 1, 2)
        np.testing.assert_array_equal(jac.residual, [0, 1, 0])
        assert jac.max_residual == 1.0

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_abelian_passes(self, m):
        report = verify_algebra(abelian(m))
        assert report.passed and report.max_residual == 0.0

    def test_non_antisymmetric_reported(self):
        c = np.zeros((2, 2, 2))
        c[0, 1, 0] = 1.0
        report = verify_algebra(LieAlgebra(c))
        assert not report["antisymmetry"].passed
        assert report["antisymmetry"].location == (0, 1)

    def test_diagonal_entry_reported(self):
        c = np.zeros((2, 2, 2))
        c[1, 1, 0] = 0.5
        check = verify_algebra(LieAlgebra(c))["antisymmetry"]
        assert check.location == (1, 1)
        assert check.max_residual == 1.0

    def test_tolerance_governs_pass(self):
        c = np.zeros((2, 2, 2))
        c[0, 1, 0], c[1, 0, 0] = 1.0, -1.0 + 1e-7
        assert not verify_algebra(LieAlgebra(c)).passed
        assert verify_algebra(LieAlgebra(c, tolerance=1e-6)).passed

    def test_construction_does_not_verify(self, broken):
        assert broken.dim == 3

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            LieAlgebra(np.zeros((2, 2, 3)))


class TestHomomorphism:
    def test_identity(self, so3):
        assert check_homomorphism(LinearMap.identity(3), so3, so3).passed

    def test_zero_into_anything(self, so3, sl2):
        assert check_homomorphism(LinearMap.zero(3, 3), so3, sl2).passed
        assert check_homomorphism(LinearMap.zero(3, 5), so3, abelian(5)).passed

    def test_swap_fails_with_predicted_residual(self, so3):
        swap = LinearMap(np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
        # cross-product oracle: F(e1 x e2) = e3, F e1 x F e2 = e2 x e1 = -e3
        lhs = swap(np.cross([1, 0, 0], [0, 1, 0]))
        rhs = np.cross(swap([1, 0, 0]), swap([0, 1, 0]))
        np.testing.assert_array_equal(lhs - rhs, [0, 0, 2])

        check = check_homomorphism(swap, so3, so3)["homomorphism"]
        assert not check.passed
        assert check.location == (0, 1)
        np.testing.assert_array_equal(check.residual, [0, 0, 2])

    def test_dimension_mismatch(self, so3):
        with pytest.raises(DimensionError):
            check_homomorphism(LinearMap.identity(2), so3, so3)
        with pytest.raises(DimensionError):
            check_homomorphism(LinearMap.zero(3, 2), so3, so3)


class TestAdMatrix:
    def test_abelian_zero(self):
        assert not ad_matrix(abelian(3), [1, 2, 3]).matrix.any()

    def test_so3_e3(self, so3):
        M = ad_matrix(so3, [0, 0, 1]).matrix
        np.testing.assert_array_equal(M @ [1, 0, 0], [0, 1, 0])
        np.testing.assert_array_equal(M @ [0, 1, 0], [-1, 0, 0])
        np.testing.assert_array_equal(M @ [0, 0, 1], [0, 0, 0])
        for v in np.eye(3):
            np.testing.assert_array_equal(M @ v, np.cross([0, 0, 1], v))

    def test_heisenberg_single_entry(self, heis):
        M = ad_matrix(heis, [1, 0, 0]).matrix
        expected = np.zeros((3, 3))
        expected[2, 1] = 1.0
        np.testing.assert_array_equal(M, expected)

    def test_matches_bracket(self, catalog_alg, rng):
        for _ in range(10):
            x, y = rng.uniform(-1, 1, size=(2, catalog_alg.dim))
            np.testing.assert_allclose(ad_matrix(catalog_alg, x)(y), bracket(catalog_alg, x, y), atol=1e-14)

    def test_matches_central_differences(self, catalog_alg, rng):
        x, y0 = rng.uniform(-1, 1, size=(2, catalog_alg.dim))
        fd = central_jacobian(lambda y: bracket(catalog_alg, x, y), y0, h=1e-6)
        np.testing.assert_allclose(ad_matrix(catalog_alg, x).matrix, fd, rtol=0, atol=1e-6)


class TestLinearMap:
    def test_composition(self):
        a = LinearMap(np.arange(6.0).reshape(2, 3))
        b = LinearMap(np.arange(12.0).reshape(3, 4))
        np.testing.assert_array_equal((a @ b).matrix, a.matrix @ b.matrix)
        assert (a @ b).source_dim == 4 and (a @ b).target_dim == 2

    def test_declared_dims_checked(self):
        with pytest.raises(DimensionError):
            LinearMap(np.zeros((2, 3)), source_dim=2)

    def test_immutable(self):
        F = LinearMap(np.eye(2))
        with pytest.raises(ValueError):
            F.matrix[0, 0] = 5.0
