import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import seeds
from symplie.errors import InvalidDimensionError, SingularMatrixError, UnsupportedFamilyError
from symplie.exact import Matrix, determinant, inverse, unit_vector
from symplie.lie import (
    Family,
    LieAlgebra,
    abelian,
    bracket,
    build_family,
    check_jacobi,
    in_scaled_aut,
    is_automorphism,
    scale_factor,
    structure_in_basis,
)
from symplie.sampling import random_gl, random_scaled_aut, trial_rng


def e(dim, i):
    return unit_vector(dim, i - 1)


class TestBrackets:
    def test_rh(self):
        g = build_family("RH", 2)
        assert bracket(g, e(4, 1), e(4, 3)) == e(4, 3)
        assert bracket(g, e(4, 3), e(4, 1)) == tuple(-a for a in e(4, 3))
        assert bracket(g, e(4, 2), e(4, 3)) == (0, 0, 0, 0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_heis(self, n):
        g = build_family(Family.HEIS, n)
        assert bracket(g, e(2 * n, 1), e(2 * n, 2)) == e(2 * n, 2 * n)

    @given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    def test_self_bracket_vanishes(self, x):
        for tag in ("RH", "HEIS"):
            assert not any(bracket(build_family(tag, 2), x, x))


class TestBuildFamily:
    def test_rh_1(self):
        g = build_family("RH", 1)
        assert g.dim == 2 and g.brackets == ((0, 1, 1, 1),)

    def test_heis_2(self):
        g = build_family("HEIS", 2)
        assert g.dim == 4 and g.brackets == ((0, 1, 3, 1),)

    def test_heis_1(self):
        with pytest.raises(InvalidDimensionError):
            build_family("HEIS", 1)

    def test_generic(self):
        with pytest.raises(UnsupportedFamilyError):
            build_family("GENERIC", 2)


class TestJacobi:
    @pytest.mark.parametrize("tag, n", [("RH", 2), ("HEIS", 3), ("RH", 4), ("HEIS", 4)])
    def test_families(self, tag, n):
        assert check_jacobi(build_family(tag, n))

    def test_violation(self):
        g = LieAlgebra(3, ((0, 1, 1, 1), (0, 2, 1, 1), (1, 2, 0, 1)))
        assert not check_jacobi(g)

    def test_abelian(self):
        assert check_jacobi(abelian(4))


class TestAutomorphisms:
    def test_identity(self):
        assert is_automorphism(build_family("RH", 2), Matrix.identity(4))

    @given(st.fractions(-5, 5, max_denominator=3), st.fractions(-5, 5, max_denominator=3))
    def test_rh1_lower_triangular(self, r, s):
        phi = Matrix([[1, 0], [r, s]])
        if s == 0:
            with pytest.raises(SingularMatrixError):
                is_automorphism(build_family("RH", 1), phi)
        else:
            assert is_automorphism(build_family("RH", 1), phi)

    def test_rh1_scaled_is_not_automorphism(self):
        assert not is_automorphism(build_family("RH", 1), Matrix.diag([2, 1]))


class TestScaledAutPattern:
    def test_identity(self):
        for tag in ("RH", "HEIS"):
            assert in_scaled_aut(build_family(tag, 3), Matrix.identity(6))

    def test_rh_first_row(self):
        assert not in_scaled_aut(build_family("RH", 2), Matrix.identity(4).replace(0, 1, 1))

    def test_heis_last_column(self):
        assert not in_scaled_aut(build_family("HEIS", 2), Matrix.identity(4).replace(2, 3, 1))

    def test_singular(self):
        assert not in_scaled_aut(build_family("RH", 1), Matrix.diag([1, 0]))

    @pytest.mark.parametrize("tag", ["RH", "HEIS"])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_group_law(self, tag, n):
        g = build_family(tag, n)
        for t in range(100 // 3 + 1):
            rng = trial_rng(0, f"grp{tag}{n}", t)
            A, B = random_scaled_aut(rng, g), random_scaled_aut(rng, g)
            assert in_scaled_aut(g, A @ B)
            assert in_scaled_aut(g, inverse(A))

    @settings(max_examples=100)
    @given(seeds)
    def test_rh1_soundness_both_directions(self, seed):
        rng = trial_rng(seed, "rh1", 0)
        g = build_family("RH", 1)
        M = random_gl(rng, 2)
        if rng.random() < 0.5:
            M = M.replace(0, 1, 0)
        assume(determinant(M) != 0)
        if in_scaled_aut(g, M):
            assert is_automorphism(g, M / M[0, 0])
        else:
            # an automorphism fixes e1's coefficient, so only c = M[0, 0] could work
            c = M[0, 0] or 1
            assert not is_automorphism(g, M / c)

    @pytest.mark.parametrize("tag", ["RH", "HEIS"])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_soundness_both_directions(self, tag, n):
        # The pattern equals R^x Aut exactly, so both directions are asserted.
        g = build_family(tag, n)
        for t in range(30):
            M = random_scaled_aut(trial_rng(0, f"snd{tag}{n}", t), g)
            c = scale_factor(g, M)
            assert is_automorphism(g, M / c)
            assert in_scaled_aut(g, (M / c) * 3)

    def test_scale_factor_heis(self):
        g = build_family("HEIS", 2)
        phi = Matrix([[1, 2, 0, 0], [0, 1, 0, 0], [5, 0, 1, 0], [7, 1, 3, 1]])
        assert is_automorphism(g, phi)
        assert scale_factor(g, phi * 4) == 4


class TestStructureInBasis:
    def test_identity_basis(self):
        g = build_family("RH", 1)
        assert structure_in_basis(g, Matrix.identity(2)) == {(0, 1): (0, 1)}

    def test_rescaled_basis(self):
        # x1 = 2 e1 scales the RH relation by 2
        g = build_family("RH", 1)
        assert structure_in_basis(g, Matrix.diag([2, 1])) == {(0, 1): (0, 2)}
