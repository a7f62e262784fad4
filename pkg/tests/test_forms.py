import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_d_omega, pfaffian, seeds, structure_tensor, sympy_cocycle_dimension
from symplie.errors import ShapeMismatchError
from symplie.exact import Matrix, determinant, in_span, inverse, rank, unit_vector
from symplie.forms import (
    TwoForm,
    basis_triples,
    coboundary_matrix,
    cocycle_space,
    combine,
    d_omega,
    first_nonclosed_triple,
    is_closed,
    is_nondegenerate,
    pullback,
    skew_pairs,
)
from symplie.lie import abelian, build_family
from symplie.sampling import (
    random_closed_nondegenerate,
    random_gl,
    random_rational,
    random_scaled_aut,
    random_skew,
    trial_rng,
)
from symplie.symplectic import standard_J


def omega0(n):
    return TwoForm(standard_J(n))


def rvec(rng, d):
    return tuple(random_rational(rng) for _ in range(d))


class TestTwoForm:
    def test_rejects_non_skew(self):
        with pytest.raises(ShapeMismatchError):
            TwoForm(Matrix([[0, 1], [1, 0]]))

    def test_from_pairs(self):
        w = TwoForm.from_pairs(4, {(0, 2): 1, (1, 3): "1/2"})
        assert w.matrix[2, 0] == -1 and w.matrix[1, 3] == Fraction(1, 2)
        assert w((1, 0, 0, 0), (0, 0, 1, 0)) == 1

    def test_linear_structure(self):
        w = omega0(1)
        assert (w + w).matrix == (2 * w).matrix == standard_J(1) * 2


class TestNondegeneracy:
    def test_examples(self):
        assert is_nondegenerate(omega0(2))
        assert not is_nondegenerate(TwoForm.from_pairs(4, {(0, 1): 1}))

    @pytest.mark.parametrize("dim", [2, 4, 6])
    def test_pfaffian_oracle(self, dim):
        for t in range(40):
            w = random_skew(trial_rng(0, f"pf{dim}", t), dim, bound=1)
            pf = pfaffian(w.matrix.tolist())
            assert pf * pf == determinant(w.matrix)
            assert is_nondegenerate(w) == (pf != 0)


class TestPullback:
    def test_identity(self):
        assert pullback(omega0(2), Matrix.identity(4)) == omega0(2)

    def test_scaling(self):
        assert pullback(omega0(2), Matrix.identity(4) * 2).matrix == standard_J(2) / 4

    @given(seeds, st.integers(1, 3))
    def test_bilinear_oracle(self, seed, n):
        # (g.w)(g x, g y) = w(x, y) on all basis pairs
        rng = trial_rng(seed, "pullback", 0)
        g, w = random_gl(rng, 2 * n), random_skew(rng, 2 * n)
        pw = pullback(w, g)
        cols = g.columns()
        for i, j in itertools.product(range(2 * n), repeat=2):
            assert pw(cols[i], cols[j]) == w(unit_vector(2 * n, i), unit_vector(2 * n, j))


class TestDOmega:
    def test_rh2_omega0_value(self):
        e = [unit_vector(4, i) for i in range(4)]
        assert d_omega(build_family("RH", 2), omega0(2), e[0], e[1], e[3]) == -2

    def test_heis3(self):
        e = [unit_vector(6, i) for i in range(6)]
        assert d_omega(build_family("HEIS", 3), omega0(3), e[0], e[1], e[2]) == 1

    @given(seeds)
    def test_alternating_and_trilinear(self, seed):
        rng = trial_rng(seed, "trilinear", 0)
        g = build_family(rng.choice(["RH", "HEIS"]), 2)
        w = random_skew(rng, 4)
        x, y, z, u = (rvec(rng, 4) for _ in range(4))
        a = random_rational(rng)
        assert d_omega(g, w, x, x, z) == 0
        assert d_omega(g, w, x, y, z) == -d_omega(g, w, y, x, z) == d_omega(g, w, y, z, x)
        xu = tuple(p + a * q for p, q in zip(x, u))
        assert d_omega(g, w, xu, y, z) == d_omega(g, w, x, y, z) + a * d_omega(g, w, u, y, z)

    @pytest.mark.parametrize("tag, n", [("RH", 2), ("RH", 3), ("HEIS", 2), ("HEIS", 3)])
    def test_brute_force_oracle(self, tag, n):
        g = build_family(tag, n)
        c = structure_tensor(g)
        for t in range(10):
            rng = trial_rng(0, f"brute{tag}{n}", t)
            w = random_skew(rng, g.dim)
            W = w.matrix.tolist()
            x, y, z = (rvec(rng, g.dim) for _ in range(3))
            assert d_omega(g, w, x, y, z) == brute_d_omega(c, W, x, y, z)


class TestClosedness:
    def test_rh1_omega0(self):
        assert is_closed(build_family("RH", 1), omega0(1))

    def test_rh2_omega0(self):
        g = build_family("RH", 2)
        assert not is_closed(g, omega0(2))
        assert first_nonclosed_triple(g, omega0(2)) == ((0, 1, 3), -2)

    def test_heis2_canonical_frame_form(self):
        # basis x = (e1, e2, e4, e3) is symplectic and has [x1, x2] = x3
        B = Matrix.from_columns([unit_vector(4, i) for i in (0, 1, 3, 2)])
        Binv = inverse(B)
        w = TwoForm(Binv.T @ standard_J(2) @ Binv)
        assert is_closed(build_family("HEIS", 2), w)

    @pytest.mark.parametrize("tag", ["RH", "HEIS"])
    @pytest.mark.parametrize("n", [2, 3])
    def test_automorphism_invariance(self, tag, n):
        g = build_family(tag, n)
        basis = cocycle_space(g)
        for t in range(20):
            rng = trial_rng(0, f"autinv{tag}{n}", t)
            phi = random_scaled_aut(rng, g)
            w = combine(basis, [rng.randint(-3, 3) for _ in basis]) if t % 2 else random_skew(rng, g.dim)
            assert is_closed(g, w) == is_closed(g, pullback(w, phi))


class TestCocycleSpace:
    def test_abelian(self):
        assert len(cocycle_space(abelian(4))) == 6

    @pytest.mark.parametrize("tag, n", [("RH", 2), ("HEIS", 3)])
    def test_coboundary_matches_d_omega(self, tag, n):
        g = build_family(tag, n)
        D = coboundary_matrix(g)
        e = [unit_vector(g.dim, i) for i in range(g.dim)]
        for c, p in enumerate(skew_pairs(g.dim)):
            w = TwoForm.from_pairs(g.dim, {p: 1})
            for r, (i, j, k) in enumerate(basis_triples(g.dim)):
                assert D[r, c] == d_omega(g, w, e[i], e[j], e[k])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_rh_dimension(self, n):
        g = build_family("RH", n)
        assert len(cocycle_space(g)) == 2 * n - 1 == sympy_cocycle_dimension(g)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_heis_dimension(self, n):
        g = build_family("HEIS", n)
        expected = n * (2 * n - 1) - (2 * n - 3)
        assert len(cocycle_space(g)) == expected == sympy_cocycle_dimension(g)

    @pytest.mark.parametrize("tag, n", [("RH", 3), ("HEIS", 2), ("HEIS", 3)])
    def test_members_closed_and_closed_forms_in_span(self, tag, n):
        g = build_family(tag, n)
        basis = cocycle_space(g)
        assert all(is_closed(g, f) for f in basis)
        flat = [tuple(f.matrix[i, j] for i in range(g.dim) for j in range(i + 1, g.dim)) for f in basis]
        for t in range(20):
            # closed forms built without the basis: automorphism pullbacks
            rng = trial_rng(0, f"span{tag}{n}", t)
            w = pullback(rng.choice(basis), random_scaled_aut(rng, g))
            assert is_closed(g, w)
            v = tuple(w.matrix[i, j] for i in range(g.dim) for j in range(i + 1, g.dim))
            assert in_span(v, flat)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_rh_no_nondegenerate_cocycle(self, n):
        g = build_family("RH", n)
        basis = cocycle_space(g)
        for f in basis:
            assert all(f.matrix[i, j] == 0 for i in range(1, 2 * n) for j in range(1, 2 * n))
        for t in range(20):
            rng = trial_rng(0, f"rhspan{n}", t)
            w = combine(basis, [rng.randint(-5, 5) for _ in basis])
            assert rank(w.matrix) <= 2 < 2 * n

    def test_random_closed_sampler(self):
        g = build_family("HEIS", 3)
        w = random_closed_nondegenerate(trial_rng(0, "s", 0), g)
        assert is_closed(g, w) and is_nondegenerate(w)
