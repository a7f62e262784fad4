"""Random exact inputs for the property suites.

All samplers take a :class:`random.Random` so every trial is reproducible
from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import Matrix, rank
from .forms import TwoForm, cocycle_space, combine, is_nondegenerate
from .lie import LieAlgebra, pattern_zeros
from .symplectic import type1_lower, type1_upper, type2


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    # str seeds are hashed deterministically (sha512), unlike hash(tuple)
    return random.Random(f"{seed}/{suite}/{trial}")


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_matrix(rng: random.Random, rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix([[random_rational(rng) for _ in range(cols)] for _ in range(rows)])


def random_gl(rng: random.Random, dim: int) -> Matrix:
    while True:
        M = random_matrix(rng, dim)
        if rank(M) == dim:
            return M


def random_symmetric(rng: random.Random, n: int, bound: int = 3) -> Matrix:
    a = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    return Matrix([[a[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)])


def random_symplectic(rng: random.Random, n: int, rounds: int = 2) -> Matrix:
    """Product of random Type-1 and Type-2 generators."""
    S = type2(random_gl(rng, n))
    for _ in range(rounds):
        S = S @ type1_upper(random_symmetric(rng, n)) @ type1_lower(random_symmetric(rng, n))
    return S


def random_skew(rng: random.Random, dim: int, bound: int = 5) -> TwoForm:
    data = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            data[i][j] = Fraction(rng.randint(-bound, bound))
            data[j][i] = -data[i][j]
    return TwoForm(Matrix(data))


def random_nondegenerate(rng: random.Random, dim: int) -> TwoForm:
    while True:
        w = random_skew(rng, dim)
        if is_nondegenerate(w):
            return w


def random_closed_nondegenerate(
    rng: random.Random, g: LieAlgebra, basis: list[TwoForm] | None = None, max_tries: int = 1000
) -> TwoForm:
    """Integer combination (coefficients in [-5, 5]) of a cocycle basis,
    redrawn until nondegenerate."""
    basis = cocycle_space(g) if basis is None else basis
    for _ in range(max_tries):
        w = combine(basis, [rng.randint(-5, 5) for _ in basis])
        if is_nondegenerate(w):
            return w
    raise ValueError("no nondegenerate closed form found; the algebra may not be symplectic")


def random_scaled_aut(rng: random.Random, g: LieAlgebra) -> Matrix:
    """Random nonsingular matrix in the family's scaled automorphism pattern."""
    zeros = set(pattern_zeros(g.family, g.dim))
    while True:
        M = Matrix(
            [
                [0 if (i, j) in zeros else random_rational(rng, 3, 2) for j in range(g.dim)]
                for i in range(g.dim)
            ]
        )
        if rank(M) == g.dim:
            return M
