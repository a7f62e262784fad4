"""Shared fixtures and independent oracles.

The oracles below deliberately avoid the package's own linear algebra so
that agreement is meaningful: sympy for kernels and determinants, plain
nested lists and explicit structure-constant tensors for ``d omega``.
"""

from __future__ import annotations

import itertools
import random
import sys
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symplie.exact import Matrix
from symplie.lie import LieAlgebra

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


def structure_tensor(g: LieAlgebra) -> list[list[list[Fraction]]]:
    """``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""
    d = g.dim
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i, j, k, v in g.brackets:
        c[i][j][k] += v
        c[j][i][k] -= v
    return c


def brute_d_omega(c, W, x, y, z) -> Fraction:
    """``w(x,[y,z]) + w(z,[x,y]) + w(y,[z,x])`` by explicit index sums."""
    d = len(W)

    def br(a, b):
        return [sum(a[i] * b[j] * c[i][j][k] for i in range(d) for j in range(d)) for k in range(d)]

    def form(a, b):
        return sum(a[i] * W[i][j] * b[j] for i in range(d) for j in range(d))

    return form(x, br(y, z)) + form(z, br(x, y)) + form(y, br(z, x))


def sympy_cocycle_dimension(g: LieAlgebra) -> int:
    """``dim Z^2`` from a symbolic form solved with sympy."""
    d = g.dim
    c = structure_tensor(g)
    syms = {p: sympy.Symbol(f"a{p[0]}_{p[1]}") for p in itertools.combinations(range(d), 2)}

    def w(i, j):
        if i == j:
            return 0
        return syms[(i, j)] if i < j else -syms[(j, i)]

    def wv(i, vec):
        return sum(w(i, k) * sympy.Rational(vec[k].numerator, vec[k].denominator) for k in range(d))

    eqs = []
    for i, j, k in itertools.combinations(range(d), 3):
        eqs.append(wv(i, c[j][k]) + wv(k, c[i][j]) + wv(j, c[k][i]))
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(syms)
    A, _ = sympy.linear_eq_to_matrix(eqs, list(syms.values()))
    return len(syms) - A.rank()


def pfaffian(A) -> Fraction:
    """Pfaffian by expansion along the first row."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for j in range(1, n):
        if A[0][j]:
            keep = [k for k in range(n) if k not in (0, j)]
            minor = [[A[r][s] for s in keep] for r in keep]
            total += (-1) ** (j + 1) * A[0][j] * pfaffian(minor)
    return total


def sympy_matrix(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(a.numerator, a.denominator) for a in M.row(i)] for i in range(M.rows)]
    )


# hypothesis strategies

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def matrices(rows: int, cols: int | None = None):
    cols = rows if cols is None else cols
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(Matrix)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
