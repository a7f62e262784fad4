"""Two-forms on a Lie algebra and the cocycle condition."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeMismatchError
from .exact import Matrix, Vector, as_scalar, dot, inverse, kernel_basis, rank, unit_vector, vector
from .lie import LieAlgebra, bracket


@dataclass(frozen=True)
class TwoForm:
    """Skew-symmetric matrix ``Omega`` with ``omega(x, y) = x^T Omega y``.

    Degenerate forms are allowed so that cocycles form a vector space.
    """

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_skew():
            raise ShapeMismatchError("two-form matrix must be square and skew-symmetric")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return dot(vector(x), self.matrix.apply(y))

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.matrix + other.matrix)

    def __mul__(self, c) -> "TwoForm":
        return TwoForm(self.matrix * c)

    __rmul__ = __mul__

    @classmethod
    def from_pairs(cls, dim: int, pairs) -> "TwoForm":
        """Build from ``{(i, j): value}`` with 0-based ``i < j``."""
        data = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), v in dict(pairs).items():
            if not 0 <= i < j < dim:
                raise ShapeMismatchError(f"bad pair ({i}, {j})")
            data[i][j] = as_scalar(v)
            data[j][i] = -data[i][j]
        return cls(Matrix(data))


def skew_pairs(dim: int) -> list[tuple[int, int]]:
    """Coordinates on skew forms: ``(i, j)`` with ``i < j``, lexicographic."""
    return list(itertools.combinations(range(dim), 2))


def is_nondegenerate(w: TwoForm) -> bool:
    return rank(w.matrix) == w.dim


def pullback(w: TwoForm, g: Matrix) -> TwoForm:
    """``g.omega = omega(g^{-1} ., g^{-1} .)``, matrix ``g^{-T} Omega g^{-1}``."""
    if g.shape != w.matrix.shape:
        raise ShapeMismatchError("transformation and form dimensions differ")
    gi = inverse(g)
    return TwoForm(gi.T @ w.matrix @ gi)


def d_omega(g: LieAlgebra, w: TwoForm, x: Sequence, y: Sequence, z: Sequence) -> Fraction:
    """``omega(x, [y, z]) + omega(z, [x, y]) + omega(y, [z, x])``."""
    x, y, z = vector(x), vector(y), vector(z)
    if not (len(x) == len(y) == len(z) == g.dim == w.dim):
        raise ShapeMismatchError("argument lengths must equal the algebra dimension")
    return w(x, bracket(g, y, z)) + w(z, bracket(g, x, y)) + w(y, bracket(g, z, x))


def basis_triples(dim: int):
    return itertools.combinations(range(dim), 3)


def first_nonclosed_triple(g: LieAlgebra, w: TwoForm) -> tuple[tuple[int, int, int], Fraction] | None:
    e = [unit_vector(g.dim, i) for i in range(g.dim)]
    for i, j, k in basis_triples(g.dim):
        v = d_omega(g, w, e[i], e[j], e[k])
        if v:
            return (i, j, k), v
    return None


def is_closed(g: LieAlgebra, w: TwoForm) -> bool:
    return first_nonclosed_triple(g, w) is None


def coboundary_matrix(g: LieAlgebra) -> Matrix:
    """Matrix of ``omega -> d omega``: rows are basis triples, columns are
    skew coordinates (both in lexicographic order)."""
    pairs = skew_pairs(g.dim)
    col = {p: c for c, p in enumerate(pairs)}
    rows = []
    for i, j, k in basis_triples(g.dim):
        row = [Fraction(0)] * len(pairs)
        # omega(e_p, [e_q, e_r]) summed cyclically
        for p, q, r in ((i, j, k), (k, i, j), (j, k, i)):
            for m, c in enumerate(g.basis_bracket(q, r)):
                if c and m != p:
                    row[col[(min(p, m), max(p, m))]] += c if p < m else -c
        rows.append(row)
    if not pairs:
        return Matrix.zeros(0, 0)
    return Matrix(rows, cols=len(pairs))


def cocycle_space(g: LieAlgebra) -> list[TwoForm]:
    """Basis of the closed 2-forms ``Z^2(g)``."""
    pairs = skew_pairs(g.dim)
    D = coboundary_matrix(g)
    if D.rows == 0:
        return [TwoForm.from_pairs(g.dim, {p: 1}) for p in pairs]
    out = []
    for k in kernel_basis(D):
        coeffs = k.column(0)
        out.append(TwoForm.from_pairs(g.dim, {p: c for p, c in zip(pairs, coeffs) if c}))
    return out


def combine(forms: Sequence[TwoForm], coeffs: Sequence) -> TwoForm:
    dim = forms[0].dim
    total = Matrix.zeros(dim)
    for f, c in zip(forms, coeffs):
        total = total + f.matrix * c
    return TwoForm(total)
