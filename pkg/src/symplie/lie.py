"""Lie algebras given by structure constants.

Structure constants are stored sparsely as ``(i, j, k, c)`` with ``i < j``
(0-based), meaning ``[e_i, e_j]`` has ``e_k``-coefficient ``c``; the other
ordering follows from antisymmetry.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    InvalidDimensionError,
    PreconditionError,
    ShapeMismatchError,
    SingularMatrixError,
    UnsupportedFamilyError,
)
from .exact import Matrix, Vector, as_scalar, determinant, inverse, unit_vector, vector


class Family(str, enum.Enum):
    RH = "RH"  # [e1, ek] = ek, k = 2..2n
    HEIS = "HEIS"  # [e1, e2] = e_{2n}
    GENERIC = "GENERIC"


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    brackets: tuple = ()
    family: Family = Family.GENERIC
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table: dict = {}
        for i, j, k, c in self.brackets:
            if not (0 <= i < j < self.dim and 0 <= k < self.dim):
                raise ShapeMismatchError(f"bad bracket index ({i}, {j}, {k})")
            c = as_scalar(c)
            if c:
                table.setdefault((i, j), {})
                table[(i, j)][k] = table[(i, j)].get(k, Fraction(0)) + c
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(
            self,
            "brackets",
            tuple((i, j, k, c) for (i, j), row in sorted(table.items()) for k, c in sorted(row.items()) if c),
        )
        object.__setattr__(self, "_table", table)

    @property
    def n(self) -> int:
        return self.dim // 2

    def basis_bracket(self, i: int, j: int) -> Vector:
        """``[e_i, e_j]`` as a vector."""
        if i == j:
            return (Fraction(0),) * self.dim
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        out = [Fraction(0)] * self.dim
        for k, c in self._table.get((i, j), {}).items():
            out[k] = sign * c
        return tuple(out)


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    x, y = vector(x), vector(y)
    if len(x) != g.dim or len(y) != g.dim:
        raise ShapeMismatchError(f"vectors must have length {g.dim}")
    out = [Fraction(0)] * g.dim
    for i, j, k, c in g.brackets:
        coeff = x[i] * y[j] - x[j] * y[i]
        if coeff:
            out[k] += c * coeff
    return tuple(out)


def build_family(tag: Family | str, n: int) -> LieAlgebra:
    tag = Family(tag)
    if tag is Family.RH:
        if n < 1:
            raise InvalidDimensionError("RH family needs n >= 1")
        return LieAlgebra(2 * n, tuple((0, k, k, 1) for k in range(1, 2 * n)), Family.RH)
    if tag is Family.HEIS:
        if n < 2:
            raise InvalidDimensionError("HEIS family needs n >= 2 (2n - 3 >= 1)")
        return LieAlgebra(2 * n, ((0, 1, 2 * n - 1, 1),), Family.HEIS)
    raise UnsupportedFamilyError("only RH and HEIS have a built-in table")


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, (), Family.GENERIC)


def check_jacobi(g: LieAlgebra) -> bool:
    e = [unit_vector(g.dim, i) for i in range(g.dim)]
    for a, b, c in itertools.combinations(range(g.dim), 3):
        x, y, z = e[a], e[b], e[c]
        s = [
            p + q + r
            for p, q, r in zip(
                bracket(g, bracket(g, x, y), z),
                bracket(g, bracket(g, y, z), x),
                bracket(g, bracket(g, z, x), y),
            )
        ]
        if any(s):
            return False
    return True


def is_automorphism(g: LieAlgebra, phi: Matrix) -> bool:
    if phi.shape != (g.dim, g.dim):
        raise ShapeMismatchError(f"expected {g.dim}x{g.dim}, got {phi.shape}")
    if determinant(phi) == 0:
        raise SingularMatrixError("automorphism candidate is singular")
    cols = phi.columns()
    for i, j in itertools.combinations(range(g.dim), 2):
        if phi.apply(g.basis_bracket(i, j)) != bracket(g, cols[i], cols[j]):
            return False
    return True


def pattern_zeros(family: Family, dim: int) -> Iterable[tuple[int, int]]:
    if family is Family.RH:
        # first row is (*, 0, ..., 0)
        yield from ((0, j) for j in range(1, dim))
    elif family is Family.HEIS:
        # block sizes (2, 2n-3, 1): top two rows vanish right of column 2,
        # last column vanishes above the corner
        yield from ((i, j) for i in range(2) for j in range(2, dim))
        yield from ((i, dim - 1) for i in range(2, dim - 1))
    else:
        raise UnsupportedFamilyError("no automorphism pattern for GENERIC algebras")


def in_scaled_aut(g: LieAlgebra, M: Matrix) -> bool:
    """Whether ``M`` lies in ``R^x Aut(g)``, judged by the family's block pattern."""
    zeros = list(pattern_zeros(g.family, g.dim))
    if M.shape != (g.dim, g.dim):
        return False
    if any(M[i, j] != 0 for i, j in zeros):
        return False
    return determinant(M) != 0


def scale_factor(g: LieAlgebra, M: Matrix) -> Fraction:
    """The ``c`` with ``M / c`` an automorphism, for ``M`` in the pattern.

    RH: automorphisms have (1,1) entry 1, so ``c = M[0, 0]``.  HEIS: an
    automorphism's corner equals the determinant of its upper-left 2x2 block;
    both scale differently under ``c``, which pins ``c = det2 / corner``.
    """
    if not in_scaled_aut(g, M):
        raise PreconditionError("matrix is not in the scaled automorphism pattern")
    if g.family is Family.RH:
        return M[0, 0]
    d = g.dim - 1
    return (M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]) / M[d, d]


def structure_in_basis(g: LieAlgebra, B: Matrix) -> dict[tuple[int, int], Vector]:
    """Nonzero brackets of the columns of ``B`` expressed in that basis.

    Keys are ``(a, b)`` with ``a < b``; values are coordinate vectors.
    """
    Binv = inverse(B)
    cols = B.columns()
    out = {}
    for a, b in itertools.combinations(range(g.dim), 2):
        v = bracket(g, cols[a], cols[b])
        if any(v):
            out[(a, b)] = Binv.apply(v)
    return out
