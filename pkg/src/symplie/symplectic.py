"""Symplectic group toolkit.

Conventions: a 2-form has matrix ``Omega`` with ``omega(x, y) = x^T Omega y``,
and the canonical form on ``Q^{2n}`` pairs ``e_i`` with ``e_{n+i}``, so its
matrix is ``J = [[0, I], [-I, 0]]``.  A matrix ``A`` is symplectic when
``A^T J A == J``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DegenerateFormError,
    NotPermutationError,
    NotSymmetricError,
    PreconditionError,
    ShapeMismatchError,
    SingularMatrixError,
    VerificationError,
)
from .exact import Matrix, dot, inverse, rank, rref


@lru_cache(maxsize=None)
def standard_J(n: int) -> Matrix:
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    return Matrix.block([[Z, I], [-I, Z]])


@dataclass(frozen=True)
class SymplecticContext:
    """Half-dimension ``n`` together with the canonical matrix ``J``."""

    n: int

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def J(self) -> Matrix:
        return standard_J(self.n)

    @property
    def omega0(self):
        from .forms import TwoForm

        return TwoForm(self.J)


def _half(M: Matrix) -> int:
    if not M.is_square or M.rows % 2:
        raise ShapeMismatchError(f"expected a 2n x 2n matrix, got {M.shape}")
    return M.rows // 2


def is_symplectic(ctx: SymplecticContext | int, A: Matrix) -> bool:
    n = ctx.n if isinstance(ctx, SymplecticContext) else ctx
    if A.shape != (2 * n, 2 * n):
        raise ShapeMismatchError(f"expected {2 * n}x{2 * n}, got {A.shape}")
    J = standard_J(n)
    return A.T @ J @ A == J


class GeneratorKind(enum.Enum):
    TYPE1_UPPER = "type1-upper"
    TYPE1_LOWER = "type1-lower"
    TYPE2 = "type2"
    TYPE3 = "type3"


def build_generator(ctx: SymplecticContext | int, kind: GeneratorKind, payload: Matrix) -> Matrix:
    """One of the standard symplectic block matrices.

    ``TYPE1_UPPER``/``TYPE1_LOWER`` take a symmetric ``C`` and give
    ``[[I, C], [0, I]]`` / ``[[I, 0], [C, I]]``; ``TYPE2`` takes an invertible
    ``A`` and gives ``diag(A, A^{-T})``; ``TYPE3`` takes a permutation ``P`` and
    gives ``diag(P, P)``.
    """
    n = ctx.n if isinstance(ctx, SymplecticContext) else ctx
    if payload.shape != (n, n):
        raise ShapeMismatchError(f"payload must be {n}x{n}, got {payload.shape}")
    I, Z = Matrix.identity(n), Matrix.zeros(n)
    kind = GeneratorKind(kind)
    if kind in (GeneratorKind.TYPE1_UPPER, GeneratorKind.TYPE1_LOWER):
        if not payload.is_symmetric():
            raise NotSymmetricError("Type-1 payload must be symmetric")
        if kind is GeneratorKind.TYPE1_UPPER:
            return Matrix.block([[I, payload], [Z, I]])
        return Matrix.block([[I, Z], [payload, I]])
    if kind is GeneratorKind.TYPE2:
        return Matrix.blockdiag(payload, inverse(payload).T)
    if not payload.is_permutation():
        raise NotPermutationError("Type-3 payload must be a permutation matrix")
    return Matrix.blockdiag(payload, payload)


def type1_upper(C: Matrix) -> Matrix:
    return build_generator(C.rows, GeneratorKind.TYPE1_UPPER, C)


def type1_lower(C: Matrix) -> Matrix:
    return build_generator(C.rows, GeneratorKind.TYPE1_LOWER, C)


def type2(A: Matrix) -> Matrix:
    return build_generator(A.rows, GeneratorKind.TYPE2, A)


def type3(P: Matrix) -> Matrix:
    return build_generator(P.rows, GeneratorKind.TYPE3, P)


def _full_rank_normalizer(A: Matrix) -> tuple[Matrix, Matrix, int]:
    """Invertible ``g1, g2`` with ``g1 @ A @ g2 == diag(I_r, 0)``."""
    n = A.rows
    aug = Matrix.block([[A, Matrix.identity(n)]])
    R, pivots = rref(aug)
    pivots = [p for p in pivots if p < n]
    r = len(pivots)
    g1 = R[:, n:]
    RA = R[:, :n]
    # permute pivot columns to the front
    order = pivots + [c for c in range(n) if c not in pivots]
    Q = Matrix.from_columns([[Fraction(int(i == c)) for i in range(n)] for c in order])
    X = (RA @ Q)[:r, r:]
    shear = Matrix.block(
        [[Matrix.identity(r), -X], [Matrix.zeros(n - r, r), Matrix.identity(n - r)]]
    )
    return g1, Q @ shear, r


def _corner(M: Matrix, n: int) -> Matrix:
    return M[:n, :n]


def rank_boost_step(M: Matrix) -> Matrix:
    """A symplectic ``S`` such that the upper-left block of ``M @ S`` has
    strictly larger rank than that of ``M`` (which must be rank-deficient)."""
    n = _half(M)
    A = _corner(M, n)
    g1, g2, r = _full_rank_normalizer(A)
    if r == n:
        raise PreconditionError("corner already nonsingular")
    S1 = type2(g2)
    K = Matrix.blockdiag(g1, Matrix.identity(n))
    M1 = K @ M @ S1
    alpha = M1[r:n, n : n + r]
    beta = M1[r:n, n + r :]
    S = S1
    if beta.is_zero():
        j = next((c for c in range(r) if any(alpha.column(c))), None)
        if j is None:
            raise SingularMatrixError("matrix is singular")
        gamma = Matrix.unit(r, n - r, j, 0)
        shear = Matrix.block(
            [[Matrix.identity(r), Matrix.zeros(r, n - r)], [-gamma.T, Matrix.identity(n - r)]]
        )
        S = S @ type2(shear)
    C = Matrix.blockdiag(Matrix.zeros(r), Matrix.identity(n - r))
    return S @ type1_lower(C)


def nonsingular_corner(ctx: SymplecticContext | int, M: Matrix) -> Matrix:
    """Symplectic ``S`` with the upper-left ``n x n`` block of ``M @ S`` invertible.

    Each rank-boost pass raises the corner rank by at least one, so at most
    ``n`` passes are needed.  Raises :class:`SingularMatrixError` for
    singular ``M``.
    """
    n = _half(M)
    if rank(M) < 2 * n:
        raise SingularMatrixError("matrix is singular")
    S = Matrix.identity(2 * n)
    cur = M
    r = rank(_corner(cur, n))
    for _ in range(n):
        if r == n:
            break
        step = rank_boost_step(cur)
        S = S @ step
        cur = M @ S
        new_r = rank(_corner(cur, n))
        if new_r <= r:
            raise VerificationError("rank boost did not increase the corner rank")
        r = new_r
    if r != n:
        raise VerificationError("corner still singular after n passes")
    return S


@dataclass(frozen=True)
class SymplecticQR:
    """``product == M @ S == [[I_n, T], [*, *]]`` with ``T`` strictly lower."""

    S: Matrix
    T: Matrix
    product: Matrix


def triangularizing_symmetric(B: Matrix) -> Matrix:
    """The symmetric ``C`` for which ``C + B`` is strictly lower triangular.

    ``C`` takes ``-B`` on and above the diagonal and is mirrored below.
    """
    n = B.rows
    return Matrix(
        [[-B[min(i, j), max(i, j)] for j in range(n)] for i in range(n)]
    )


def symplectic_qr(ctx: SymplecticContext | int, M: Matrix) -> SymplecticQR:
    n = _half(M)
    S1 = nonsingular_corner(n, M)
    M1 = M @ S1
    S2 = type2(inverse(_corner(M1, n)))
    M2 = M1 @ S2
    S3 = type1_upper(triangularizing_symmetric(M2[:n, n:]))
    S = S1 @ S2 @ S3
    product = M @ S
    return SymplecticQR(S=S, T=product[:n, n:], product=product)


def check_qr(M: Matrix, qr: SymplecticQR) -> bool:
    n = _half(M)
    return (
        is_symplectic(n, qr.S)
        and M @ qr.S == qr.product
        and qr.product[:n, :n] == Matrix.identity(n)
        and qr.product[:n, n:] == qr.T
        and qr.T.is_lower_triangular(strict=True)
    )


def full_cycle(n: int) -> Matrix:
    """Permutation matrix sending ``e_1 -> e_n`` and ``e_j -> e_{j-1}``.

    Rows ``1..n-1`` are ``[0 | I_{n-1}]`` and the last row is ``[1, 0, ..., 0]``.
    """
    cols = [n - 1] + list(range(n - 1))
    return Matrix.from_columns([[Fraction(int(i == c)) for i in range(n)] for c in cols])


def _transposition(n: int, a: int, b: int) -> Matrix:
    order = list(range(n))
    order[a], order[b] = order[b], order[a]
    return Matrix.from_columns([[Fraction(int(i == c)) for i in range(n)] for c in order])


class SplitResult(enum.Enum):
    IDENTITY = "identity"
    FULL_CYCLE = "full-cycle"


def permutation_split(P: Matrix, n: int | None = None) -> tuple[Matrix, Matrix, SplitResult]:
    """Normalise a permutation ``P`` to ``I_n`` or :func:`full_cycle`.

    Returns ``(K1, K2, tag)`` where ``K1 = diag(2x2 perm, (n-2)x(n-2) perm)``,
    ``K2 = diag((n-1)x(n-1) perm, 1)`` and ``K2 @ P @ K1.T`` is the matrix named
    by ``tag``.  When the 1 in the last row of ``P`` sits in one of the first
    two columns the target is the full cycle, otherwise the identity.  For
    ``n == 2`` the identity is left as it is.
    """
    if not P.is_permutation():
        raise NotPermutationError("expected a permutation matrix")
    n = P.rows if n is None else n
    if P.rows != n or n < 2:
        raise ShapeMismatchError("permutation_split needs an n x n matrix with n >= 2")
    c = next(j for j in range(n) if P[n - 1, j] == 1)
    I = Matrix.identity
    if n == 2 and c == 1:
        return I(2), I(2), SplitResult.IDENTITY
    if c < 2:
        K1 = Matrix.blockdiag(I(2) if c == 0 else _transposition(2, 0, 1), I(n - 2))
        target, tag = full_cycle(n), SplitResult.FULL_CYCLE
    else:
        K1 = Matrix.blockdiag(I(2), _transposition(n - 2, c - 2, n - 3))
        target, tag = I(n), SplitResult.IDENTITY
    P1 = P @ K1.T
    K2 = target @ P1.T
    return K1, K2, tag


def _pair(Omega: Matrix, x, y) -> Fraction:
    return dot(x, Omega.apply(y))


def darboux_basis(ctx: SymplecticContext | int | None, Omega) -> Matrix:
    """Columns ``b_1..b_2n`` with ``B^T Omega B == J`` (symplectic Gram-Schmidt).

    ``Omega`` may be a :class:`~symplie.forms.TwoForm` or its matrix.  The
    first remaining vector is paired with the first remaining vector it
    pairs nontrivially with; both are then split off from the rest.
    """
    Omega = getattr(Omega, "matrix", Omega)
    n = _half(Omega)
    if not Omega.is_skew():
        raise ShapeMismatchError("form matrix must be skew-symmetric")
    dim = 2 * n
    remaining = [Matrix.identity(dim).column(i) for i in range(dim)]
    firsts, seconds = [], []
    while remaining:
        u = remaining.pop(0)
        if not any(u):
            continue
        k = next((i for i, v in enumerate(remaining) if _pair(Omega, u, v) != 0), None)
        if k is None:
            raise DegenerateFormError("form is degenerate")
        v = remaining.pop(k)
        s = _pair(Omega, u, v)
        v = tuple(a / s for a in v)
        firsts.append(u)
        seconds.append(v)
        projected = []
        for w in remaining:
            a = _pair(Omega, w, v)
            b = _pair(Omega, w, u)
            projected.append(tuple(wi - a * ui + b * vi for wi, ui, vi in zip(w, u, v)))
        remaining = projected
    if len(firsts) != n:
        raise DegenerateFormError("form is degenerate")
    B = Matrix.from_columns(firsts + seconds)
    if B.T @ Omega @ B != standard_J(n):
        raise VerificationError("symplectic basis check failed")
    return B
