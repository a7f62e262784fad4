"""Double-coset reduction, Milnor frames and classification verdicts.

For a Lie algebra ``g`` with scaled automorphism group ``G = R^x Aut(g)``
and the symplectic group ``Sp``, every ``g0`` in ``GL(2n, Q)`` is moved inside
its double coset ``G g0 Sp`` to one of finitely many explicit
representatives.  Each reduction returns a witness ``(c_phi, S, rep)`` with
``c_phi @ g0 @ S == rep.matrix`` which is re-checked by multiplication
before it is handed out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateFormError,
    InputError,
    InvalidDimensionError,
    NotClosedProfileError,
    ShapeMismatchError,
    SingularMatrixError,
    UnsupportedFamilyError,
    VerificationError,
)
from .exact import Matrix, Vector, inverse, lpu_decompose, rank, unit_vector
from .forms import TwoForm, d_omega, first_nonclosed_triple, is_nondegenerate
from .lie import Family, LieAlgebra, build_family, in_scaled_aut, scale_factor, structure_in_basis
from .subspaces import Subspace
from .symplectic import (
    SplitResult,
    darboux_basis,
    full_cycle,
    is_symplectic,
    permutation_split,
    standard_J,
    symplectic_qr,
    triangularizing_symmetric,
    type1_upper,
    type2,
    type3,
)


class Case(str, enum.Enum):
    RH_IDENTITY = "RH_IDENTITY"
    H1 = "H1"  # I + k E_{2,n+1}
    H2 = "H2"  # diag(I, P) + k E_{2,n+1}
    H3 = "H3"  # diag(I, P) + E_{3,n+1}


@dataclass(frozen=True)
class Representative:
    family: Family
    case: Case
    n: int
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "case", Case(self.case))
        if self.case in (Case.H1, Case.H2):
            if self.k not in (0, 1):
                raise InputError("H1/H2 need k in {0, 1}")
        elif self.k is not None:
            raise InputError(f"{self.case.value} carries no k")
        if self.case in (Case.H1, Case.H3) and self.n <= 2:
            raise InvalidDimensionError(f"{self.case.value} needs n > 2")

    @property
    def tag(self) -> str:
        if self.case is Case.RH_IDENTITY:
            return "RH"
        return self.case.value if self.k is None else f"{self.case.value}_k{self.k}"

    @property
    def matrix(self) -> Matrix:
        n = self.n
        if self.case is Case.RH_IDENTITY:
            return Matrix.identity(2 * n)
        if self.case is Case.H1:
            base = Matrix.identity(2 * n)
        else:
            base = Matrix.blockdiag(Matrix.identity(n), full_cycle(n))
        if self.case is Case.H3:
            return base + Matrix.unit(2 * n, 2 * n, 2, n)
        return base + Matrix.unit(2 * n, 2 * n, 1, n) * self.k

    def expected_structure(self) -> dict[tuple[int, int], Vector]:
        """Brackets of the frame ``x_i`` this representative yields, in frame
        coordinates (0-based keys ``(a, b)``, ``a < b``; zero brackets omitted)."""
        n, dim = self.n, 2 * self.n
        e = lambda i: unit_vector(dim, i)  # noqa: E731
        comb = lambda *terms: tuple(sum((c * v[i] for c, v in terms), Fraction(0)) for i in range(dim))  # noqa: E731
        out: dict[tuple[int, int], Vector] = {}
        k = self.k or 0
        if self.case is Case.RH_IDENTITY:
            for j in range(1, dim):
                out[(0, j)] = e(j)
        elif self.case is Case.H1:
            out[(0, 1)] = e(dim - 1)
            if k:
                out[(0, n)] = comb((k, e(dim - 1)))
        elif self.case is Case.H2:
            out[(0, 1)] = comb((1, e(n)), (-k, e(1)))
            if k:
                out[(0, n)] = comb((k, e(n)), (-k * k, e(1)))
        else:
            out[(0, 1)] = comb((1, e(n)), (-1, e(2)))
        return out


def allowed_representatives(family: Family | str, n: int) -> list[Representative]:
    family = Family(family)
    if family is Family.RH:
        return [Representative(family, Case.RH_IDENTITY, n)]
    reps = [Representative(family, Case.H2, n, k) for k in (0, 1)]
    if n > 2:
        reps = [Representative(family, Case.H1, n, k) for k in (0, 1)] + reps
        reps.append(Representative(family, Case.H3, n))
    return reps


def canonical_closed(family: Family | str, n: int) -> Representative:
    """The representative whose Milnor frame carries the closed form."""
    family = Family(family)
    if family is Family.RH:
        if n != 1:
            raise NotClosedProfileError("RH admits no closed nondegenerate form for n > 1")
        return Representative(family, Case.RH_IDENTITY, 1)
    return Representative(family, Case.H2, n, 0)


@dataclass(frozen=True)
class ReductionWitness:
    """``c_phi @ g @ S == rep.matrix`` with ``c_phi`` in ``R^x Aut`` and ``S`` symplectic."""

    c_phi: Matrix
    S: Matrix
    rep: Representative

    def check(self, g: Matrix) -> bool:
        alg = build_family(self.rep.family, self.rep.n)
        return (
            self.c_phi @ g @ self.S == self.rep.matrix
            and in_scaled_aut(alg, self.c_phi)
            and is_symplectic(self.rep.n, self.S)
        )

    def verify(self, g: Matrix) -> "ReductionWitness":
        if not self.check(g):
            raise VerificationError(f"reduction witness for {self.rep.tag} failed its identity")
        return self


class _Chain:
    """Running product ``left @ g @ right`` of a reduction."""

    def __init__(self, g: Matrix):
        self.left = Matrix.identity(g.rows)
        self.right = Matrix.identity(g.rows)
        self.cur = g

    def on_left(self, M: Matrix) -> None:
        self.left = M @ self.left
        self.cur = M @ self.cur

    def on_right(self, S: Matrix) -> None:
        self.right = self.right @ S
        self.cur = self.cur @ S

    def conjugate(self, V: Matrix, W: Matrix) -> None:
        # left diag(V, W), right diag(V^{-1}, V^T)
        self.on_left(Matrix.blockdiag(V, W))
        self.on_right(type2(inverse(V)))


def _check_input(n: int, g: Matrix) -> None:
    if g.shape != (2 * n, 2 * n):
        raise ShapeMismatchError(f"expected a {2 * n}x{2 * n} matrix, got {g.shape}")
    if rank(g) < 2 * n:
        raise SingularMatrixError("matrix is singular")


def reduce_rh(n: int, g: Matrix) -> ReductionWitness:
    """Reduce ``g`` to the identity (the RH action is transitive).

    ``g @ S`` from the symplectic QR has first row ``(1, 0, ..., 0)`` and so
    lies in the scaled automorphism group; its inverse is ``c_phi``.
    """
    build_family(Family.RH, n)
    _check_input(n, g)
    S = symplectic_qr(n, g).S
    c_phi = inverse(g @ S)
    rep = Representative(Family.RH, Case.RH_IDENTITY, n)
    return ReductionWitness(c_phi, S, rep).verify(g)


def _normalise_to_permutation_block(ch: _Chain, n: int) -> SplitResult:
    """Bring ``ch.cur`` to ``[[I, T], [0, P]]`` with ``T`` strictly lower and
    ``P`` the identity or the full cycle."""
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    ch.on_right(symplectic_qr(n, ch.cur).S)
    C = ch.cur[n:, :n]
    ch.on_left(Matrix.block([[I, Z], [-C, I]]))
    L, U, _ = lpu_decompose(ch.cur[n:, n:])
    ch.on_left(Matrix.blockdiag(U.T, L))
    ch.on_right(type2(inverse(U.T)))
    K1, K2, tag = permutation_split(ch.cur[n:, n:], n)
    ch.on_left(Matrix.blockdiag(K1, K2))
    ch.on_right(type3(K1.T))
    ch.on_right(type1_upper(triangularizing_symmetric(ch.cur[:n, n:])))
    return tag


def _scale_second(n: int, x: Fraction) -> Matrix:
    return Matrix.diag([1, 1 / x] + [1] * (n - 2))


def _transport(P: Matrix, V: Matrix) -> Matrix:
    """``P V^{-T} P^T``: the lower-block partner of a conjugation by ``V``."""
    return P @ inverse(V).T @ P.T


def _full_cycle_case(ch: _Chain, n: int) -> Representative:
    I = Matrix.identity(n)
    P = full_cycle(n)
    T = ch.cur[:n, n:]
    A = Matrix.block([[Matrix.zeros(1, n)], [Matrix.block([[-T[1:, 1:], Matrix.zeros(n - 1, 1)]])]])
    ch.on_left(Matrix.block([[I, A], [Matrix.zeros(n), I]]))
    x = ch.cur.column(n)[:n]
    if x[1] != 0:
        V1 = _scale_second(n, x[1])
        ch.conjugate(V1, _transport(P, V1))
        x = ch.cur.column(n)[:n]
        T1 = I - sum((Matrix.unit(n, n, i, 1) * x[i] for i in range(2, n)), Matrix.zeros(n))
        ch.conjugate(T1, _transport(P, T1))
        return Representative(Family.HEIS, Case.H2, n, 1)
    if n == 2:
        return Representative(Family.HEIS, Case.H2, n, 0)
    y = x[2:]
    if not any(y):
        return Representative(Family.HEIS, Case.H2, n, 0)
    p = next(i for i, v in enumerate(y) if v)
    m = n - 2
    completion = [y] + [unit_vector(m, j) for j in range(m) if j != p]
    U = inverse(Matrix.from_columns(completion))
    H1 = Matrix.blockdiag(Matrix.identity(2), U)
    ch.conjugate(H1, _transport(P, H1))
    return Representative(Family.HEIS, Case.H3, n)


def reduce_heis(n: int, g: Matrix) -> ReductionWitness:
    """Reduce ``g`` to one of the HEIS representatives.

    ``n == 2`` lands on H2 (``k`` in {0, 1}); ``n > 2`` on H1, H2 (each with
    ``k`` in {0, 1}) or H3.
    """
    build_family(Family.HEIS, n)
    _check_input(n, g)
    ch = _Chain(g)
    tag = _normalise_to_permutation_block(ch, n)
    I = Matrix.identity(n)
    if tag is SplitResult.IDENTITY and n == 2:
        swap = full_cycle(2)
        ch.on_left(Matrix.blockdiag(swap, I))
        ch.on_right(type3(swap))
        ch.on_right(type1_upper(triangularizing_symmetric(ch.cur[:n, n:])))
        tag = SplitResult.FULL_CYCLE
    if tag is SplitResult.FULL_CYCLE:
        rep = _full_cycle_case(ch, n)
    else:
        T = ch.cur[:n, n:]
        t = T[1, 0]
        ch.on_left(Matrix.block([[I, -T.replace(1, 0, 0)], [Matrix.zeros(n), I]]))
        if t != 0:
            V1 = _scale_second(n, t)
            ch.conjugate(V1, inverse(V1).T)
        rep = Representative(Family.HEIS, Case.H1, n, int(t != 0))
    if ch.cur != rep.matrix:
        raise VerificationError(f"reduction did not land on {rep.tag}")
    return ReductionWitness(ch.left, ch.right, rep).verify(g)


def reduce(family: Family | str, n: int, g: Matrix) -> ReductionWitness:
    family = Family(family)
    if family is Family.RH:
        return reduce_rh(n, g)
    if family is Family.HEIS:
        return reduce_heis(n, g)
    raise UnsupportedFamilyError("reductions exist only for RH and HEIS")


@dataclass(frozen=True)
class MilnorFrame:
    """Columns of ``basis`` are a symplectic basis for ``t * omega`` whose
    brackets follow ``profile``."""

    t: Fraction
    basis: Matrix
    profile: Representative

    def check(self, w: TwoForm) -> bool:
        n = self.profile.n
        alg = build_family(self.profile.family, n)
        return (
            self.t > 0
            and (self.basis.T @ w.matrix @ self.basis) * self.t == standard_J(n)
            and structure_in_basis(alg, self.basis) == self.profile.expected_structure()
        )

    def vectors(self) -> list[Vector]:
        return self.basis.columns()


def _leading_scale(w: TwoForm) -> Fraction:
    """Absolute value of the first nonzero upper-triangle entry."""
    M = w.matrix
    return next(abs(M[i, j]) for i in range(w.dim) for j in range(i + 1, w.dim) if M[i, j])


def milnor_frame(family: Family | str, n: int, w: TwoForm) -> MilnorFrame:
    """A Milnor frame for ``w``.

    With ``B0`` a symplectic basis of ``w`` and ``c_phi @ B0 @ S == u`` the
    reduction of ``B0``, ``(c_phi)^{-1} = c * phi`` for an automorphism
    ``phi``; the columns of ``phi @ u`` form a symplectic basis for
    ``c**2 * w`` and inherit the brackets of the columns of ``u``.

    The form is first divided by the absolute value of its leading entry, so
    ``milnor_frame(lam * w)`` has the same basis as ``milnor_frame(w)`` and
    ``t`` divided by ``lam`` for every ``lam > 0``.
    """
    family = Family(family)
    alg = build_family(family, n)
    if w.dim != alg.dim:
        raise ShapeMismatchError("form and algebra dimensions differ")
    if not is_nondegenerate(w):
        raise DegenerateFormError("form is degenerate")
    lam = _leading_scale(w)
    B0 = darboux_basis(n, w.matrix / lam)
    wit = reduce(family, n, B0)
    M = inverse(wit.c_phi)
    c = scale_factor(alg, M)
    B = (M / c) @ wit.rep.matrix
    pairing = B.T @ w.matrix @ B
    t = 1 / pairing[0, n]
    frame = MilnorFrame(t, B, wit.rep)
    if not frame.check(w):
        raise VerificationError("Milnor frame failed its identity")
    return frame


@dataclass(frozen=True)
class Closed:
    profile: Representative
    frame: MilnorFrame

    closed = True


@dataclass(frozen=True)
class NotClosed:
    triple: tuple[int, int, int]  # 0-based basis indices
    value: Fraction

    closed = False


def classify_symplectic(family: Family | str, n: int, w: TwoForm) -> Closed | NotClosed:
    """Closed verdict with the canonical Milnor frame, or the first basis
    triple ``i < j < k`` (lexicographic) on which ``d omega`` is nonzero."""
    family = Family(family)
    alg = build_family(family, n)
    if w.dim != alg.dim:
        raise ShapeMismatchError("form and algebra dimensions differ")
    if not is_nondegenerate(w):
        raise DegenerateFormError("form is degenerate")
    hit = first_nonclosed_triple(alg, w)
    if hit is not None:
        (i, j, k), v = hit
        e = [unit_vector(alg.dim, a) for a in (i, j, k)]
        if d_omega(alg, w, *e) != v or v == 0:
            raise VerificationError("non-closedness witness did not re-check")
        return NotClosed((i, j, k), v)
    frame = milnor_frame(family, n, w)
    if frame.profile != canonical_closed(family, n):
        raise VerificationError(f"closed form reduced to non-canonical profile {frame.profile.tag}")
    return Closed(frame.profile, frame)


def lagrangian_ideal(family: Family | str, n: int, frame: MilnorFrame) -> Subspace:
    """``span{x_2, ..., x_{n+1}}`` for HEIS, ``span{x_2}`` for RH with ``n == 1``."""
    family = Family(family)
    canonical = canonical_closed(family, n)
    if frame.profile != canonical:
        raise NotClosedProfileError(f"profile {frame.profile.tag} is not the closed one")
    cols = frame.vectors()
    return Subspace(2 * n, tuple(cols[1 : n + 1]))
