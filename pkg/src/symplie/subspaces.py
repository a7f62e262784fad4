"""Subspaces: omega-orthogonal complements and the isotropic / Lagrangian /
subalgebra / ideal predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeMismatchError
from .exact import Matrix, Vector, in_span, null_space, rank, unit_vector, vector
from .forms import TwoForm
from .lie import LieAlgebra, bracket


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple = ()

    def __post_init__(self):
        basis = tuple(vector(v) for v in self.basis)
        if any(len(v) != self.ambient_dim for v in basis):
            raise ShapeMismatchError("basis vector has the wrong length")
        if basis and rank(Matrix.from_columns(basis)) != len(basis):
            raise ShapeMismatchError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        """Subspace spanned by ``vectors`` (dependent vectors are dropped)."""
        kept: list[Vector] = []
        for v in vectors:
            v = vector(v)
            if any(v) and not in_span(v, kept):
                kept.append(v)
        return cls(ambient_dim, tuple(kept))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return in_span(vector(v), self.basis)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def same_as(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self.contains_subspace(other)


def omega_complement(w: TwoForm, W: Subspace) -> Subspace:
    """``{v : omega(v, u) = 0 for all u in W}``."""
    if not W.basis:
        return Subspace(w.dim, tuple(unit_vector(w.dim, i) for i in range(w.dim)))
    # omega(v, u) = v . (Omega u)
    A = Matrix([w.matrix.apply(u) for u in W.basis])
    return Subspace(w.dim, tuple(null_space(A)))


@dataclass(frozen=True)
class Predicates:
    is_subalgebra: bool
    is_ideal: bool
    is_isotropic: bool
    is_lagrangian: bool


def is_isotropic(w: TwoForm, W: Subspace) -> bool:
    return all(w(u, v) == 0 for u in W.basis for v in W.basis)


def is_lagrangian(w: TwoForm, W: Subspace) -> bool:
    return omega_complement(w, W).same_as(W)


def is_subalgebra(g: LieAlgebra, W: Subspace) -> bool:
    B = W.basis
    return all(bracket(g, B[a], B[b]) in W for a in range(len(B)) for b in range(a + 1, len(B)))


def is_ideal(g: LieAlgebra, W: Subspace) -> bool:
    e = [unit_vector(g.dim, i) for i in range(g.dim)]
    return all(bracket(g, u, x) in W for u in W.basis for x in e)


def predicates(g: LieAlgebra, w: TwoForm, W: Subspace) -> Predicates:
    return Predicates(
        is_subalgebra=is_subalgebra(g, W),
        is_ideal=is_ideal(g, W),
        is_isotropic=is_isotropic(w, W),
        is_lagrangian=is_lagrangian(w, W),
    )
