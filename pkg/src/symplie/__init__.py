"""Exact computations for left-invariant symplectic structures on Lie groups."""

from .errors import (
    DegenerateFormError,
    InputError,
    InvalidDimensionError,
    NotClosedProfileError,
    NotPermutationError,
    NotSymmetricError,
    PreconditionError,
    ShapeMismatchError,
    SingularMatrixError,
    SymplieError,
    UnsupportedFamilyError,
    VerificationError,
)
from .exact import Matrix, as_scalar, determinant, inverse, kernel_basis, lpu_decompose, rank, rref
from .forms import TwoForm, cocycle_space, d_omega, is_closed, is_nondegenerate, pullback
from .lie import Family, LieAlgebra, bracket, build_family, in_scaled_aut, is_automorphism
from .moduli import (
    Case,
    Closed,
    MilnorFrame,
    NotClosed,
    ReductionWitness,
    Representative,
    allowed_representatives,
    canonical_closed,
    classify_symplectic,
    lagrangian_ideal,
    milnor_frame,
    reduce,
)
from .subspaces import Predicates, Subspace, predicates
from .symplectic import (
    SymplecticContext,
    SymplecticQR,
    darboux_basis,
    is_symplectic,
    nonsingular_corner,
    permutation_split,
    standard_J,
    symplectic_qr,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
