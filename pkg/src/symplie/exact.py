"""Dense matrices over the rationals.

Every entry is a :class:`fractions.Fraction`, so all arithmetic is exact and
every identity checked elsewhere in the package is an equality, never a
tolerance.  Matrices are immutable; vectors are plain tuples of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ShapeMismatchError, SingularMatrixError

Vector = tuple  # tuple[Fraction, ...]


def as_scalar(x) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Integers, Fractions and strings such as ``"-3/4"`` are accepted.  Floats
    are refused: silently converting a binary float would defeat the point.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def unit_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(dim))


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatchError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        # trusted constructor: rows already tuples of Fractions
        m = cls.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        m._hash = None
        return m

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Iterable) -> "Matrix":
        d = vector(entries)
        n = len(d)
        z = Fraction(0)
        return cls._raw(
            tuple(tuple(d[i] if i == j else z for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [vector(c) for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls._raw(tuple(zip(*columns)), len(columns))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "Matrix":
        """The matrix unit with a single 1 at ``(i, j)`` (0-based)."""
        data = [[Fraction(0)] * cols for _ in range(rows)]
        data[i][j] = Fraction(1)
        return cls._raw(tuple(map(tuple, data)), cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        out = []
        cols = None
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ShapeMismatchError("block row heights differ")
            for i in range(height):
                out.append(sum((b._data[i] for b in brow), ()))
            width = sum(b.cols for b in brow)
            if cols is not None and cols != width:
                raise ShapeMismatchError("block column widths differ")
            cols = width
        return cls._raw(tuple(out), cols or 0)

    @classmethod
    def blockdiag(cls, *mats: "Matrix") -> "Matrix":
        n = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        z = Fraction(0)
        out = []
        offset = 0
        for m in mats:
            for row in m._data:
                out.append((z,) * offset + row + (z,) * (c - offset - m.cols))
            offset += m.cols
        return cls._raw(tuple(out), c) if out else cls.zeros(n, c)

    # -- access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, int) and isinstance(j, int):
            return self._data[i][j]
        rs = range(self.rows)[i] if isinstance(i, slice) else [range(self.rows)[i]]
        cs = range(self.cols)[j] if isinstance(j, slice) else [range(self.cols)[j]]
        return Matrix._raw(tuple(tuple(self._data[a][b] for b in cs) for a in rs), len(cs))

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def replace(self, i: int, j: int, value) -> "Matrix":
        data = [list(r) for r in self._data]
        data[i][j] = as_scalar(value)
        return Matrix._raw(tuple(map(tuple, data)), self.cols)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._data)), self.rows) if self.rows else Matrix.zeros(self.cols, 0)

    # -- arithmetic -----------------------------------------------------------

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        c = as_scalar(scalar)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Matrix":
        c = as_scalar(scalar)
        if c == 0:
            raise ZeroDivisionError("matrix divided by zero")
        return self * (1 / c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other._data))
        z = Fraction(0)
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), z) for c in cols))
        return Matrix._raw(tuple(out), other.cols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``self @ v`` for a tuple vector."""
        v = vector(v)
        if len(v) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(dot(r, v) for r in self._data)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    # -- predicates -----------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_skew(self) -> bool:
        return self.is_square and self == -self.T

    def is_lower_triangular(self, strict: bool = False) -> bool:
        return all(
            self._data[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if (j >= i if strict else j > i)
        )

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return self.T.is_lower_triangular(strict)

    def is_permutation(self) -> bool:
        if not self.is_square:
            return False
        for line in (*self._data, *zip(*self._data)):
            if sorted(line) != [0] * (len(line) - 1) + [1]:
                return False
        return True


def require_square(M: Matrix) -> int:
    if not M.is_square:
        raise ShapeMismatchError(f"expected a square matrix, got {M.shape}")
    return M.rows


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns.

    Pivots are the first nonzero entry found scanning each column from the
    current row downwards, which keeps the output deterministic.
    """
    A = [list(r) for r in M._data]
    pivots = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        p = next((i for i in range(r, M.rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(M.rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return Matrix._raw(tuple(map(tuple, A)), M.cols), pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def determinant(M: Matrix) -> Fraction:
    n = require_square(M)
    A = [list(r) for r in M._data]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return det


def inverse(M: Matrix) -> Matrix:
    n = require_square(M)
    aug = Matrix.block([[M, Matrix.identity(n)]])
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return R[:, n:]


def kernel_basis(M: Matrix) -> list[Matrix]:
    """Basis of the right null space as ``cols x 1`` column matrices."""
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        basis.append(Matrix._raw(tuple((x,) for x in v), 1))
    return basis


def null_space(M: Matrix) -> list[Vector]:
    """Same as :func:`kernel_basis` but returning tuple vectors."""
    return [k.column(0) for k in kernel_basis(M)]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return not any(v)
    A = Matrix.from_columns(basis)
    return rank(Matrix.from_columns([*basis, v])) == rank(A)


def lpu_decompose(D: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Find lower triangular ``L`` and upper triangular ``U`` with ``L @ D @ U``
    a permutation matrix.

    Rows are never exchanged.  Row ``i`` is scaled so its first nonzero entry
    becomes 1, that pivot is used to clear its column below (adding multiples
    of an upper row to lower rows, i.e. left multiplication by a lower
    triangular matrix) and to clear its row to the right (adding multiples of
    a left column to columns on its right, i.e. right multiplication by an
    upper triangular matrix).

    Returns
    -------
    (L, U, P) with ``L @ D @ U == P``.
    """
    n = require_square(D)
    A = [list(r) for r in D._data]
    L = [list(r) for r in Matrix.identity(n)._data]
    U = [list(r) for r in Matrix.identity(n)._data]
    used = set()
    for i in range(n):
        p = next((j for j in range(n) if A[i][j] != 0), None)
        if p is None or p in used:
            raise SingularMatrixError("matrix is singular")
        used.add(p)
        inv = 1 / A[i][p]
        A[i] = [a * inv for a in A[i]]
        L[i] = [a * inv for a in L[i]]
        for r in range(i + 1, n):
            f = A[r][p]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[i])]
                L[r] = [a - f * b for a, b in zip(L[r], L[i])]
        for q in range(p + 1, n):
            f = A[i][q]
            if f:
                # only row i has a nonzero in column p at this point
                A[i][q] = Fraction(0)
                for row in U:
                    row[q] -= f * row[p]
    P = Matrix(A)
    return Matrix(L), Matrix(U), P
