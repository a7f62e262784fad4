"""JSON encodings.

Rationals are strings such as ``"-3/4"`` or ``"2"``; floats are rejected.
Indices in Lie algebra, form and profile encodings are 1-based.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import InputError
from .exact import Matrix, as_scalar
from .forms import TwoForm
from .lie import Family, LieAlgebra
from .moduli import Closed, MilnorFrame, NotClosed, ReductionWitness, Representative
from .subspaces import Predicates, Subspace
from .symplectic import SymplecticQR


def scalar_to_json(x: Fraction) -> str:
    return str(x)


def scalar_from_json(x: Any) -> Fraction:
    if isinstance(x, float):
        raise InputError(f"floating point value {x!r} is not allowed; use a 'p/q' string")
    try:
        return as_scalar(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}") from exc


def _index(x: Any, dim: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= dim:
        raise InputError(f"index {x!r} out of range 1..{dim}")
    return x - 1


def matrix_to_json(M: Matrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[scalar_to_json(a) for a in M.row(i)] for i in range(M.rows)],
    }


def matrix_from_json(obj: Any) -> Matrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise InputError("matrix needs 'rows', 'cols' and 'entries'") from exc
    if not isinstance(entries, list) or len(entries) != rows or any(
        not isinstance(r, list) or len(r) != cols for r in entries
    ):
        raise InputError(f"entries do not form a {rows}x{cols} array")
    return Matrix([[scalar_from_json(a) for a in r] for r in entries], cols=cols)


def vector_to_json(v) -> list[str]:
    return [scalar_to_json(a) for a in v]


def lie_to_json(g: LieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "family": g.family.value,
        "brackets": [[i + 1, j + 1, k + 1, scalar_to_json(c)] for i, j, k, c in g.brackets],
    }


def lie_from_json(obj: Any) -> LieAlgebra:
    try:
        dim = obj["dim"]
        family = Family(obj.get("family", "GENERIC"))
        raw = obj.get("brackets", [])
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise InputError(f"bad Lie algebra encoding: {exc}") from exc
    brackets = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 4:
            raise InputError(f"bracket entry must be [i, j, k, value], got {entry!r}")
        i, j, k = (_index(x, dim) for x in entry[:3])
        c = scalar_from_json(entry[3])
        if i == j:
            raise InputError("bracket [e_i, e_i] must vanish")
        if i > j:
            i, j, c = j, i, -c
        brackets.append((i, j, k, c))
    return LieAlgebra(dim, tuple(brackets), family)


def form_to_json(w: TwoForm) -> dict:
    M = w.matrix
    return {
        "dim": w.dim,
        "entries": [
            [i + 1, j + 1, scalar_to_json(M[i, j])]
            for i in range(w.dim)
            for j in range(i + 1, w.dim)
            if M[i, j] != 0
        ],
    }


def form_from_json(obj: Any) -> TwoForm:
    try:
        dim, raw = obj["dim"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise InputError("form needs 'dim' and 'entries'") from exc
    pairs = {}
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 3:
            raise InputError(f"form entry must be [i, j, value], got {entry!r}")
        i, j = _index(entry[0], dim), _index(entry[1], dim)
        if i >= j:
            raise InputError("form entries must list i < j only")
        pairs[(i, j)] = scalar_from_json(entry[2])
    return TwoForm.from_pairs(dim, pairs)


def subspace_to_json(W: Subspace) -> dict:
    return {"dim": W.ambient_dim, "basis": [vector_to_json(v) for v in W.basis]}


def subspace_from_json(obj: Any) -> Subspace:
    try:
        dim, basis = obj["dim"], obj["basis"]
        return Subspace(dim, tuple(tuple(scalar_from_json(a) for a in v) for v in basis))
    except (KeyError, TypeError) as exc:
        raise InputError("subspace needs 'dim' and 'basis'") from exc


def predicates_to_json(p: Predicates) -> dict:
    return {
        "is_subalgebra": p.is_subalgebra,
        "is_ideal": p.is_ideal,
        "is_isotropic": p.is_isotropic,
        "is_lagrangian": p.is_lagrangian,
    }


def representative_to_json(rep: Representative) -> dict:
    out = {"family": rep.family.value, "case": rep.case.value}
    if rep.k is not None:
        out["k"] = rep.k
    return out


def qr_to_json(qr: SymplecticQR) -> dict:
    return {
        "S": matrix_to_json(qr.S),
        "T": matrix_to_json(qr.T),
        "product": matrix_to_json(qr.product),
    }


def witness_to_json(w: ReductionWitness, verified: bool) -> dict:
    return {
        "rep": representative_to_json(w.rep),
        "c_phi": matrix_to_json(w.c_phi),
        "S": matrix_to_json(w.S),
        "verified": verified,
    }


def frame_to_json(f: MilnorFrame) -> dict:
    return {"t": scalar_to_json(f.t), "basis": matrix_to_json(f.basis), "profile": f.profile.tag}


def verdict_to_json(v: Closed | NotClosed) -> dict:
    if isinstance(v, NotClosed):
        return {
            "verdict": "not_closed",
            "triple": [i + 1 for i in v.triple],
            "value": scalar_to_json(v.value),
        }
    return {"verdict": "closed", "profile": v.profile.tag, "frame": frame_to_json(v.frame)}
