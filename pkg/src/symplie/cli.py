"""Command-line interface: JSON in (``--in PATH`` or stdin), JSON out.

Exit codes: 0 ok, 2 bad input, 3 precondition violated, 4 internal
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import io
from .errors import (
    InputError,
    NotClosedProfileError,
    PreconditionError,
    SymplieError,
    VerificationError,
)
from .forms import cocycle_space
from .lie import Family, build_family
from .moduli import Closed, classify_symplectic, lagrangian_ideal, milnor_frame, reduce
from .subspaces import predicates
from .symplectic import check_qr, symplectic_qr
from . import verify as verify_mod

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4

NEEDS_FAMILY = {"reduce", "classify", "milnor-frame", "lagrangian", "verify"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symplie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, family=False, input_=True):
        p = sub.add_parser(name, help=help_)
        if family:
            p.add_argument("--family", choices=["RH", "HEIS"], required=name in NEEDS_FAMILY)
            p.add_argument("--n", type=int, required=name in NEEDS_FAMILY)
        if input_:
            p.add_argument("--in", dest="input_path", help="input JSON file (default: stdin)")
        return p

    add("decompose", "symplectic QR of a nonsingular 2n x 2n matrix")
    add("reduce", "reduce a matrix to its representative, with witness", family=True)
    add("classify", "closedness verdict for a nondegenerate form", family=True)
    add("cocycles", "basis of closed 2-forms of a Lie algebra", family=True)
    add("milnor-frame", "Milnor frame of a nondegenerate form", family=True)
    add("lagrangian", "Lagrangian ideal of a closed nondegenerate form", family=True)
    v = add("verify", "run the randomised property suites", family=True, input_=False)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    return parser


def _read_input(path: str | None) -> Any:
    try:
        if path is None:
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input: {exc}") from exc


def _check_dim(obj_dim: int, n: int) -> None:
    if obj_dim != 2 * n:
        raise InputError(f"input has dimension {obj_dim}, expected {2 * n}")


def run_command(args: argparse.Namespace) -> dict:
    cmd = args.command
    if cmd == "decompose":
        M = io.matrix_from_json(_read_input(args.input_path))
        if not M.is_square or M.rows % 2:
            raise InputError("decompose needs a 2n x 2n matrix")
        qr = symplectic_qr(M.rows // 2, M)
        if not check_qr(M, qr):
            raise VerificationError("symplectic QR contract failed")
        return {"n": M.rows // 2, **io.qr_to_json(qr)}

    if cmd == "verify":
        return verify_mod.summary(args.family, args.n, args.trials, args.seed)

    if cmd == "cocycles":
        if args.family is not None and args.input_path is None:
            if args.n is None:
                raise InputError("--family needs --n")
            g = build_family(args.family, args.n)
        else:
            g = io.lie_from_json(_read_input(args.input_path))
        basis = cocycle_space(g)
        return {"dimension": len(basis), "basis": [io.form_to_json(f) for f in basis]}

    family, n = Family(args.family), args.n
    build_family(family, n)
    data = _read_input(args.input_path)

    if cmd == "reduce":
        g = io.matrix_from_json(data)
        _check_dim(g.rows, n)
        w = reduce(family, n, g)
        if not w.check(g):
            raise VerificationError("witness failed re-verification")
        return io.witness_to_json(w, verified=True)

    w = io.form_from_json(data)
    _check_dim(w.dim, n)
    if cmd == "classify":
        v = classify_symplectic(family, n, w)
        if isinstance(v, Closed) and not v.frame.check(w):
            raise VerificationError("frame failed re-verification")
        return io.verdict_to_json(v)
    if cmd == "milnor-frame":
        f = milnor_frame(family, n, w)
        if not f.check(w):
            raise VerificationError("frame failed re-verification")
        return io.frame_to_json(f)
    if cmd == "lagrangian":
        v = classify_symplectic(family, n, w)
        if not isinstance(v, Closed):
            raise NotClosedProfileError(
                f"form is not closed: d omega{tuple(i + 1 for i in v.triple)} = {v.value}"
            )
        L = lagrangian_ideal(family, n, v.frame)
        p = predicates(build_family(family, n), w, L)
        return {
            "subspace": io.subspace_to_json(L),
            "predicates": io.predicates_to_json(p),
            "frame": io.frame_to_json(v.frame),
        }
    raise InputError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run_command(args)
    except VerificationError as exc:
        code, report = EXIT_VERIFICATION, {"error": "verification", "message": str(exc)}
    except PreconditionError as exc:
        code, report = EXIT_PRECONDITION, {"error": "precondition", "message": str(exc)}
    except (InputError, SymplieError) as exc:
        code, report = EXIT_BAD_INPUT, {"error": "input", "message": str(exc)}
    else:
        code = EXIT_OK
        if args.command == "verify" and not report["ok"]:
            code = EXIT_VERIFICATION
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if code:
        print(f"symplie: {report.get('message', 'verification suites failed')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
