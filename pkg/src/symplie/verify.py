"""Randomised property suites, bundled per family and size.

Each trial draws its inputs from its own RNG derived from ``(seed, suite,
trial)``, so a suite's result does not depend on the order trials run in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import io
from .exact import Matrix, rank
from .forms import TwoForm, cocycle_space, is_closed
from .lie import Family, build_family
from .moduli import (
    Closed,
    allowed_representatives,
    canonical_closed,
    classify_symplectic,
    lagrangian_ideal,
    milnor_frame,
    reduce,
)
from .sampling import random_closed_nondegenerate, random_gl, random_nondegenerate, trial_rng
from .subspaces import predicates
from .symplectic import check_qr, standard_J, symplectic_qr


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failed: int = 0
    counterexample: Any = None

    @property
    def passed(self) -> int:
        return self.trials - self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


def _run(name: str, trials: int, seed: int, trial: Callable) -> SuiteResult:
    res = SuiteResult(name)
    for t in range(trials):
        rng = trial_rng(seed, name, t)
        res.trials += 1
        try:
            bad = trial(rng)
        except Exception as exc:  # a crash is a failed trial, reported as such
            bad = {"error": f"{type(exc).__name__}: {exc}"}
        if bad is not None:
            res.failed += 1
            if res.counterexample is None:
                res.counterexample = {"trial": t, **bad}
    return res


def qr_suite(n: int, trials: int, seed: int) -> SuiteResult:
    def trial(rng):
        M = random_gl(rng, 2 * n)
        if not check_qr(M, symplectic_qr(n, M)):
            return {"input": io.matrix_to_json(M)}
        return None

    return _run(f"symplectic_qr[n={n}]", trials, seed, trial)


def reduction_suite(family: Family, n: int, trials: int, seed: int) -> SuiteResult:
    allowed = allowed_representatives(family, n)

    def trial(rng):
        g = random_gl(rng, 2 * n)
        w = reduce(family, n, g)
        if not w.check(g) or w.rep not in allowed:
            return {"input": io.matrix_to_json(g), "rep": w.rep.tag}
        return None

    return _run(f"reduce[{family.value},n={n}]", trials, seed, trial)


def profile_suite(family: Family, n: int, trials: int, seed: int) -> SuiteResult:
    allowed = allowed_representatives(family, n)

    def trial(rng):
        w = random_nondegenerate(rng, 2 * n)
        f = milnor_frame(family, n, w)
        if not f.check(w) or f.profile not in allowed:
            return {"input": io.form_to_json(w), "profile": f.profile.tag}
        return None

    return _run(f"milnor_profiles[{family.value},n={n}]", trials, seed, trial)


def uniqueness_suite(n: int, trials: int, seed: int) -> SuiteResult:
    """Closed nondegenerate HEIS forms: canonical verdict and Lagrangian ideal."""
    g = build_family(Family.HEIS, n)
    basis = cocycle_space(g)
    canonical = canonical_closed(Family.HEIS, n)
    J = standard_J(n)

    def trial(rng):
        w = random_closed_nondegenerate(rng, g, basis)
        v = classify_symplectic(Family.HEIS, n, w)
        if not isinstance(v, Closed) or v.profile != canonical:
            return {"input": io.form_to_json(w), "verdict": io.verdict_to_json(v)}
        f = v.frame
        if not (f.t > 0 and (f.basis.T @ w.matrix @ f.basis) * f.t == J):
            return {"input": io.form_to_json(w), "reason": "frame identity"}
        p = predicates(g, w, lagrangian_ideal(Family.HEIS, n, f))
        if not (p.is_isotropic and p.is_lagrangian and p.is_subalgebra and p.is_ideal):
            return {"input": io.form_to_json(w), "predicates": io.predicates_to_json(p)}
        return None

    return _run(f"closed_uniqueness[HEIS,n={n}]", trials, seed, trial)


def rh_closedness_suite(n: int) -> SuiteResult:
    """Deterministic: dim Z^2 = 2n - 1, cocycle matrices of rank <= 2 for
    n >= 2 (none nondegenerate), and omega_0 closed for n = 1."""
    g = build_family(Family.RH, n)

    def trial(_rng):
        Z = cocycle_space(g)
        if len(Z) != 2 * n - 1:
            return {"dimension": len(Z)}
        if n == 1:
            return None if is_closed(g, TwoForm(standard_J(1))) else {"reason": "omega_0 not closed"}
        if any(any(f.matrix[i, j] for i in range(1, 2 * n) for j in range(1, 2 * n)) for f in Z):
            return {"reason": "cocycle supported outside row/column 1"}
        if any(rank(f.matrix) > 2 for f in Z):
            return {"reason": "cocycle of rank > 2"}
        return None

    return _run(f"rh_closedness[n={n}]", 1, 0, trial)


def run_family(family: Family | str, n: int, trials: int = 20, seed: int = 0) -> list[SuiteResult]:
    family = Family(family)
    build_family(family, n)
    out = [qr_suite(n, trials, seed), reduction_suite(family, n, trials, seed)]
    out.append(profile_suite(family, n, trials, seed))
    if family is Family.RH:
        out.append(rh_closedness_suite(n))
    else:
        out.append(uniqueness_suite(n, trials, seed))
    return out


def summary(family: Family | str, n: int, trials: int, seed: int) -> dict:
    results = run_family(family, n, trials, seed)
    return {
        "family": Family(family).value,
        "n": n,
        "seed": seed,
        "trials": trials,
        "ok": all(r.ok for r in results),
        "suites": [r.to_json() for r in results],
    }
