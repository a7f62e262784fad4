"""The HEIS family: reductions land on a handful of representatives, and
every closed nondegenerate form has the same Milnor frame profile with a
Lagrangian ideal."""

from collections import Counter

from symplie import build_family, classify_symplectic, cocycle_space, lagrangian_ideal, predicates, reduce
from symplie.sampling import random_closed_nondegenerate, random_gl, trial_rng

for n in (2, 3):
    g = build_family("HEIS", n)
    tags = Counter(reduce("HEIS", n, random_gl(trial_rng(0, f"demo-h{n}", t), 2 * n)).rep.tag for t in range(30))
    print(f"n={n}: 30 random reductions -> {dict(tags)}")

    basis = cocycle_space(g)
    w = random_closed_nondegenerate(trial_rng(0, f"demo-hc{n}", 0), g, basis)
    v = classify_symplectic("HEIS", n, w)
    print(f"      dim Z^2 = {len(basis)}; a random closed form classifies as {v.profile.tag} (t = {v.frame.t})")
    L = lagrangian_ideal("HEIS", n, v.frame)
    p = predicates(g, w, L)
    print(f"      span(x2..x{n + 1}): lagrangian={p.is_lagrangian} ideal={p.is_ideal}")
