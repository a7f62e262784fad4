"""The RH family: every nondegenerate form sits in one orbit, and only n = 1
carries a closed one."""

from symplie import TwoForm, build_family, classify_symplectic, cocycle_space, milnor_frame, reduce, standard_J
from symplie.sampling import random_gl, trial_rng

for n in (1, 2, 3):
    g = build_family("RH", n)
    M = random_gl(trial_rng(0, "demo-rh", n), 2 * n)
    w = reduce("RH", n, M)
    print(f"n={n}: random g reduces to {w.rep.tag}; witness holds: {w.check(M)}")
    print(f"      dim Z^2 = {len(cocycle_space(g))}")
    omega0 = TwoForm(standard_J(n))
    frame = milnor_frame("RH", n, omega0)
    print(f"      Milnor frame of omega_0: t = {frame.t}, profile {frame.profile.tag}")
    v = classify_symplectic("RH", n, omega0)
    if v.closed:
        print("      omega_0 is closed")
    else:
        i, j, k = (a + 1 for a in v.triple)
        print(f"      omega_0 is not closed: d omega(e{i}, e{j}, e{k}) = {v.value}")
