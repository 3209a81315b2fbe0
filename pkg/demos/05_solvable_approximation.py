"""Truncating glplus_n mod eps^(k+1) gives solvable algebras; eps = 1 does not."""

from lieforge import build_glpluseps_direct, derived_series, is_solvable, specialize, truncate
from lieforge.core import expand_truncated

for n in (2, 3, 4):
    g = build_glpluseps_direct(n)
    row = []
    for k in range(4):
        t = truncate(g, k)
        flat = expand_truncated(t)
        row.append(f"k={k}: dim {flat.dim} solvable {is_solvable(t)}")
    print(f"n={n}: " + "; ".join(row))

g3 = specialize(build_glpluseps_direct(3), 1)
print("eps=1, n=3 derived dims:", [s.dim for s in derived_series(g3)], "solvable:", is_solvable(g3))
