"""glplus_n as the double of u_n and an eps-scaled lower triangular algebra.

Only the two halves and the pairing are given; the mixed brackets are
solved from invariance of the form.  eps = 0 contracts back to Iu_n and
eps = 1 recovers gl_n plus a central copy of the diagonal.
"""

from lieforge import (A, B, X, bracket, build_glpluseps_direct, build_Iu_direct, center, elem,
                      specialize, truncate)
from lieforge.constructions import build_ln_eps, build_un, form_invariance, manin_double, standard_pairing

n = 3
D = manin_double(build_un(n), build_ln_eps(n), standard_pairing(n))
print("double == closed form:", D.same_table(build_glpluseps_direct(n)))
print("form invariant:", bool(form_invariance(D, standard_pairing(n))))
print("[x[1,2], x[2,1]] =", bracket(D, elem(X(1, 2)), elem(X(2, 1))))
print("[x[1,3], x[3,2]] =", bracket(D, elem(X(1, 3)), elem(X(3, 2))))

print("eps -> 0 gives Iu:", specialize(D, 0).same_table(build_Iu_direct(n)))
g1 = specialize(D, 1)
Z = center(g1)
print("center at eps=1 has dim", Z.dim, "and contains every b_i - a_i:",
      all(elem(B(i), (A(i), -1)) in Z for i in range(1, n + 1)))

t = truncate(D, 1)
print("mod eps^2:", t.ring, "->", bracket(t, elem(X(1, 3)), elem(X(3, 2))))
