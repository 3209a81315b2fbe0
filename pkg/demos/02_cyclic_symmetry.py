"""The cyclic index shift Psi and the anti-diagonal flip Phi.

Psi sends x_ij to x_(i+1)(j+1) with indices mod n.  On gl_n that is just
conjugation by a permutation matrix; on Iu_n it survives only because the
bracket is gated by lengths that Psi preserves.
"""

from lieforge import build_Iu_direct, build_glpluseps_direct, specialize
from lieforge.morphisms import (compose, enumerate_symmetries, is_antiautomorphism, is_automorphism,
                                order_of, perm_map, phi, power, psi)

for n in range(2, 7):
    L = build_Iu_direct(n)
    g = build_glpluseps_direct(n)
    print(f"n={n}: Psi auto of Iu {bool(is_automorphism(L, psi(n)))}, "
          f"of glplus {bool(is_automorphism(g, psi(n, 'glplus')))}, order {order_of(psi(n))}; "
          f"Phi anti {bool(is_antiautomorphism(L, phi(n)))}, "
          f"Phi Psi Phi == Psi^(n-1): {compose(phi(n), compose(psi(n), phi(n))) == power(psi(n), n - 1)}")

print()
for n in (3, 4, 5):
    autos, antis = enumerate_symmetries(build_Iu_direct(n))
    print(f"Iu_{n}: autos {', '.join(map(str, autos))}; antis {', '.join(map(str, antis))}")

# switching the deformation on restores the full symmetric group
autos, antis = enumerate_symmetries(specialize(build_glpluseps_direct(3), 1), kind="glplus")
print(f"glplus_3 at eps=1: {len(autos)} autos, {len(antis)} antis")

# a generic transposition fails, and the witness says where
rep = is_automorphism(build_Iu_direct(3), perm_map([2, 1, 3]), max_failures=1)
(pair, defect), = rep.failures
print(f"swap 1<->2 breaks [{pair[0]}, {pair[1]}]: defect {defect}")
