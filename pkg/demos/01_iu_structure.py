"""Build Iu_3 two ways and look at a few brackets.

Iu_n is u_n with its dual attached through the coadjoint action.  The
closed-form table and the one produced by the general semidirect-product
construction should agree entry for entry.
"""

from lieforge import (A, B, X, bracket, build_Iu_direct, build_un, coadjoint_semidirect, elem,
                      verify_jacobi)

n = 3
direct = build_Iu_direct(n)
derived = coadjoint_semidirect(build_un(n))

print(f"Iu_{n}: dim {direct.dim}, ring {direct.ring}")
print("basis:", " ".join(map(str, direct.basis)))
print("closed form == semidirect product:", direct.same_table(derived))
print("Jacobi:", "ok" if verify_jacobi(direct) else "broken")

for u, v in [(X(1, 2), X(2, 3)), (X(1, 2), X(2, 1)), (A(1), X(3, 1)), (X(1, 3), X(3, 2))]:
    print(f"[{u}, {v}] = {bracket(direct, elem(u), elem(v))}")

# pairing b_i with a_i at weight 1 instead of 2 drops the 1/2
plain = coadjoint_semidirect(build_un(n), diagonal_weight=1)
print("weight 1:", f"[x[1,2], x[2,1]] =", bracket(plain, elem(X(1, 2)), elem(X(2, 1))))
print("b[1] brackets to zero with everything:",
      all(not bracket(direct, elem(B(1)), elem(l)) for l in direct.basis))
