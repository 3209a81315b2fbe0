"""For n = 2 the trace-free part of Iu_2 is the four-dimensional diamond algebra."""

from lieforge import scfile
from lieforge.constructions import diamond
from lieforge.morphisms import is_antiautomorphism, is_automorphism, phi, psi, transport

D, change = diamond()
for lab, img in change.items():
    print(f"{lab} = {img}")
print(scfile.emit(D), end="")

sl, Iu2 = D.parent, D.parent.parent
for name, m, check in (("Phi", phi(2), is_antiautomorphism), ("Psi", psi(2), is_automorphism)):
    t = transport(transport(m, sl, Iu2), D, sl)
    print(f"{name}:", ", ".join(f"{lab} -> {t.images[lab]}" for lab in D.basis), "|", bool(check(D, t)))
