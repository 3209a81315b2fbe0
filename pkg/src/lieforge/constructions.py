"""Builders for u_n, l_n^eps, gl_n, Iu_n and gl_{n+}^eps.

The two main families are produced in independent ways: by transcribing
their closed-form bracket tables, by the coadjoint semidirect product
``a x| a*``, and by the Manin-triple double of u_n with the contracted
lower-triangular algebra.  Tests compare the routes table for table.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from . import _linalg
from .core import (
    A,
    B,
    AlgebraError,
    Element,
    Label,
    LieAlgebra,
    Named,
    Report,
    X,
    bracket,
    canonical_key,
    change_of_basis,
    subalgebra,
    verify_jacobi,
)
from .scalars import EPS, EpsPoly, as_fraction

HALF = Fraction(1, 2)


def family_basis(n: int) -> Tuple[Label, ...]:
    """a_1..a_n, x_ij (i<j), b_1..b_n, x_ij (i>j)."""
    labs = [A(i) for i in range(1, n + 1)]
    labs += [B(i) for i in range(1, n + 1)]
    labs += [X(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return tuple(sorted(labs, key=canonical_key))


def _sort_basis(labels: Sequence[Label]) -> Tuple[Label, ...]:
    if any(lab.kind == "named" for lab in labels):
        return tuple(labels)
    return tuple(sorted(labels, key=canonical_key))


# -- matrix algebras ----------------------------------------------------------

def _unit_commutator(i, j, k, l) -> Dict[Tuple[int, int], int]:
    # [E_ij, E_kl] = d_jk E_il - d_li E_kj
    out: Dict[Tuple[int, int], int] = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return {key: c for key, c in out.items() if c}


def _triangular(name, n, labels, unit, label_of, scale) -> LieAlgebra:
    def fn(p, q):
        (i, j), (k, l) = unit(p), unit(q)
        return Element({label_of(r, s): scale * c for (r, s), c in _unit_commutator(i, j, k, l).items()})
    return LieAlgebra.from_function(name, n, labels, fn, over_eps=isinstance(scale, EpsPoly))


def _unit(lab: Label) -> Tuple[int, int]:
    return (lab.i, lab.i) if lab.kind in ("a", "b") else (lab.i, lab.j)


def build_un(n: int) -> LieAlgebra:
    """Upper-triangular matrices; a_i is the diagonal unit E_ii."""
    labels = [lab for lab in family_basis(n) if lab.is_upper]
    return _triangular("un", n, labels, _unit,
                       lambda r, s: A(r) if r == s else X(r, s), 1)


def build_ln_eps(n: int) -> LieAlgebra:
    """Lower-triangular matrices (diagonal b_i) with the bracket scaled by eps."""
    labels = [lab for lab in family_basis(n) if not lab.is_upper]
    return _triangular("ln", n, labels, _unit,
                       lambda r, s: B(r) if r == s else X(r, s), EPS)


def build_gln(n: int) -> LieAlgebra:
    labels = [Named(f"e[{i},{j}]") for i in range(1, n + 1) for j in range(1, n + 1)]
    units = {lab: (i, j) for lab, (i, j) in zip(
        labels, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)])}
    return _triangular("gln", n, labels, units.__getitem__,
                       lambda r, s: Named(f"e[{r},{s}]"), 1)


def abelian(labels: Sequence[Label], name: str = "abelian", n: int = 0) -> LieAlgebra:
    return LieAlgebra(name, n, labels, {})


# -- closed-form tables -------------------------------------------------------

def _length(i: int, j: int, n: int) -> int:
    return j - i if i < j else n - (i - j)


def _delta(a, b) -> int:
    return 1 if a == b else 0


def _family_bracket(n: int, contracted: bool):
    # contracted=False: Iu_n; True: gl_{n+}^eps (chi^eps and the eps terms)
    def fn(p: Label, q: Label) -> Element:
        if p.kind != "x" and q.kind != "x":
            return Element.zero()
        if p.kind != "x":
            i, (j, k) = p.i, (q.i, q.j)
            c = _delta(i, j) - _delta(i, k)
            if not c:
                return Element.zero()
            if p.kind == "b":
                return Element({q: EPS * c}) if contracted else Element.zero()
            return Element({q: c})
        if q.kind != "x":
            return -fn(q, p)
        i, j, k, l = p.i, p.j, q.i, q.j
        if j == k and l == i:
            out = Element({B(i): HALF, B(j): -HALF})
            if contracted:
                out = out + Element({A(i): EPS * HALF, A(j): -EPS * HALF})
            return out
        terms = {}
        if j == k:
            terms[X(i, l)] = 1
        if l == i:
            terms[X(k, j)] = -1
        if not terms:
            return Element.zero()
        if _length(i, j, n) + _length(k, l, n) < n:
            return Element(terms)
        if contracted:
            return Element({lab: EPS * c for lab, c in terms.items()})
        return Element.zero()
    return fn


def build_Iu_direct(n: int) -> LieAlgebra:
    """Iu_n from its closed-form commutation relations."""
    return LieAlgebra.from_function("Iu", n, family_basis(n), _family_bracket(n, False))


def build_glpluseps_direct(n: int) -> LieAlgebra:
    """gl_{n+}^eps over Q[eps] from its closed-form commutation relations."""
    return LieAlgebra.from_function("glplus", n, family_basis(n), _family_bracket(n, True),
                                    over_eps=True)


# -- bilinear forms -----------------------------------------------------------

class BilinearForm:
    """Symmetric bilinear form given on basis labels; unset pairs are 0."""

    def __init__(self, pairs: Mapping[Tuple[Label, Label], object]):
        self.pairs: Dict[Tuple[Label, Label], Fraction] = {}
        for (u, v), c in pairs.items():
            c = as_fraction(c)
            if c:
                self.pairs[(u, v)] = c
                self.pairs[(v, u)] = c

    def value(self, u: Label, v: Label) -> Fraction:
        return self.pairs.get((u, v), Fraction(0))

    def __call__(self, x: Element, y: Element) -> EpsPoly:
        acc = EpsPoly()
        for u, cu in x.items():
            for v, cv in y.items():
                w = self.pairs.get((u, v))
                if w:
                    acc = acc + cu * cv * w
        return acc

    def gram(self, labels: Sequence[Label]):
        return [[self.value(u, v) for v in labels] for u in labels]

    def is_nondegenerate(self, labels: Sequence[Label]) -> bool:
        return _linalg.determinant(self.gram(labels)) != 0

    def is_isotropic(self, labels: Sequence[Label]) -> bool:
        return all(not self.value(u, v) for u in labels for v in labels)


def standard_pairing(n: int, diagonal_weight=2) -> BilinearForm:
    """<x_kl, x_ij> = d_li d_jk and <b_i, a_j> = w d_ij (w = 2 by default)."""
    pairs = {}
    for i in range(1, n + 1):
        pairs[(B(i), A(i))] = diagonal_weight
        for j in range(i + 1, n + 1):
            pairs[(X(i, j), X(j, i))] = 1
    return BilinearForm(pairs)


def form_invariance(L: LieAlgebra, form: BilinearForm, max_failures: Optional[int] = None) -> Report:
    """Check <[x,y],z> == <x,[y,z]> on all basis triples."""
    failures = []
    # the form pairs each label with few others; precompute partner lists
    partners: Dict[Label, list] = {}
    for (u, v), c in form.pairs.items():
        partners.setdefault(u, []).append((v, c))
    zero = EpsPoly()

    def pair(e: Element, lab: Label) -> EpsPoly:
        acc = zero
        for v, c in partners.get(lab, ()):
            coeff = e.terms.get(v)
            if coeff is not None:
                acc = acc + coeff * c
        return acc

    for p in range(L.dim):
        for q in range(L.dim):
            xy = L.bracket_basis(p, q)
            for r in range(L.dim):
                lhs = pair(xy, L.basis[r])
                rhs = pair(L.bracket_basis(q, r), L.basis[p])
                if lhs != rhs:
                    failures.append(((L.basis[p], L.basis[q], L.basis[r]), lhs - rhs))
                    if max_failures is not None and len(failures) >= max_failures:
                        return Report.from_failures(failures)
    return Report.from_failures(failures)


# -- semidirect product and double --------------------------------------------

def standard_duality(labels: Sequence[Label], diagonal_weight=2):
    """Dual labels and pairing weights <dual(l), l>.

    a_i <-> b_i with weight ``diagonal_weight``; x_ij <-> x_ji with weight 1;
    a named label ``s`` gets ``s*`` with weight 1.
    """
    dual, weight = {}, {}
    for lab in labels:
        if lab.kind == "a":
            dual[lab], weight[lab] = B(lab.i), as_fraction(diagonal_weight)
        elif lab.kind == "x":
            dual[lab], weight[lab] = X(lab.j, lab.i), Fraction(1)
        elif lab.kind == "named":
            dual[lab], weight[lab] = Named(lab.name + "*"), Fraction(1)
        else:
            raise AlgebraError(f"no standard dual for {lab}")
    return dual, weight


def coadjoint_semidirect(alg: LieAlgebra, dual: Optional[Mapping[Label, Label]] = None,
                         weight: Optional[Mapping[Label, object]] = None,
                         diagonal_weight=2, name: str = "Iu") -> LieAlgebra:
    """The algebra a x| a* with a* abelian and a acting by the coadjoint action.

    ``dual[l]`` names the functional paired with ``l`` only, with
    ``<dual[l], l> = weight[l]``; the bracket is
    ``[(x,f),(y,g)] = ([x,y], x.g - y.f)`` with ``(x.f)(v) = f([v,x])``.
    """
    if dual is None:
        dual, w0 = standard_duality(alg.basis, diagonal_weight)
        weight = w0 if weight is None else weight
    weight = {lab: as_fraction(weight[lab]) for lab in alg.basis}
    if any(not w for w in weight.values()):
        raise AlgebraError("degenerate pairing: zero weight")
    duals = [dual[lab] for lab in alg.basis]
    if len(set(duals)) != len(duals) or set(duals) & set(alg.basis):
        raise AlgebraError("dual labels must be distinct and disjoint from the algebra's basis")
    owner = {dual[lab]: lab for lab in alg.basis}

    def act(e: Label, f: Label) -> Element:
        # e . f, expanded in dual basis: coefficient on dual(s) is
        # f([s, e]) / w_s = w_q * coeff_q([s, e]) / w_s where f = dual(q)
        q = owner[f]
        pe = alg.index[e]
        terms = {}
        for s in alg.basis:
            br = alg.bracket_basis(alg.index[s], pe)
            c = br.terms.get(q)
            if c is not None:
                terms[dual[s]] = c * (weight[q] / weight[s])
        return Element(terms)

    def fn(p: Label, q: Label) -> Element:
        pd, qd = p in owner, q in owner
        if pd and qd:
            return Element.zero()
        if not pd and not qd:
            return alg.bracket_basis(alg.index[p], alg.index[q])
        if qd:
            return act(p, q)
        return -act(q, p)

    basis = _sort_basis(list(alg.basis) + duals)
    return LieAlgebra.from_function(name, alg.n, basis, fn, over_eps=alg.over_eps,
                                    scalar_trunc=alg.scalar_trunc)


def _solve_poly(solver: _linalg.SpanSolver, rhs: Dict[Label, EpsPoly]) -> Optional[Dict[int, EpsPoly]]:
    by_degree: Dict[int, dict] = {}
    trunc = None
    for key, c in rhs.items():
        if c.trunc is not None:
            trunc = c.trunc
        for d, v in enumerate(c.coeffs):
            if v:
                by_degree.setdefault(d, {})[key] = v
    out: Dict[int, Dict[int, Fraction]] = {}
    for d, vec in by_degree.items():
        sol = solver.coordinates(vec)
        if sol is None:
            return None
        for i, v in sol.items():
            out.setdefault(i, {})[d] = v
    return {i: EpsPoly([cs.get(d, 0) for d in range(max(cs) + 1)], trunc) for i, cs in out.items()}


def manin_double(U: LieAlgebra, L: LieAlgebra, form: BilinearForm, name: str = "glplus",
                 check: bool = True) -> LieAlgebra:
    """Bracket on U (+) L extending both and making ``form`` invariant.

    The mixed bracket [u, l] is pinned down by
    <[u,l], z> = <l, [z,u]> for z in U and <[u,l], w> = <u, [l,w]> for w in L.
    Jacobi is verified on the result unless ``check`` is False.
    """
    ub, lb = list(U.basis), list(L.basis)
    if set(ub) & set(lb):
        raise AlgebraError("summands share labels")
    if len(ub) != len(lb):
        raise AlgebraError("summands of a Manin triple must have equal dimension")
    if not form.is_isotropic(ub) or not form.is_isotropic(lb):
        raise AlgebraError("summands are not isotropic")
    if not form.is_nondegenerate(ub + lb):
        raise AlgebraError("degenerate form")

    # coordinates against the cross pairing, one solver per side
    u_solver = _linalg.SpanSolver({w: form.value(u, w) for w in lb if form.value(u, w)} for u in ub)
    l_solver = _linalg.SpanSolver({z: form.value(l, z) for z in ub if form.value(l, z)} for l in lb)
    ue = {lab: Element.basis(lab) for lab in ub}
    le = {lab: Element.basis(lab) for lab in lb}

    def mixed(u: Label, l: Label) -> Element:
        rhs_u = {w: form(ue[u], bracket(L, le[l], le[w])) for w in lb}
        rhs_l = {z: form(le[l], bracket(U, ue[z], ue[u])) for z in ub}
        du = _solve_poly(u_solver, {k: v for k, v in rhs_u.items() if v})
        dl = _solve_poly(l_solver, {k: v for k, v in rhs_l.items() if v})
        terms = {ub[i]: c for i, c in du.items()}
        terms.update({lb[i]: c for i, c in dl.items()})
        return Element(terms)

    uset = set(ub)

    def fn(p: Label, q: Label) -> Element:
        pu, qu = p in uset, q in uset
        if pu and qu:
            return U.bracket_basis(U.index[p], U.index[q])
        if not pu and not qu:
            return L.bracket_basis(L.index[p], L.index[q])
        return mixed(p, q) if pu else -mixed(q, p)

    trunc = U.scalar_trunc if U.scalar_trunc is not None else L.scalar_trunc
    out = LieAlgebra.from_function(name, U.n, _sort_basis(ub + lb), fn,
                                   over_eps=U.over_eps or L.over_eps, scalar_trunc=trunc)
    if check:
        rep = verify_jacobi(out, max_failures=1)
        if not rep:
            raise AlgebraError(f"double violates Jacobi at {rep.failures[0][0]}")
    return out


# -- sl variants and the diamond algebra --------------------------------------

def sl_restrict(L: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    """Trace-zero part: x_ij, abar_i = a_i - a_(i+1), bbar_i = b_i - b_(i+1)."""
    n = L.n
    for lab in family_basis(n):
        if lab not in L.index:
            raise AlgebraError(f"{L.name} is not an Iu/glplus-type algebra")
    new = []
    for i in range(1, n):
        new.append((Named(f"abar[{i}]"), Element({A(i): 1, A(i + 1): -1})))
    new += [(lab, Element.basis(lab)) for lab in family_basis(n) if lab.kind == "x" and lab.i < lab.j]
    for i in range(1, n):
        new.append((Named(f"bbar[{i}]"), Element({B(i): 1, B(i + 1): -1})))
    new += [(lab, Element.basis(lab)) for lab in family_basis(n) if lab.kind == "x" and lab.i > lab.j]
    return subalgebra(L, new, name=name or f"sl-{L.name}")


def diamond():
    """The n=2 trace-zero Iu_2 in the basis a, x, y, b.

    Returns the algebra and its basis map ``{label: element of sl-Iu_2}``.
    """
    sl = sl_restrict(build_Iu_direct(2))
    change = [
        (Named("a"), Element({Named("abar[1]"): HALF})),
        (Named("x"), Element.basis(X(1, 2))),
        (Named("y"), Element.basis(X(2, 1))),
        (Named("b"), Element({Named("bbar[1]"): HALF})),
    ]
    D = change_of_basis(sl, change, name="diamond")
    return D, dict(change)


__all__ = [
    "family_basis",
    "build_un",
    "build_ln_eps",
    "build_gln",
    "abelian",
    "build_Iu_direct",
    "build_glpluseps_direct",
    "BilinearForm",
    "standard_pairing",
    "form_invariance",
    "standard_duality",
    "coadjoint_semidirect",
    "manin_double",
    "sl_restrict",
    "diamond",
]
