from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieforge.constructions import build_glpluseps_direct, build_Iu_direct, diamond, sl_restrict
from lieforge.core import A, B, X, AlgebraError, Element, Named, elem, specialize, truncate
from lieforge.morphisms import (
    LinearMap,
    Permutation,
    closure_check,
    compose,
    enumerate_symmetries,
    exp_ad,
    identity_map,
    is_antiautomorphism,
    is_automorphism,
    is_homomorphism,
    order_of,
    perm_map,
    phi,
    power,
    psi,
    transport,
)
from lieforge.scalars import EPS, EpsPoly

import oracles


# -- permutations ---------------------------------------------------------------

def test_permutation_basics():
    c = Permutation.cycle(3)
    assert str(c) == "231" and c(3) == 1
    assert c * c.inverse() == Permutation.identity(3)
    assert str(Permutation.reversal(4)) == "4321"
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_perm_map_is_functorial(s, t):
    s, t = Permutation(s), Permutation(t)
    assert compose(perm_map(s), perm_map(t)) == perm_map(s * t)


# -- psi and phi ------------------------------------------------------------------

def test_psi_phi_images():
    p, f = psi(3), phi(3)
    assert p(elem(X(1, 2))) == elem(X(2, 3))
    assert p(elem(X(3, 1))) == elem(X(1, 2))
    assert p(elem(A(3))) == elem(A(1))
    assert f(elem(X(1, 2))) == elem(X(2, 3))
    assert f(elem(X(1, 3))) == elem(X(1, 3))
    assert f(elem(B(1))) == elem(B(3))
    assert f.orientation == "anti"


@pytest.mark.parametrize("n", range(2, 9))
def test_psi_automorphism_of_Iu(n):
    L = build_Iu_direct(n)
    assert is_automorphism(L, psi(n))
    assert power(psi(n), n).is_identity()
    assert order_of(psi(n)) == n


@pytest.mark.parametrize("n", range(2, 7))
def test_psi_phi_on_glplus(n):
    g = build_glpluseps_direct(n)
    assert is_automorphism(g, psi(n, "glplus"))
    assert is_antiautomorphism(g, phi(n, "glplus"))
    assert is_antiautomorphism(build_Iu_direct(n), phi(n))
    assert compose(phi(n), phi(n)).is_identity()
    assert compose(phi(n), compose(psi(n), phi(n))) == power(psi(n), n - 1)


def test_psi_on_truncated_glplus():
    assert is_automorphism(truncate(build_glpluseps_direct(3), 1), psi(3, "glplus"))


def test_transposition_is_not_automorphism():
    L = build_Iu_direct(3)
    rep = is_automorphism(L, perm_map([2, 1, 3]), max_failures=1)
    assert not rep and len(rep.failures) == 1


def test_noninvertible_map_rejected():
    L = build_Iu_direct(2)
    m = LinearMap({lab: Element.zero() for lab in L.basis})
    assert not m.is_invertible
    assert not is_automorphism(L, m)


def test_domain_mismatch():
    with pytest.raises(AlgebraError, match="domain"):
        is_automorphism(build_Iu_direct(3), psi(2))


def test_poly_invertibility():
    g = build_glpluseps_direct(2)
    unit = identity_map(g.basis)
    unit.images[A(1)] = elem((A(1), EpsPoly([1, 1])))  # (1 + eps) a_1: not a unit
    assert not unit.is_invertible
    shear = identity_map(g.basis)
    shear.images[A(1)] = elem(A(1), (A(2), EPS))
    assert shear.is_invertible


# -- enumeration --------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumerate_Iu(n):
    L = build_Iu_direct(n)
    autos, antis = enumerate_symmetries(L)
    cyc = Permutation.cycle(n)
    powers = sorted({Permutation(range(1, n + 1))} | {
        Permutation(p) for p in [tuple(((i - 1 + k) % n) + 1 for i in range(1, n + 1)) for k in range(n)]})
    assert autos == powers and cyc in autos
    assert len(antis) == n
    assert closure_check(autos, antis)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumerate_matches_dense_oracle(n):
    L = build_Iu_direct(n)
    autos, antis = enumerate_symmetries(L)
    o_autos, o_antis = oracles.perm_symmetries(L, oracles.index_perm)
    assert [str(s) for s in autos] == o_autos
    assert [str(s) for s in antis] == o_antis


def test_enumerate_Iu3_antis_frozen():
    _, antis = enumerate_symmetries(build_Iu_direct(3))
    assert [str(s) for s in antis] == ["132", "213", "321"]


def test_enumerate_glplus_eps1():
    g = specialize(build_glpluseps_direct(3), 1)
    autos, antis = enumerate_symmetries(g, kind="glplus")
    assert len(autos) == 6 and len(antis) == 6


def test_enumerate_guard():
    with pytest.raises(AlgebraError, match="guard"):
        enumerate_symmetries(build_Iu_direct(3), guard=2)


# -- inner automorphisms and transport ----------------------------------------

def test_exp_ad():
    L = build_Iu_direct(3)
    m = exp_ad(L, elem(X(1, 2)))
    assert m(elem(A(1))) == elem(A(1), (X(1, 2), -1))
    assert is_automorphism(L, m)
    m2 = exp_ad(L, elem(X(1, 2), (X(2, 3), Fraction(3, 2)), X(3, 1)))
    assert is_automorphism(L, m2)
    with pytest.raises(AlgebraError, match="nilpotent"):
        exp_ad(L, elem(A(1), X(1, 2)))


def test_transport_to_diamond():
    D, _ = diamond()
    sl = D.parent
    Iu2 = sl.parent
    mphi = transport(transport(phi(2), sl, Iu2), D, sl)
    mpsi = transport(transport(psi(2), sl, Iu2), D, sl)
    a, x, y, b = (elem(Named(s)) for s in "axyb")
    assert [mphi(v) for v in (a, x, y, b)] == [-a, x, y, -b]
    assert [mpsi(v) for v in (a, x, y, b)] == [-a, y, x, -b]
    assert is_antiautomorphism(D, mphi) and is_automorphism(D, mpsi)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_psi_restricts_to_sl(n):
    for L, kind in ((build_Iu_direct(n), "Iu"), (build_glpluseps_direct(n), "glplus")):
        S = sl_restrict(L)
        assert is_automorphism(S, transport(psi(n, kind), S, L))
        assert is_antiautomorphism(S, transport(phi(n, kind), S, L))
