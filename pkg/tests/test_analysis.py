import pytest

from lieforge.analysis import (
    layer,
    layer_trace_gap,
    length,
    listed_generators,
    psi_preserves_length,
    verify_layer_table,
    verify_metric_layers,
)
from lieforge.constructions import build_Iu_direct
from lieforge.core import A, B, X, AlgebraError, bracket, elem
from lieforge.morphisms import perm_map


def test_length_examples():
    assert length(X(1, 2), 3) == 1
    assert length(X(3, 1), 3) == 1
    assert length(X(2, 1), 3) == 2
    assert length(X(1, 3), 3) == 2
    with pytest.raises(AlgebraError, match="layer"):
        length(A(1), 3)
    assert layer(A(1), 3) == 0 and layer(B(2), 3) == 3


def test_listed_generators_n3():
    rows = [[str(l) for l in row] for row in listed_generators(3)]
    assert rows == [
        ["a[1]", "a[2]", "a[3]"],
        ["x[1,2]", "x[2,3]", "x[3,1]"],
        ["x[1,3]", "x[2,1]", "x[3,2]"],
        ["b[1]", "b[2]", "b[3]"],
    ]


@pytest.mark.parametrize("n", range(2, 7))
def test_rows_partition_the_basis(n):
    labs = [lab for row in listed_generators(n) for lab in row]
    assert sorted(map(str, labs)) == sorted(map(str, build_Iu_direct(n).basis))


def test_psi_preserves_length():
    for n in range(2, 8):
        assert psi_preserves_length(n)
    assert not psi_preserves_length(3, perm_map([2, 1, 3]))


def test_bracket_adds_layers():
    L = build_Iu_direct(4)
    for u in L.basis:
        for v in L.basis:
            for t in bracket(L, elem(u), elem(v)):
                assert layer(t, 4) == layer(u, 4) + layer(v, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_layer_table_structural_subchecks(n):
    rep = verify_layer_table(n)
    for key in ("b", "c", "e", "f"):
        assert rep.checks[key], key


@pytest.mark.parametrize("n", range(2, 7))
def test_layer_table_series_gap(n):
    # sum b_i has trace n in the b-block while every bracket has b-trace 0,
    # so it never enters [g, g]: sub-check (a) cannot hold for any n
    rep = verify_layer_table(n)
    assert not rep.checks["a"]
    p, info = rep.checks["a"].failures[0]
    assert p == 1
    got, expected = info["dims"]
    assert expected - got == 1
    assert info["extra"] is None
    # (d) fails exactly on the b row
    assert not rep.checks["d"]
    assert {p for p, _ in rep.checks["d"].failures} == {n}
    assert len(rep.checks["d"].failures) == n


@pytest.mark.parametrize("n", range(2, 7))
def test_layer_trace_gap(n):
    assert layer_trace_gap(n)


def test_b_trace_of_brackets_vanishes():
    L = build_Iu_direct(4)
    for e in L.table.values():
        assert sum(e.coeff(B(i)).constant_term for i in range(1, 5)) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_metric_layers(n):
    assert verify_metric_layers(n)


def test_guards():
    with pytest.raises(AlgebraError, match="guard"):
        verify_layer_table(7)
    with pytest.raises(AlgebraError, match="guard"):
        verify_metric_layers(7)
    assert verify_layer_table(2, guard=2).checks["f"]
