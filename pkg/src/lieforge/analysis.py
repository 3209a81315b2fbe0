"""Lengths, layers and the checks attached to the layer table of Iu_n."""

from __future__ import annotations

from typing import Dict, List, Optional

from .constructions import build_Iu_direct, form_invariance, standard_pairing
from .core import (
    A,
    B,
    AlgebraError,
    Element,
    Label,
    Report,
    X,
    bracket,
    bracket_span,
    layer_series,
    subspace_reduce,
)
from .morphisms import LinearMap, psi

__all__ = [
    "length",
    "layer",
    "listed_generators",
    "psi_preserves_length",
    "verify_layer_table",
    "verify_metric_layers",
    "layer_trace_gap",
]

DEFAULT_GUARD = 6


def length(label: Label, n: int) -> int:
    """j - i above the diagonal, n - (i - j) below it."""
    if label.kind != "x":
        raise AlgebraError(f"length is defined for x labels only, got {label}; use layer()")
    i, j = label.i, label.j
    if not (1 <= i <= n and 1 <= j <= n):
        raise AlgebraError(f"{label} has indices outside 1..{n}")
    return j - i if i < j else n - (i - j)


def layer(label: Label, n: int) -> int:
    if label.kind == "a":
        return 0
    if label.kind == "b":
        return n
    return length(label, n)


def _wrap(k: int, n: int) -> int:
    return (k - 1) % n + 1


def listed_generators(n: int) -> List[List[Label]]:
    """Rows 0..n of the layer table, each in psi-orbit order.

    Row p (0 < p < n) is x_{1,1+p}, x_{2,2+p}, ... with indices taken mod n.
    """
    rows = [[A(i) for i in range(1, n + 1)]]
    for p in range(1, n):
        rows.append([X(k, _wrap(k + p, n)) for k in range(1, n + 1)])
    rows.append([B(i) for i in range(1, n + 1)])
    return rows


def psi_preserves_length(n: int, m: Optional[LinearMap] = None) -> Report:
    """lambda(Psi(x_ij)) == lambda(x_ij) for every off-diagonal label."""
    m = psi(n) if m is None else m
    failures = []
    for lab, img in m.images.items():
        if lab.kind != "x":
            continue
        for t in img.terms:
            if t.kind != "x" or length(t, n) != length(lab, n):
                failures.append(lab)
                break
    return Report.from_failures(failures)


def verify_layer_table(n: int, guard: int = DEFAULT_GUARD) -> Report:
    """Run sub-checks (a)..(f) of the layer table on Iu_n.

    a  layer_series term p equals the span of listed generators of layers >= p
    b  brackets of layer-p and layer-q generators are homogeneous of layer p+q
    c  those brackets vanish when p+q > n
    d  each listed layer-p generator (p >= 2) is [layer-1 gen, layer-(p-1) gen]
    e  in row p the first n-p generators lie in u_n, the last p in u_n*
    f  Psi moves each row one step to the right, cyclically
    """
    if n > guard:
        raise AlgebraError(f"n = {n} exceeds the layer-table guard {guard}")
    L = build_Iu_direct(n)
    rows = listed_generators(n)
    basis_el = {lab: Element.basis(lab) for lab in L.basis}
    checks: Dict[str, Report] = {}

    # (a)
    series = layer_series(L)
    fails = []
    for p in range(n + 2):
        gens = [basis_el[lab] for row in rows[p:] for lab in row]
        expected = subspace_reduce(L, gens)
        got = series[p] if p < len(series) else series[-1]
        if got != expected:
            missing = next((e for e in expected.basis_elements if e not in got), None)
            extra = next((e for e in got.basis_elements if e not in expected), None)
            fails.append((p, {"dims": (got.dim, expected.dim), "missing": missing, "extra": extra}))
    checks["a"] = Report.from_failures(fails)

    # (b), (c): grading on basis pairs, plus the subspace form of (b)
    fails_b, fails_c = [], []
    for p in range(L.dim):
        for q in range(p + 1, L.dim):
            u, v = L.basis[p], L.basis[q]
            br = L.bracket_basis(p, q)
            total = layer(u, n) + layer(v, n)
            if total > n and br:
                fails_c.append(((u, v), br))
            for t in br:
                if layer(t, n) != total:
                    fails_b.append(((u, v), t))
    filt = [subspace_reduce(L, [basis_el[lab] for row in rows[p:] for lab in row])
            for p in range(n + 1)]
    zero = subspace_reduce(L, [])
    for p in range(n + 1):
        for q in range(p, n + 1):
            target = filt[p + q] if p + q <= n else zero
            span = bracket_span(L, filt[p], filt[q])
            if not span.issubset(target):
                fails_b.append((("layer", p, q), "bracket leaves layer p+q"))
    checks["b"] = Report.from_failures(fails_b)
    checks["c"] = Report.from_failures(fails_c)

    # (d)
    fails = []
    for p in range(2, n + 1):
        for g in rows[p]:
            target = basis_el[g]
            if not any(bracket(L, basis_el[u], basis_el[v]) == target
                       for u in rows[1] for v in rows[p - 1]):
                fails.append((p, g))
    checks["d"] = Report.from_failures(fails)

    # (e)
    fails = []
    for p, row in enumerate(rows):
        for k, g in enumerate(row):
            if g.is_upper != (k < n - p):
                fails.append((p, g))
    checks["e"] = Report.from_failures(fails)

    # (f)
    m = psi(n)
    fails = []
    for p, row in enumerate(rows):
        for k, g in enumerate(row):
            if m(basis_el[g]) != basis_el[row[(k + 1) % n]]:
                fails.append((p, g))
    checks["f"] = Report.from_failures(fails)

    return Report.combine(checks)


def verify_metric_layers(n: int, guard: int = DEFAULT_GUARD) -> Report:
    """The pairing of u_n with u_n* on Iu_n: layer p meets only layer n-p, and it is invariant."""
    if n > guard:
        raise AlgebraError(f"n = {n} exceeds the metric guard {guard}")
    L = build_Iu_direct(n)
    form = standard_pairing(n)
    fails = []
    gens = [lab for row in listed_generators(n) for lab in row]
    for u in gens:
        for v in gens:
            c = form.value(u, v)
            if c and layer(u, n) + layer(v, n) != n:
                fails.append(((u, v), c))
    checks = {
        "pairing": Report.from_failures(fails),
        "invariance": form_invariance(L, form),
    }
    return Report.combine(checks)


def layer_trace_gap(n: int, guard: int = DEFAULT_GUARD) -> Report:
    """Compare layer_series with the listed-generator filtration modulo b_1 + ... + b_n.

    Passes when, for every 1 <= p <= n, the term g'_p has codimension one
    in the span of listed generators of layers >= p and the missing
    direction is exactly the sum of the b_i.
    """
    if n > guard:
        raise AlgebraError(f"n = {n} exceeds the layer-table guard {guard}")
    L = build_Iu_direct(n)
    rows = listed_generators(n)
    trace = Element({B(i): 1 for i in range(1, n + 1)})
    series = layer_series(L)
    fails = []
    for p in range(1, n + 1):
        filt = subspace_reduce(L, [Element.basis(lab) for row in rows[p:] for lab in row])
        got = series[p] if p < len(series) else series[-1]
        padded = subspace_reduce(L, got.basis_elements + [trace])
        if not (got.issubset(filt) and padded == filt and got.dim == filt.dim - 1):
            fails.append((p, (got.dim, filt.dim)))
    return Report.from_failures(fails)
