"""Structure-constant Lie algebras over EpsPoly.

An algebra is an ordered basis of :class:`Label` values plus a sparse
antisymmetric bracket table.  Everything here is exact; subspace
computations (spans, derived series, centers) run over Q and therefore
require an algebra whose structure constants are plain rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from . import _linalg
from .scalars import EpsPoly, ScalarError, TruncationError, as_fraction, format_rational

__all__ = [
    "AlgebraError",
    "Label",
    "X",
    "A",
    "B",
    "Named",
    "parse_label",
    "canonical_key",
    "Element",
    "elem",
    "LieAlgebra",
    "Report",
    "Subspace",
    "bracket",
    "jacobi_defect",
    "verify_jacobi",
    "subspace_reduce",
    "bracket_span",
    "derived_series",
    "layer_series",
    "center",
    "is_solvable",
    "change_of_basis",
    "subalgebra",
    "specialize",
    "truncate",
    "expand_truncated",
    "realize",
    "coordinates",
    "format_element",
]


class AlgebraError(ValueError):
    pass


# -- labels -------------------------------------------------------------------

class Label(NamedTuple):
    kind: str  # "a" | "b" | "x" | "named"
    i: int = 0
    j: int = 0
    name: str = ""

    def __str__(self):
        if self.kind == "x":
            return f"x[{self.i},{self.j}]"
        if self.kind in ("a", "b"):
            return f"{self.kind}[{self.i}]"
        return self.name

    __repr__ = __str__

    @property
    def is_upper(self) -> bool:
        """True for labels living in the upper-triangular summand."""
        return self.kind == "a" or (self.kind == "x" and self.i < self.j)


def X(i: int, j: int) -> Label:
    if i == j:
        raise AlgebraError(f"x[{i},{i}] is not a label; use a[{i}] or b[{i}]")
    return Label("x", i, j)


def A(i: int) -> Label:
    return Label("a", i)


def B(i: int) -> Label:
    return Label("b", i)


def Named(name: str) -> Label:
    return Label("named", name=name)


def parse_label(text: str) -> Label:
    text = text.strip()
    if text.startswith("x[") and text.endswith("]"):
        i, j = text[2:-1].split(",")
        return X(int(i), int(j))
    for kind in ("a", "b"):
        if text.startswith(kind + "[") and text.endswith("]") and text[2:-1].isdigit():
            return Label(kind, int(text[2:-1]))
    return Named(text)


def canonical_key(label: Label) -> tuple:
    """Sort key: a_i, upper x_ij, b_i, lower x_ij."""
    if label.kind == "a":
        return (0, label.i, 0)
    if label.kind == "b":
        return (2, label.i, 0)
    if label.kind == "x":
        return (1 if label.i < label.j else 3, label.i, label.j)
    raise AlgebraError(f"named label {label} has no canonical position")


# -- elements -----------------------------------------------------------------

def _coerce_coeff(c) -> EpsPoly:
    if isinstance(c, EpsPoly):
        return c
    return EpsPoly.const(as_fraction(c))


class Element:
    """Sparse linear combination of labels with EpsPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        out = {}
        for lab, c in (terms or {}).items():
            c = _coerce_coeff(c)
            if c:
                out[lab] = c
        self.terms: Dict[Label, EpsPoly] = out

    @classmethod
    def _wrap(cls, terms: dict) -> "Element":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def basis(cls, label: Label) -> "Element":
        return cls._wrap({label: EpsPoly.const(1)})

    @classmethod
    def zero(cls) -> "Element":
        return cls._wrap({})

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, label: Label) -> EpsPoly:
        return self.terms.get(label, EpsPoly._raw((), None))

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        for lab, c in other.terms.items():
            old = out.get(lab)
            if old is None:
                out[lab] = c
            else:
                s = old + c
                if s:
                    out[lab] = s
                else:
                    del out[lab]
        return Element._wrap(out)

    def __neg__(self):
        return Element._wrap({lab: -c for lab, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            return NotImplemented
        if not isinstance(scalar, EpsPoly):
            scalar = as_fraction(scalar)
        out = {}
        for lab, c in self.terms.items():
            v = c * scalar
            if v:
                out[lab] = v
        return Element._wrap(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, fn: Callable[[EpsPoly], EpsPoly]) -> "Element":
        return Element({lab: fn(c) for lab, c in self.terms.items()})

    def is_rational(self) -> bool:
        return all(c.is_constant() and c.trunc is None for c in self.terms.values())

    def __str__(self):
        return format_element(self)

    __repr__ = __str__


def elem(*pairs) -> Element:
    """``elem((X(1,2), 1), (B(1), Fraction(1, 2)))`` or ``elem(X(1,2))``."""
    terms: dict = {}
    for p in pairs:
        lab, c = (p, 1) if isinstance(p, Label) else p
        terms[lab] = _coerce_coeff(c) + terms.get(lab, 0)
    return Element(terms)


def format_element(x: Element, order: Optional[Mapping[Label, int]] = None) -> str:
    """Signed term list: monomials sorted by eps-degree, then basis order."""
    if not x.terms:
        return "0"
    if order is None:
        try:
            keys = {lab: canonical_key(lab) for lab in x.terms}
        except AlgebraError:
            keys = {lab: (9, str(lab)) for lab in x.terms}
    else:
        keys = order
    monos = []
    for lab, c in x.terms.items():
        for d, v in enumerate(c.coeffs):
            if v:
                monos.append((d, keys[lab], v, lab))
    monos.sort(key=lambda t: (t[0], t[1]))
    out = []
    for d, _, v, lab in monos:
        mag = abs(v)
        parts = []
        if mag != 1:
            parts.append(format_rational(mag))
        if d:
            parts.append("eps" if d == 1 else f"eps^{d}")
        parts.append(str(lab))
        term = "*".join(parts)
        if not out:
            out.append(("-" if v < 0 else "") + term)
        else:
            out.append((" - " if v < 0 else " + ") + term)
    return "".join(out)


# -- reports ------------------------------------------------------------------

@dataclass
class Report:
    """Outcome of a check: ``ok`` plus witnesses (or named sub-checks)."""

    ok: bool
    failures: list = field(default_factory=list)
    checks: Dict[str, "Report"] = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def from_failures(cls, failures: list) -> "Report":
        return cls(not failures, list(failures))

    @classmethod
    def combine(cls, checks: Dict[str, "Report"]) -> "Report":
        ok = all(r.ok for r in checks.values())
        failures = [(name, w) for name, r in checks.items() for w in r.failures]
        return cls(ok, failures, dict(checks))

    def summary(self) -> str:
        if self.ok:
            return "PASS"
        return f"FAIL {self.failures[0] if self.failures else ''}".rstrip()


# -- algebras -----------------------------------------------------------------

class LieAlgebra:
    """Ordered basis plus sparse bracket table on pairs ``p < q``.

    ``table`` maps basis positions ``(p, q)`` with ``p < q`` to the nonzero
    Element ``[b_p, b_q]``.  ``parent``/``realization`` record how a derived
    algebra (subalgebra, change of basis) sits inside the one it came from.
    """

    def __init__(
        self,
        name: str,
        n: int,
        basis: Sequence[Label],
        table: Mapping[Tuple[int, int], Element],
        scalar_trunc: Optional[int] = None,
        over_eps: bool = False,
        parent: Optional["LieAlgebra"] = None,
        realization: Optional[Mapping[Label, Element]] = None,
    ):
        self.name = name
        self.n = n
        self.basis = tuple(basis)
        self.index = {lab: p for p, lab in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise AlgebraError("duplicate basis labels")
        self.scalar_trunc = scalar_trunc
        self.over_eps = over_eps or scalar_trunc is not None
        self.parent = parent
        self.realization = dict(realization) if realization else None
        dim = len(self.basis)
        clean = {}
        for (p, q), e in table.items():
            if not 0 <= p < q < dim:
                raise AlgebraError(f"table key {(p, q)} is not an ordered pair of positions")
            for lab in e.terms:
                if lab not in self.index:
                    raise AlgebraError(f"table entry uses foreign label {lab}")
            if e:
                clean[(p, q)] = e
        self.table: Dict[Tuple[int, int], Element] = clean
        self._adj: List[Dict[int, Element]] = [{} for _ in range(dim)]
        for (p, q), e in clean.items():
            self._adj[p][q] = e
            self._adj[q][p] = -e
        self._rsc = None

    @classmethod
    def from_function(cls, name, n, basis, fn: Callable[[Label, Label], Element], **kw) -> "LieAlgebra":
        basis = tuple(basis)
        table = {}
        for p, q in combinations(range(len(basis)), 2):
            e = fn(basis[p], basis[q])
            if e:
                table[(p, q)] = e
        return cls(name, n, basis, table, **kw)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def position(self, label: Label) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise AlgebraError(f"label {label} is not in the basis of {self.name}") from None

    def bracket_basis(self, p: int, q: int) -> Element:
        return self._adj[p].get(q) or Element.zero()

    @property
    def ring(self) -> str:
        if self.scalar_trunc is not None:
            return f"Q[eps]/eps^{self.scalar_trunc + 1}"
        return "Q[eps]" if self.over_eps else "Q"

    def is_rational(self) -> bool:
        """True when every structure constant is an untruncated constant."""
        return self.scalar_trunc is None and all(e.is_rational() for e in self.table.values())

    def is_abelian(self) -> bool:
        return not self.table

    def rational_sc(self) -> List[Dict[int, Dict[int, Fraction]]]:
        """Position-indexed rational structure constants ``sc[p][q][r]``."""
        if self._rsc is None:
            if not self.is_rational():
                raise ScalarError(
                    f"{self.name}: linear algebra needs rational structure constants; "
                    "specialize eps first"
                )
            sc = []
            for row in self._adj:
                sc.append({q: {self.index[lab]: c.constant_term for lab, c in e.terms.items()}
                           for q, e in row.items()})
            self._rsc = sc
        return self._rsc

    def same_table(self, other: "LieAlgebra") -> bool:
        return (self.basis == other.basis and self.table == other.table
                and self.scalar_trunc == other.scalar_trunc)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.same_table(other)

    __hash__ = None

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, n={self.n}, dim={self.dim}, ring={self.ring})"


def _check_labels(L: LieAlgebra, x: Element) -> None:
    for lab in x.terms:
        if lab not in L.index:
            raise AlgebraError(f"label {lab} is not in the basis of {L.name}")


def bracket(L: LieAlgebra, x: Element, y: Element) -> Element:
    """Bilinear extension of the table of ``L``."""
    _check_labels(L, x)
    _check_labels(L, y)
    acc: Dict[Label, EpsPoly] = {}
    index, adj = L.index, L._adj
    for lx, cx in x.terms.items():
        row = adj[index[lx]]
        if not row:
            continue
        for ly, cy in y.terms.items():
            e = row.get(index[ly])
            if e is None:
                continue
            c = cx * cy
            for lr, cr in e.terms.items():
                v = c * cr
                old = acc.get(lr)
                acc[lr] = v if old is None else old + v
    return Element._wrap({lab: c for lab, c in acc.items() if c})


def _bracket_with_basis(L: LieAlgebra, x: Element, r: int) -> Element:
    acc: Dict[Label, EpsPoly] = {}
    for lx, cx in x.terms.items():
        e = L._adj[L.index[lx]].get(r)
        if e is None:
            continue
        for lr, cr in e.terms.items():
            v = cx * cr
            old = acc.get(lr)
            acc[lr] = v if old is None else old + v
    return Element._wrap({lab: c for lab, c in acc.items() if c})


def jacobi_defect(L: LieAlgebra, p: int, q: int, r: int) -> Element:
    """[[b_p,b_q],b_r] + [[b_q,b_r],b_p] + [[b_r,b_p],b_q]."""
    for k in (p, q, r):
        if not 0 <= k < L.dim:
            raise AlgebraError(f"basis position {k} out of range for {L.name}")
    bb = L.bracket_basis
    return (_bracket_with_basis(L, bb(p, q), r)
            + _bracket_with_basis(L, bb(q, r), p)
            + _bracket_with_basis(L, bb(r, p), q))


def verify_jacobi(L: LieAlgebra, max_failures: Optional[int] = None) -> Report:
    """Check Jacobi on every basis triple p < q < r."""
    failures = []
    for p, q, r in combinations(range(L.dim), 3):
        d = jacobi_defect(L, p, q, r)
        if d:
            failures.append(((L.basis[p], L.basis[q], L.basis[r]), d))
            if max_failures is not None and len(failures) >= max_failures:
                break
    return Report.from_failures(failures)


# -- subspaces ----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Span in canonical reduced row echelon form over Q.

    ``rows`` are sorted by pivot position; each row is a tuple of
    ``(position, coefficient)`` pairs with coefficient 1 at the pivot.
    """

    basis: Tuple[Label, ...]
    rows: Tuple[Tuple[Tuple[int, Fraction], ...], ...]

    @classmethod
    def _from_echelon(cls, basis, ech: _linalg.Echelon) -> "Subspace":
        rows = tuple(tuple(sorted(r.items())) for r in ech.sorted_rows())
        return cls(tuple(basis), rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def vectors(self) -> List[Dict[int, Fraction]]:
        return [dict(r) for r in self.rows]

    @property
    def basis_elements(self) -> List[Element]:
        return [Element({self.basis[p]: c for p, c in r}) for r in self.rows]

    def _echelon(self) -> _linalg.Echelon:
        ech = _linalg.Echelon()
        ech.rows = {r[0][0]: dict(r) for r in self.rows}
        return ech

    def __contains__(self, x) -> bool:
        if isinstance(x, Element):
            x = _element_vector(self.basis, x)
        return x in self._echelon()

    def issubset(self, other: "Subspace") -> bool:
        ech = other._echelon()
        return all(dict(r) in ech for r in self.rows)

    __le__ = issubset

    def __str__(self):
        return "span{" + ", ".join(str(e) for e in self.basis_elements) + "}"


def _element_vector(basis: Sequence[Label], x: Element, index=None) -> Dict[int, Fraction]:
    index = index or {lab: p for p, lab in enumerate(basis)}
    v = {}
    for lab, c in x.terms.items():
        if c.trunc is not None or not c.is_constant():
            raise ScalarError("span operations need rational coefficients; specialize eps first")
        if lab not in index:
            raise AlgebraError(f"label {lab} is not in the ambient basis")
        v[index[lab]] = c.constant_term
    return v


def subspace_reduce(ambient: LieAlgebra, gens: Iterable[Element]) -> Subspace:
    """Canonical echelon basis of the span of ``gens``."""
    if ambient.scalar_trunc is not None:
        raise TruncationError(f"{ambient.name} has truncated scalars; specialize eps first")
    ech = _linalg.Echelon(_element_vector(ambient.basis, g, ambient.index) for g in gens)
    return Subspace._from_echelon(ambient.basis, ech)


def _full(L: LieAlgebra) -> Subspace:
    ech = _linalg.Echelon({p: Fraction(1)} for p in range(L.dim))
    return Subspace._from_echelon(L.basis, ech)


def _vec_bracket(sc, u: Dict[int, Fraction], v: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for p, cu in u.items():
        row = sc[p]
        if not row:
            continue
        for q, cv in v.items():
            e = row.get(q)
            if e is None:
                continue
            c = cu * cv
            for r, cr in e.items():
                nv = out.get(r, 0) + c * cr
                if nv:
                    out[r] = nv
                else:
                    out.pop(r, None)
    return out


def bracket_span(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Reduced span of all brackets of basis rows of ``U`` and ``V``."""
    sc = L.rational_sc()
    ech = _linalg.Echelon()
    us, vs = U.vectors(), V.vectors()
    symmetric = U == V
    for a, u in enumerate(us):
        for b, v in enumerate(vs):
            if symmetric and b <= a:
                continue
            if len(ech) == L.dim:
                break
            w = _vec_bracket(sc, u, v)
            if w:
                ech.add(w)
    return Subspace._from_echelon(L.basis, ech)


def derived_series(L: LieAlgebra) -> List[Subspace]:
    """D_0 = L, D_{m+1} = [D_m, D_m], stopping once the chain stabilizes."""
    chain = [_full(L)]
    while True:
        nxt = bracket_span(L, chain[-1], chain[-1])
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
        if nxt.dim == 0:
            return chain


def layer_series(L: LieAlgebra) -> List[Subspace]:
    """g, g'_1 = [g,g], g'_p = [g'_1, g'_{p-1}], until zero (or stabilization)."""
    chain = [_full(L)]
    first = bracket_span(L, chain[0], chain[0])
    chain.append(first)
    while chain[-1].dim:
        nxt = bracket_span(L, first, chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def center(L: LieAlgebra) -> Subspace:
    """Kernel of the adjoint representation."""
    sc = L.rational_sc()
    cols = []
    for p in range(L.dim):
        v = {}
        for q, e in sc[p].items():
            for r, c in e.items():
                v[(q, r)] = c
        cols.append(v)
    ech = _linalg.Echelon(_linalg.nullspace(cols))
    return Subspace._from_echelon(L.basis, ech)


def expand_truncated(L: LieAlgebra) -> LieAlgebra:
    """Regard an algebra over Q[eps]/(eps^(k+1)) as a Q-algebra.

    The new basis is ``label@eps^d`` for d = 0..k (label-major order).
    """
    k = L.scalar_trunc
    if k is None:
        raise AlgebraError(f"{L.name} is not truncated")
    labs = [Named(f"{lab}@eps^{d}") for lab in L.basis for d in range(k + 1)]

    def pos(p, d):
        return p * (k + 1) + d

    table = {}
    for (p, q), e in L.table.items():
        for d1 in range(k + 1):
            for d2 in range(k + 1 - d1):
                terms = {}
                for lab, c in e.terms.items():
                    r = L.index[lab]
                    for d, v in enumerate(c.coeffs):
                        if v and d + d1 + d2 <= k:
                            terms[labs[pos(r, d + d1 + d2)]] = v
                if terms:
                    a, b = pos(p, d1), pos(q, d2)
                    el = Element(terms)
                    table[(a, b) if a < b else (b, a)] = el if a < b else -el
    return LieAlgebra(f"{L.name}(over Q)", L.n, labs, table)


def is_solvable(L: LieAlgebra) -> bool:
    """Derived series reaches 0.  Truncated algebras are expanded over Q first."""
    if L.scalar_trunc is not None:
        L = expand_truncated(L)
    return derived_series(L)[-1].dim == 0


# -- changes of scalars -------------------------------------------------------

def _map_table(L: LieAlgebra, fn, **kw) -> LieAlgebra:
    table = {}
    for key, e in L.table.items():
        e2 = Element._wrap({lab: c2 for lab, c in e.terms.items() if (c2 := fn(c))})
        if e2:
            table[key] = e2
    return LieAlgebra(kw.pop("name", L.name), L.n, L.basis, table, **kw)


def specialize(L: LieAlgebra, value) -> LieAlgebra:
    """Evaluate every structure constant at eps = value."""
    if L.scalar_trunc is not None:
        raise TruncationError("cannot specialize a truncated polynomial")
    v = as_fraction(value)
    return _map_table(L, lambda c: EpsPoly.const(c.specialize(v)))


def truncate(L: LieAlgebra, k: int) -> LieAlgebra:
    """Reduce every structure constant mod eps^(k+1)."""
    if L.scalar_trunc is not None and k > L.scalar_trunc:
        raise TruncationError(f"cannot lift eps^{L.scalar_trunc + 1} truncation to eps^{k + 1}")
    return _map_table(L, lambda c: c.truncated(k), scalar_trunc=k, over_eps=True)


# -- changes of basis ---------------------------------------------------------

class _Coords:
    """Coordinates in a family of rational elements; eps-degrees solved separately."""

    def __init__(self, L: LieAlgebra, vectors: Sequence[Element]):
        for v in vectors:
            if not v.is_rational():
                raise AlgebraError("change-of-basis vectors must have rational coefficients")
        self.L = L
        try:
            self.solver = _linalg.SpanSolver(_element_vector(L.basis, v, L.index) for v in vectors)
        except ValueError:
            raise AlgebraError("proposed basis vectors are linearly dependent") from None

    def __call__(self, x: Element) -> Optional[Dict[int, EpsPoly]]:
        by_degree: Dict[int, Dict[int, Fraction]] = {}
        trunc = None
        for lab, c in x.terms.items():
            trunc = c.trunc if c.trunc is not None else trunc
            p = self.L.index[lab]
            for d, v in enumerate(c.coeffs):
                if v:
                    by_degree.setdefault(d, {})[p] = v
        out: Dict[int, list] = {}
        for d, vec in by_degree.items():
            sol = self.solver.coordinates(vec)
            if sol is None:
                return None
            for i, v in sol.items():
                out.setdefault(i, {})[d] = v
        res = {}
        for i, cs in out.items():
            poly = EpsPoly([cs.get(d, 0) for d in range(max(cs) + 1)], trunc)
            if poly:
                res[i] = poly
        return res


def subalgebra(L: LieAlgebra, new_basis: Sequence[Tuple[Label, Element]], name: Optional[str] = None,
               n: Optional[int] = None) -> LieAlgebra:
    """Algebra on the span of ``new_basis`` with the induced bracket.

    Raises AlgebraError if the span is not closed under the bracket.
    """
    labels = [lab for lab, _ in new_basis]
    vecs = [e for _, e in new_basis]
    for v in vecs:
        _check_labels(L, v)
    coords = _Coords(L, vecs)
    table = {}
    for p, q in combinations(range(len(vecs)), 2):
        br = bracket(L, vecs[p], vecs[q])
        c = coords(br)
        if c is None:
            raise AlgebraError(f"span not closed: [{labels[p]},{labels[q]}] = {br}")
        if c:
            table[(p, q)] = Element._wrap({labels[i]: v for i, v in c.items()})
    return LieAlgebra(name or L.name, L.n if n is None else n, labels, table,
                      scalar_trunc=L.scalar_trunc, over_eps=L.over_eps,
                      parent=L, realization=dict(new_basis))


def change_of_basis(L: LieAlgebra, new_basis: Sequence[Tuple[Label, Element]],
                    name: Optional[str] = None) -> LieAlgebra:
    """Rewrite ``L`` in a new basis given by rational combinations of the old one."""
    if len(new_basis) != L.dim:
        raise AlgebraError(f"need {L.dim} basis vectors, got {len(new_basis)}")
    return subalgebra(L, new_basis, name=name)


def realize(S: LieAlgebra, x: Element, target: LieAlgebra) -> Element:
    """Express an element of ``S`` in an ancestor algebra ``target``."""
    while S is not target:
        if S.parent is None:
            raise AlgebraError(f"{target.name} is not an ancestor of {S.name}")
        out = Element.zero()
        for lab, c in x.terms.items():
            out = out + S.realization[lab] * c
        x, S = out, S.parent
    return x


def coordinates(S: LieAlgebra, x: Element, source: LieAlgebra) -> Element:
    """Inverse of :func:`realize`: rewrite ``x`` from ancestor ``source`` in ``S``'s basis."""
    chain = []
    T = S
    while T is not source:
        if T.parent is None:
            raise AlgebraError(f"{source.name} is not an ancestor of {S.name}")
        chain.append(T)
        T = T.parent
    for T in reversed(chain):
        coords = _Coords(T.parent, [T.realization[lab] for lab in T.basis])
        c = coords(x)
        if c is None:
            raise AlgebraError(f"{x} does not lie in {T.name}")
        x = Element._wrap({T.basis[i]: v for i, v in c.items()})
    return x
