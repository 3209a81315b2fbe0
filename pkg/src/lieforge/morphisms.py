"""Linear maps between algebras, (anti-)automorphism checks and symmetry search."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import _linalg
from .constructions import family_basis
from .core import (
    A,
    B,
    AlgebraError,
    Element,
    Label,
    LieAlgebra,
    Report,
    X,
    bracket,
    coordinates,
    realize,
)
from .scalars import EpsPoly, as_fraction

__all__ = [
    "LinearMap",
    "Permutation",
    "identity_map",
    "map_apply",
    "compose",
    "power",
    "order_of",
    "is_homomorphism",
    "is_automorphism",
    "is_antiautomorphism",
    "psi",
    "phi",
    "perm_map",
    "enumerate_symmetries",
    "closure_check",
    "exp_ad",
    "transport",
]


class Permutation(tuple):
    """A permutation of 1..n in one-line notation: ``p[i-1]`` is the image of i."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(self[o - 1] for o in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def cycle(cls, n: int) -> "Permutation":
        """psi = (1 2 ... n)."""
        return cls([i % n + 1 for i in range(1, n + 1)])

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    def __str__(self):
        sep = "" if len(self) < 10 else " "
        return sep.join(str(i) for i in self)

    def __repr__(self):
        return f"Permutation({str(self)!r})"


class LinearMap:
    """Linear map given by the images of the source basis labels.

    ``orientation`` records whether the map is meant as an automorphism
    ("auto") or an anti-automorphism ("anti") candidate.
    """

    def __init__(self, images: Mapping[Label, Element], orientation: str = "auto"):
        if orientation not in ("auto", "anti"):
            raise ValueError(f"orientation must be 'auto' or 'anti', not {orientation!r}")
        self.images: Dict[Label, Element] = dict(images)
        self.orientation = orientation

    @property
    def domain(self) -> Tuple[Label, ...]:
        return tuple(self.images)

    def __call__(self, x: Element) -> Element:
        return map_apply(self, x)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.images == other.images

    __hash__ = None

    def is_identity(self) -> bool:
        return all(img.terms.keys() == {lab} and img.terms[lab] == 1
                   for lab, img in self.images.items())

    @cached_property
    def is_invertible(self) -> bool:
        labels = self.domain
        targets = sorted({t for img in self.images.values() for t in img.terms}, key=str)
        if len(targets) != len(labels):
            return False
        coeffs = [c for img in self.images.values() for c in img.terms.values()]
        trunc = next((c.trunc for c in coeffs if c.trunc is not None), None)
        if all(c.is_constant() for c in coeffs) or trunc is not None:
            # over Q, or over Q[eps]/eps^(k+1) where units are detected mod eps
            return _linalg.rank(
                {t: img.terms[t].constant_term for t in img.terms if img.terms[t].constant_term}
                for img in self.images.values()
            ) == len(labels)
        return _poly_det_is_unit(self, labels, targets)

    def __repr__(self):
        body = ", ".join(f"{k} -> {v}" for k, v in list(self.images.items())[:4])
        more = ", ..." if len(self.images) > 4 else ""
        return f"LinearMap[{self.orientation}]({body}{more})"


def _poly_det_is_unit(m: LinearMap, labels, targets) -> bool:
    # det over Q[eps] by exact interpolation; a unit of Q[eps] is a nonzero constant
    maxdeg = max((c.degree for img in m.images.values() for c in img.terms.values()), default=0)
    npts = len(labels) * maxdeg + 1
    pts = [Fraction(k) for k in range(npts)]
    vals = []
    for v in pts:
        mat = [[img.coeff(t).specialize(v) for t in targets] for img in m.images.values()]
        vals.append(_linalg.determinant(mat))
    # a constant polynomial takes the same value everywhere; degree <= npts-1 forces it
    return vals[0] != 0 and all(x == vals[0] for x in vals)


def identity_map(labels: Sequence[Label]) -> LinearMap:
    return LinearMap({lab: Element.basis(lab) for lab in labels})


def map_apply(m: LinearMap, x: Element) -> Element:
    out: Dict[Label, EpsPoly] = {}
    for lab, c in x.terms.items():
        img = m.images.get(lab)
        if img is None:
            raise AlgebraError(f"label {lab} is not in the domain of the map")
        for t, v in img.terms.items():
            w = c * v
            old = out.get(t)
            out[t] = w if old is None else old + w
    return Element._wrap({t: c for t, c in out.items() if c})


def compose(m1: LinearMap, m2: LinearMap) -> LinearMap:
    """m1 after m2."""
    orient = "auto" if m1.orientation == m2.orientation else "anti"
    return LinearMap({lab: map_apply(m1, img) for lab, img in m2.images.items()}, orient)


def power(m: LinearMap, k: int) -> LinearMap:
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = identity_map(m.domain)
    for _ in range(k):
        result = compose(m, result)
    return result


def order_of(m: LinearMap, bound: int = 64) -> Optional[int]:
    """Least k >= 1 with m^k == identity, or None if k would exceed ``bound``."""
    cur = m
    for k in range(1, bound + 1):
        if cur.is_identity():
            return k
        cur = compose(m, cur)
    return None


# -- structure preservation ---------------------------------------------------

def _check_domain(L: LieAlgebra, m: LinearMap) -> None:
    if set(m.images) != set(L.basis):
        missing = set(L.basis) - set(m.images)
        extra = set(m.images) - set(L.basis)
        raise AlgebraError(f"map domain does not match {L.name}: missing {sorted(map(str, missing))}, "
                           f"extra {sorted(map(str, extra))}")


def is_homomorphism(src: LieAlgebra, tgt: LieAlgebra, m: LinearMap, anti: bool = False,
                    max_failures: Optional[int] = None) -> Report:
    """m[x,y] == [mx,my] (or [my,mx] when ``anti``) on basis pairs of ``src``."""
    _check_domain(src, m)
    failures = []
    imgs = [m.images[lab] for lab in src.basis]
    for p in range(src.dim):
        for q in range(p + 1, src.dim):
            lhs = map_apply(m, src.bracket_basis(p, q))
            rhs = bracket(tgt, imgs[q], imgs[p]) if anti else bracket(tgt, imgs[p], imgs[q])
            if lhs != rhs:
                failures.append(((src.basis[p], src.basis[q]), lhs - rhs))
                if max_failures is not None and len(failures) >= max_failures:
                    return Report.from_failures(failures)
    return Report.from_failures(failures)


def is_automorphism(L: LieAlgebra, m: LinearMap, max_failures: Optional[int] = None) -> Report:
    _check_domain(L, m)
    if not m.is_invertible:
        return Report(False, [("not invertible", None)])
    return is_homomorphism(L, L, m, max_failures=max_failures)


def is_antiautomorphism(L: LieAlgebra, m: LinearMap, max_failures: Optional[int] = None) -> Report:
    _check_domain(L, m)
    if not m.is_invertible:
        return Report(False, [("not invertible", None)])
    return is_homomorphism(L, L, m, anti=True, max_failures=max_failures)


# -- permutation-induced maps -------------------------------------------------

def _kind_labels(n: int, kind: str) -> Tuple[Label, ...]:
    if kind in ("Iu", "glplus"):
        return family_basis(n)
    raise AlgebraError(f"permutation maps are defined on Iu/glplus labels, not {kind!r}")


def perm_map(sigma: Sequence[int], orientation: str = "auto", kind: str = "Iu") -> LinearMap:
    """auto: x_ij -> x_s(i)s(j); anti: x_ij -> x_s(j)s(i); a_i, b_i -> a_s(i), b_s(i)."""
    s = sigma if isinstance(sigma, Permutation) else Permutation(sigma)
    images = {}
    for lab in _kind_labels(len(s), kind):
        if lab.kind == "a":
            img = A(s(lab.i))
        elif lab.kind == "b":
            img = B(s(lab.i))
        elif orientation == "auto":
            img = X(s(lab.i), s(lab.j))
        else:
            img = X(s(lab.j), s(lab.i))
        images[lab] = Element.basis(img)
    return LinearMap(images, orientation)


def psi(n: int, kind: str = "Iu") -> LinearMap:
    """Shift every index by one, cyclically."""
    return perm_map(Permutation.cycle(n), "auto", kind)


def phi(n: int, kind: str = "Iu") -> LinearMap:
    """Flip along the anti-diagonal: x_ij -> x_(n+1-j)(n+1-i)."""
    images = {}
    for lab in _kind_labels(n, kind):
        if lab.kind == "x":
            img = X(n + 1 - lab.j, n + 1 - lab.i)
        else:
            img = Label(lab.kind, n + 1 - lab.i)
        images[lab] = Element.basis(img)
    return LinearMap(images, "anti")


def enumerate_symmetries(L: LieAlgebra, n: Optional[int] = None, guard: int = 8,
                         kind: str = "Iu") -> Tuple[List[Permutation], List[Permutation]]:
    """All index permutations inducing automorphisms, and anti-automorphisms, of ``L``.

    Both lists are sorted in lexicographic one-line order.
    """
    n = L.n if n is None else n
    if n > guard:
        raise AlgebraError(f"n = {n} exceeds the enumeration guard {guard} ({factorial(n)} candidates)")
    autos, antis = [], []
    for images in permutations(range(1, n + 1)):
        sigma = Permutation(images)
        if is_automorphism(L, perm_map(sigma, "auto", kind), max_failures=1):
            autos.append(sigma)
        if is_antiautomorphism(L, perm_map(sigma, "anti", kind), max_failures=1):
            antis.append(sigma)
    return autos, antis


def closure_check(autos: Sequence[Permutation], antis: Sequence[Permutation],
                  kind: str = "Iu") -> bool:
    """Whether the induced maps are closed under composition (as maps)."""
    maps = [perm_map(s, "auto", kind) for s in autos] + [perm_map(s, "anti", kind) for s in antis]
    for m1 in maps:
        for m2 in maps:
            c = compose(m1, m2)
            if not any(c == m and c.orientation == m.orientation for m in maps):
                return False
    return True


# -- inner automorphisms ------------------------------------------------------

def exp_ad(L: LieAlgebra, x: Element) -> LinearMap:
    """exp(ad_x) = sum ad_x^m / m!, for ad-nilpotent ``x``."""
    images = {}
    for lab in L.basis:
        term = Element.basis(lab)
        total = term
        for m in range(1, L.dim + 2):
            term = bracket(L, x, term) * Fraction(1, m)
            if not term:
                break
            total = total + term
        else:
            raise AlgebraError(f"ad of {x} is not nilpotent")
        images[lab] = total
    return LinearMap(images)


# -- transport to subalgebras -------------------------------------------------

def transport(m: LinearMap, S: LieAlgebra, ambient: LieAlgebra) -> LinearMap:
    """Restrict a map on ``ambient`` to the derived algebra ``S`` (which must be invariant)."""
    images = {}
    for lab in S.basis:
        x = realize(S, Element.basis(lab), ambient)
        images[lab] = coordinates(S, map_apply(m, x), ambient)
    return LinearMap(images, m.orientation)
