"""Exact scalars: rationals, Q[eps] and Q[eps]/(eps^(k+1)).

Rationals are plain :class:`fractions.Fraction` values.  :class:`EpsPoly`
is an immutable polynomial in ``eps`` with rational coefficients that may
carry a truncation degree ``k``; products then drop every power above
``k``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Union

__all__ = [
    "EpsPoly",
    "ScalarError",
    "TruncationError",
    "rat_canonical",
    "as_fraction",
    "poly_mul",
    "poly_specialize",
    "format_rational",
    "parse_rational",
    "parse_poly",
    "ZERO",
    "ONE",
    "EPS",
]


class ScalarError(ValueError):
    pass


class TruncationError(ScalarError):
    pass


def rat_canonical(num: int, den: int) -> Fraction:
    """Reduced, sign-normalized ``num/den``."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _join_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise TruncationError(f"incompatible truncations: eps^{a + 1} vs eps^{b + 1}")


Scalar = Union[int, Fraction, "EpsPoly"]


class EpsPoly:
    """Polynomial in eps over Q, optionally reduced mod eps^(trunc+1).

    Instances are canonical: no trailing zero coefficients, nothing above
    the truncation degree, so ``==`` is structural equality.
    """

    __slots__ = ("coeffs", "trunc", "_hash")

    def __init__(self, coeffs: Iterable = (), trunc: Optional[int] = None):
        if trunc is not None and trunc < 0:
            raise ScalarError("truncation degree must be >= 0")
        cs = [as_fraction(c) for c in coeffs]
        if trunc is not None:
            del cs[trunc + 1:]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.trunc = trunc
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple, trunc: Optional[int]) -> "EpsPoly":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj.trunc = trunc
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value, trunc: Optional[int] = None) -> "EpsPoly":
        return cls((value,), trunc)

    @classmethod
    def eps(cls, power: int = 1, trunc: Optional[int] = None) -> "EpsPoly":
        return cls([0] * power + [1], trunc)

    @classmethod
    def coerce(cls, value, trunc: Optional[int] = None) -> "EpsPoly":
        if isinstance(value, EpsPoly):
            return value
        return cls((value,), trunc)

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in eps; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, EpsPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = EpsPoly._raw((Fraction(other),) if other else (), None)
        trunc = _join_trunc(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for d, c in enumerate(b):
            cs[d] += c
        if trunc is not None:
            del cs[trunc + 1:]
        while cs and not cs[-1]:
            cs.pop()
        return EpsPoly._raw(tuple(cs), trunc)

    __radd__ = __add__

    def __neg__(self):
        return EpsPoly._raw(tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        if not isinstance(other, (EpsPoly, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, EpsPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if not other:
                return EpsPoly._raw((), self.trunc)
            return EpsPoly._raw(tuple(c * other for c in self.coeffs), self.trunc)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = EpsPoly.const(1, self.trunc)
        for _ in range(k):
            result = result * self
        return result

    def truncated(self, k: Optional[int]) -> "EpsPoly":
        """Image in Q[eps]/(eps^(k+1)); ``None`` lifts back to Q[eps]."""
        if k is None:
            return EpsPoly._raw(self.coeffs, None)
        return EpsPoly(self.coeffs, k)

    def specialize(self, value) -> Fraction:
        return poly_specialize(self, value)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, EpsPoly):
            return self.coeffs == other.coeffs and self.trunc == other.trunc
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.trunc))
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            term = _monomial(abs(c), d)
            if c < 0:
                out.append("-" + term)
            elif out:
                out.append("+" + term)
            else:
                out.append(term)
        return "".join(out)

    def __repr__(self):
        suffix = "" if self.trunc is None else f" mod eps^{self.trunc + 1}"
        return f"EpsPoly({self}{suffix})"


def poly_mul(p: EpsPoly, q: EpsPoly) -> EpsPoly:
    """Product in the common scalar ring of ``p`` and ``q``."""
    trunc = _join_trunc(p.trunc, q.trunc)
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return EpsPoly._raw((), trunc)
    if len(a) == 1 and len(b) == 1:
        return EpsPoly._raw((a[0] * b[0],), trunc)
    size = len(a) + len(b) - 1
    if trunc is not None:
        size = min(size, trunc + 1)
    cs = [Fraction(0)] * size
    for i, x in enumerate(a):
        if i >= size:
            break
        for j, y in enumerate(b):
            if i + j >= size:
                break
            cs[i + j] += x * y
    while cs and not cs[-1]:
        cs.pop()
    return EpsPoly._raw(tuple(cs), trunc)


def poly_specialize(p: EpsPoly, value) -> Fraction:
    """Evaluate at eps = value (Horner).  Truncated inputs are refused."""
    if p.trunc is not None:
        raise TruncationError("cannot specialize a truncated polynomial")
    v = as_fraction(value)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


ZERO = EpsPoly()
ONE = EpsPoly.const(1)
EPS = EpsPoly.eps()


# -- text form ----------------------------------------------------------------

def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _eps_power(d: int) -> str:
    return "eps" if d == 1 else f"eps^{d}"


def _monomial(mag: Fraction, d: int) -> str:
    # mag > 0
    if d == 0:
        return format_rational(mag)
    if mag == 1:
        return _eps_power(d)
    return f"{format_rational(mag)}*{_eps_power(d)}"


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ScalarError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return rat_canonical(num, den)


_MONO_RE = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*|$))?(?:eps(?:\^(\d+))?)?$")


def parse_monomial(text: str) -> tuple:
    """Parse an unsigned ``p/q*eps^d`` monomial into ``(Fraction, d)``."""
    m = _MONO_RE.match(text)
    if not m or not text or text.endswith("*"):
        raise ScalarError(f"bad monomial: {text!r}")
    coef = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
    if "eps" in text:
        d = int(m.group(2)) if m.group(2) else 1
    else:
        d = 0
    return coef, d


def parse_poly(text: str, trunc: Optional[int] = None) -> EpsPoly:
    """Inverse of ``str(EpsPoly)``."""
    text = text.replace(" ", "")
    if not text:
        raise ScalarError("empty polynomial")
    cs: dict = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        c, d = parse_monomial(body)
        cs[d] = cs.get(d, Fraction(0)) + (-c if sign == "-" else c)
    size = max(cs) + 1
    return EpsPoly([cs.get(d, 0) for d in range(size)], trunc)
