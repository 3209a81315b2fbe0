"""Reader and writer for the ``sc-v1`` structure-constant text format.

::

    lieforge-sc v1
    algebra=Iu n=2 ring=Q
    basis = a[1] a[2] x[1,2] b[1] b[2] x[2,1]
    [a[1],x[1,2]] = x[1,2]
    ...

One relation line per nonzero stored bracket ``[b_p, b_q]`` with ``p < q``,
in basis order.  Terms are expanded into eps-monomials and sorted by
eps-degree, then by basis position.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .core import Element, LieAlgebra, format_element, parse_label
from .scalars import EpsPoly, ScalarError, parse_monomial

MAGIC = "lieforge-sc v1"

__all__ = ["MAGIC", "emit", "parse", "SCFormatError"]


class SCFormatError(ValueError):
    pass


def emit(L: LieAlgebra) -> str:
    lines = [
        MAGIC,
        f"algebra={L.name} n={L.n} ring={L.ring}",
        "basis = " + " ".join(str(lab) for lab in L.basis),
    ]
    for (p, q) in sorted(L.table):
        rhs = format_element(L.table[(p, q)], order=L.index)
        lines.append(f"[{L.basis[p]},{L.basis[q]}] = {rhs}")
    return "\n".join(lines) + "\n"


def _parse_ring(text: str) -> Tuple[bool, Optional[int]]:
    if text == "Q":
        return False, None
    if text == "Q[eps]":
        return True, None
    m = re.fullmatch(r"Q\[eps\]/eps\^(\d+)", text)
    if m and int(m.group(1)) >= 1:
        return True, int(m.group(1)) - 1
    raise SCFormatError(f"unknown ring {text!r}")


def _split_pair(text: str) -> Tuple[str, str]:
    # "[lhs,rhs]" where labels may contain bracketed commas
    if not (text.startswith("[") and text.endswith("]")):
        raise SCFormatError(f"bad bracket {text!r}")
    inner = text[1:-1]
    depth = 0
    for k, ch in enumerate(inner):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            return inner[:k], inner[k + 1:]
    raise SCFormatError(f"bad bracket {text!r}")


def _parse_terms(text: str, L_index, trunc: Optional[int]) -> Element:
    text = text.strip()
    pieces: List[Tuple[int, str]] = []
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    for k, chunk in enumerate(re.split(r" ([+-]) ", text)):
        if k % 2:
            sign = -1 if chunk == "-" else 1
        else:
            pieces.append((sign, chunk))
    acc: dict = {}
    for sign, term in pieces:
        head, _, lab_text = term.rpartition("*") if "*" in term else ("", "", term)
        # labels never contain '*', so the label is the last factor
        lab = parse_label(lab_text)
        if lab not in L_index:
            raise SCFormatError(f"term uses label {lab} outside the basis")
        try:
            coef, d = parse_monomial(head) if head else (1, 0)
        except ScalarError as exc:
            raise SCFormatError(str(exc)) from None
        cs = acc.setdefault(lab, {})
        cs[d] = cs.get(d, 0) + sign * coef
    return Element({lab: EpsPoly([cs.get(d, 0) for d in range(max(cs) + 1)], trunc)
                    for lab, cs in acc.items()})


def parse(text: str) -> LieAlgebra:
    lines = text.splitlines()
    if len(lines) < 3 or lines[0] != MAGIC:
        raise SCFormatError("missing sc-v1 header")
    m = re.fullmatch(r"algebra=(\S+) n=(\d+) ring=(\S+)", lines[1])
    if not m:
        raise SCFormatError(f"bad header line {lines[1]!r}")
    name, n = m.group(1), int(m.group(2))
    over_eps, trunc = _parse_ring(m.group(3))
    if not lines[2].startswith("basis ="):
        raise SCFormatError("missing basis line")
    basis = [parse_label(tok) for tok in lines[2][len("basis ="):].split()]
    index = {lab: p for p, lab in enumerate(basis)}
    table = {}
    for line in lines[3:]:
        if not line.strip():
            continue
        lhs, sep, rhs = line.partition(" = ")
        if not sep:
            raise SCFormatError(f"bad relation line {line!r}")
        left, right = _split_pair(lhs)
        p, q = index.get(parse_label(left)), index.get(parse_label(right))
        if p is None or q is None or p >= q:
            raise SCFormatError(f"bad bracket pair in {line!r}")
        table[(p, q)] = _parse_terms(rhs, index, trunc)
    return LieAlgebra(name, n, basis, table, scalar_trunc=trunc, over_eps=over_eps)
