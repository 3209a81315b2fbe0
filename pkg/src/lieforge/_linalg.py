# Sparse exact linear algebra over Q.  Vectors are dicts key -> Fraction with
# no zero values; keys must be mutually comparable (column order).

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional

Vec = Dict[Hashable, Fraction]


def axpy(v: Vec, c: Fraction, w: Vec) -> None:
    """In place: v += c * w."""
    for k, x in w.items():
        nv = v.get(k, 0) + c * x
        if nv:
            v[k] = nv
        else:
            v.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has leading coefficient 1 at its pivot and a zero in
    every other row's pivot column.
    """

    def __init__(self, vectors: Iterable[Vec] = ()):
        self.rows: Dict[Hashable, Vec] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        v = dict(v)
        for key in [k for k in v if k in self.rows]:
            c = v.get(key)
            if c:
                axpy(v, -c, self.rows[key])
        return v

    def add(self, v: Vec) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r)
        lead = r[pivot]
        if lead != 1:
            r = {k: x / lead for k, x in r.items()}
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                axpy(row, -c, r)
        self.rows[pivot] = r
        return True

    def __contains__(self, v: Vec) -> bool:
        return not self.reduce(v)

    def sorted_rows(self) -> List[Vec]:
        return [self.rows[k] for k in sorted(self.rows)]


class SpanSolver:
    """Coordinates of vectors with respect to a fixed independent family."""

    def __init__(self, vectors: Iterable[Vec]):
        self._rows: list = []  # (pivot, vec, combo), insertion order
        self.size = 0
        for idx, v in enumerate(vectors):
            vec, combo = self._eliminate(dict(v), {idx: Fraction(1)})
            if not vec:
                raise ValueError("vectors are linearly dependent")
            pivot = min(vec)
            self._rows.append((pivot, vec, combo))
            self.size += 1

    def _eliminate(self, vec: Vec, combo: Vec):
        for pivot, rv, rc in self._rows:
            c = vec.get(pivot)
            if c:
                f = c / rv[pivot]
                axpy(vec, -f, rv)
                axpy(combo, -f, rc)
        return vec, combo

    def coordinates(self, w: Vec) -> Optional[Vec]:
        """Return c with sum c_i v_i == w, or None if w is outside the span."""
        vec, combo = self._eliminate(dict(w), {})
        if vec:
            return None
        return {k: -x for k, x in combo.items()}


def nullspace(vectors: List[Vec]) -> List[Vec]:
    """Basis of {c : sum_p c_p vectors[p] == 0}, as dicts index -> Fraction."""
    rows: list = []
    kernel: List[Vec] = []
    for idx, v in enumerate(vectors):
        vec, combo = dict(v), {idx: Fraction(1)}
        for pivot, rv, rc in rows:
            c = vec.get(pivot)
            if c:
                f = c / rv[pivot]
                axpy(vec, -f, rv)
                axpy(combo, -f, rc)
        if vec:
            rows.append((min(vec), vec, combo))
        else:
            kernel.append(combo)
    return kernel


def rank(vectors: Iterable[Vec]) -> int:
    return len(Echelon(vectors))


def determinant(matrix: List[List[Fraction]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        lead = m[col][col]
        det *= lead
        for r in range(col + 1, size):
            f = m[r][col]
            if f:
                f /= lead
                row, src = m[r], m[col]
                for c in range(col, size):
                    row[c] -= f * src[c]
    return det
