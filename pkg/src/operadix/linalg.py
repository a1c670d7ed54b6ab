"""Exact row reduction over a :class:`~operadix.fields.Field`.

Two flavours: dense reduced row echelon form for the small weight-2 relation
matrices, and an incremental sparse echelon basis used for ideal layers,
where rows are dicts ``column -> scalar`` and the pivot of a row is its
largest column.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field


def rref(rows: Sequence[Sequence], field: Field) -> list[list]:
    """Reduced row echelon form with zero rows dropped; pivots scan left to right."""
    m = [[field(x) for x in row] for row in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        r += 1
        if r == len(m):
            break
    return m[:r]


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> list[list]:
    """Basis of ``{x : rows @ x = 0}``, itself in reduced row echelon form."""
    red = rref(rows, field)
    pivots = []
    for row in red:
        pivots.append(next(c for c, x in enumerate(row) if x))
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis, field)


def rank(rows: Sequence[Sequence], field: Field) -> int:
    return len(rref(rows, field))


class SparseEchelon:
    """Incrementally built echelon basis of a row space.

    Columns are integers; the pivot of a row is its largest column.  After
    :meth:`reduce_fully` every pivot column occurs in exactly one row.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict[int, dict[int, object]] = {}
        self._reduced = True

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)

    def _reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = max(row)
            prow = self.rows.get(lead)
            if prow is None:
                return row
            f = row[lead]
            for c, v in prow.items():
                x = row.get(c, 0) - f * v
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True if it enlarged the span."""
        row = self._reduce(row)
        if not row:
            return False
        lead = max(row)
        inv = self.field.one / row[lead]
        self.rows[lead] = {c: v * inv for c, v in row.items()}
        self._reduced = False
        return True

    def extend(self, rows: Iterable[dict]) -> None:
        for row in rows:
            self.add(row)

    def reduce_fully(self) -> None:
        if self._reduced:
            return
        for lead in sorted(self.rows):
            row = self.rows[lead]
            for c in [c for c in row if c != lead and c in self.rows]:
                f = row.get(c)
                if not f:
                    continue
                for cc, v in self.rows[c].items():
                    x = row.get(cc, 0) - f * v
                    if x:
                        row[cc] = x
                    else:
                        row.pop(cc, None)
        self._reduced = True

    def remainder(self, row: dict) -> dict:
        """Normal form of ``row`` modulo the span: only non-pivot columns survive."""
        self.reduce_fully()
        out = {}
        for c, v in row.items():
            if not v:
                continue
            prow = self.rows.get(c)
            if prow is None:
                out[c] = out.get(c, 0) + v
                continue
            for cc, w in prow.items():
                if cc != c:
                    out[cc] = out.get(cc, 0) - v * w
        return {c: v for c, v in out.items() if v}
