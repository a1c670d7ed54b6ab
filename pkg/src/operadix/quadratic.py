"""Quadratic presentations and their Koszul duals.

A presentation is a generator plus a subspace of the weight-2 space spanned by
``mu o_1 mu, ..., mu o_n mu``.  The subspace is stored as reduced row echelon
rows, so two presentations are equal exactly when they present the same
operad.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .fields import QQ, Field, field_from_tag
from .freeops import Element, GeneratorSpec, pairing_sign
from .linalg import nullspace, rref


@dataclass(frozen=True)
class QuadraticPresentation:
    gen: GeneratorSpec
    relations: tuple[tuple, ...]
    field: Field = QQ

    @classmethod
    def make(cls, gen: GeneratorSpec, rows: Sequence[Sequence], field: Field = QQ):
        n = gen.arity
        for row in rows:
            if len(row) != n:
                raise ValueError(f"relation rows must have length {n}, got {len(row)}")
        return cls(gen, tuple(tuple(r) for r in rref(rows, field)), field)

    @property
    def n(self) -> int:
        return self.gen.arity

    @property
    def dim_relations(self) -> int:
        return len(self.relations)

    def relation_elements(self) -> list[Element]:
        return [Element.from_weight2(self.gen, row, self.field) for row in self.relations]

    def same_relations(self, other: "QuadraticPresentation") -> bool:
        return self.relations == other.relations

    def to_json(self) -> dict:
        return {
            "gen": self.gen.to_json(),
            "field": self.field.tag,
            "relations": [[self.field.fmt(x) for x in row] for row in self.relations],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QuadraticPresentation":
        gen = GeneratorSpec.from_json(data["gen"])
        field = field_from_tag(data.get("field", "q"))
        rows = [[field.parse(x) for x in row] for row in data["relations"]]
        return cls.make(gen, rows, field)


def ta_presentation(n: int, d: int = 0, field: Field = QQ, symbol: str = "mu"):
    """Total associativity: mu o_i mu - mu o_{i+1} mu for 1 <= i < n."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i], row[i + 1] = 1, -1
        rows.append(row)
    return QuadraticPresentation.make(GeneratorSpec(symbol, n, d), rows, field)


def pa_sign(n: int, i: int) -> int:
    return -1 if ((i + 1) * (n - 1)) % 2 else 1


def pa_presentation(n: int, d: int = 0, field: Field = QQ, symbol: str = "mu"):
    """Partial associativity: sum_i (-1)^((i+1)(n-1)) mu o_i mu."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    row = [pa_sign(n, i) for i in range(1, n + 1)]
    return QuadraticPresentation.make(GeneratorSpec(symbol, n, d), [row], field)


def presentation(family: str, n: int, d: int, field: Field = QQ) -> QuadraticPresentation:
    family = family.lower()
    if family == "ta":
        return ta_presentation(n, d, field)
    if family == "pa":
        return pa_presentation(n, d, field)
    raise ValueError(f"unknown family {family!r}; expected 'ta' or 'pa'")


def dual_symbol(symbol: str) -> str:
    return symbol[:-1] if symbol.endswith("*") else symbol + "*"


def koszul_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Orthogonal complement of the relations under the signed pairing."""
    n = p.n
    signed = [[pairing_sign(n, i) * x for i, x in enumerate(row, 1)] for row in p.relations]
    if signed:
        rows = nullspace(signed, n, p.field)
    else:
        rows = [[p.field.one if j == i else p.field.zero for j in range(n)] for i in range(n)]
    gen = GeneratorSpec(dual_symbol(p.gen.symbol), n, -p.gen.degree + n - 2)
    return QuadraticPresentation.make(gen, rows, p.field)
