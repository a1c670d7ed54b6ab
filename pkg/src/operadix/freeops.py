"""Free nonsymmetric operad on a single graded n-ary generator.

Monomials are planar trees.  Inside a monomial the generators are ordered by
the preorder of the internal nodes, and grafting ``b`` into ``a`` moves the
graded block of ``b`` past every generator of ``a`` that comes later in
preorder, which fixes the Koszul sign of a partial composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .fields import QQ, Field, field_from_tag
from .trees import PlanarTree, corolla, from_sexpr, graft, identity, two_node


@dataclass(frozen=True)
class GeneratorSpec:
    symbol: str
    arity: int
    degree: int = 0

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"generator arity must be >= 2, got {self.arity}")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1

    def to_json(self) -> dict:
        return {"symbol": self.symbol, "arity": self.arity, "degree": self.degree}

    @classmethod
    def from_json(cls, data: Mapping) -> "GeneratorSpec":
        return cls(str(data["symbol"]), int(data["arity"]), int(data["degree"]))


@dataclass(frozen=True)
class Monomial:
    gen: GeneratorSpec
    tree: PlanarTree

    def __post_init__(self):
        if self.tree.arity != self.gen.arity:
            raise ValueError("tree arity does not match generator arity")

    @property
    def weight(self) -> int:
        return self.tree.weight

    @property
    def degree(self) -> int:
        return self.tree.weight * self.gen.degree

    def element(self, field: Field = QQ) -> "Element":
        return Element(self.gen, {self.tree: field.one}, field)


class Element:
    """A linear combination of tree monomials of one arity."""

    __slots__ = ("gen", "terms", "field")

    def __init__(self, gen: GeneratorSpec, terms: Mapping[PlanarTree, object] | None = None,
                 field: Field = QQ):
        self.gen = gen
        self.field = field
        clean = {}
        leaves = None
        for tree, c in (terms or {}).items():
            if tree.arity != gen.arity:
                raise ValueError("term arity does not match generator arity")
            if leaves is None:
                leaves = tree.leaves
            elif tree.leaves != leaves:
                raise ValueError("element must be homogeneous in arity")
            c = field(c)
            if c:
                clean[tree] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, gen: GeneratorSpec, tree: PlanarTree, coeff=1, field: Field = QQ):
        return cls(gen, {tree: coeff}, field)

    @classmethod
    def generator(cls, gen: GeneratorSpec, field: Field = QQ) -> "Element":
        return cls(gen, {corolla(gen.arity): 1}, field)

    @classmethod
    def unit(cls, gen: GeneratorSpec, field: Field = QQ) -> "Element":
        return cls(gen, {identity(gen.arity): 1}, field)

    @classmethod
    def from_weight2(cls, gen: GeneratorSpec, row: Iterable, field: Field = QQ) -> "Element":
        """Combination of ``mu o_i mu`` with the coefficients in ``row``."""
        return cls(gen, {two_node(gen.arity, i): c for i, c in enumerate(row, 1)}, field)

    @property
    def arity(self) -> int | None:
        for tree in self.terms:
            return tree.leaves
        return None

    @property
    def weight(self) -> int | None:
        for tree in self.terms:
            return tree.weight
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, tree: PlanarTree):
        return self.terms.get(tree, self.field.zero)

    def leading(self) -> PlanarTree:
        if not self.terms:
            raise ValueError("zero element has no leading term")
        return max(self.terms)

    def _check(self, other: "Element"):
        if other.gen != self.gen:
            raise ValueError(f"generator mismatch: {self.gen} vs {other.gen}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return Element(self.gen, out, self.field)

    def __neg__(self) -> "Element":
        return Element(self.gen, {t: -c for t, c in self.terms.items()}, self.field)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, scalar) -> "Element":
        s = self.field(scalar)
        return Element(self.gen, {t: s * c for t, c in self.terms.items()}, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.gen == other.gen and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.gen, tuple(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.field.fmt(c)}*{t}" for t, c in self.terms.items())

    def to_json(self) -> dict:
        return {
            "gen": self.gen.to_json(),
            "field": self.field.tag,
            "terms": [{"coeff": self.field.fmt(c), "tree": t.sexpr()}
                      for t, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Element":
        gen = GeneratorSpec.from_json(data["gen"])
        field = field_from_tag(data.get("field", "q"))
        terms = {}
        for term in data["terms"]:
            tree = from_sexpr(term["tree"], gen.arity)
            terms[tree] = terms.get(tree, 0) + field.parse(term["coeff"])
        return cls(gen, terms, field)


def koszul_sign(gen: GeneratorSpec, outer: PlanarTree, i: int, inner: PlanarTree) -> int:
    if not gen.odd:
        return 1
    return -1 if (outer.nodes_after_leaf(i) * inner.weight) % 2 else 1


def compose(a: Element, i: int, b: Element) -> Element:
    """Partial composition ``a o_i b``, extended bilinearly with Koszul signs."""
    a._check(b)
    p = a.arity
    if p is not None and not 1 <= i <= p:
        raise IndexError(f"slot {i} out of range 1..{p}")
    out: dict = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            t = graft(ta, i, tb)
            c = ca * cb
            if koszul_sign(a.gen, ta, i, tb) < 0:
                c = -c
            out[t] = out.get(t, 0) + c
    return Element(a.gen, out, a.field)


def pairing_sign(n: int, i: int) -> int:
    return -1 if ((i + 1) * (n + 1)) % 2 else 1


def weight2_row(e: Element) -> list:
    """Coordinates of an arity 2n-1 element over ``mu o_1 mu .. mu o_n mu``."""
    n = e.gen.arity
    if e.terms and e.arity != 2 * n - 1:
        raise ValueError(f"expected arity {2 * n - 1}, got {e.arity}")
    return [e.coeff(two_node(n, i)) for i in range(1, n + 1)]


def pair(dual: Element, primal: Element):
    """Signed pairing <mu* o_i mu*, mu o_j mu> = (-1)^((i+1)(n+1)) delta_ij."""
    n = primal.gen.arity
    if dual.gen.arity != n:
        raise ValueError(f"arity mismatch: {dual.gen.arity} vs {n}")
    if dual.field != primal.field:
        raise ValueError("field mismatch")
    x, y = weight2_row(dual), weight2_row(primal)
    total = primal.field.zero
    for i in range(1, n + 1):
        total = total + pairing_sign(n, i) * x[i - 1] * y[i - 1]
    return total
