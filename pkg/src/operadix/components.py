"""Homogeneous components of quadratic quotient operads.

The weight-w layer of the ideal generated by the relations is built from the
weight-(w-1) layer by composing with the generator on either side, then row
reduced with trees as columns in path-glex order.  Monomials that never lead
a row are the standard monomials and form a basis of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .freeops import Element, Monomial, compose
from .linalg import SparseEchelon
from .quadratic import QuadraticPresentation
from .trees import LEAF, NODE, PlanarTree, catalan, enumerate_trees


@lru_cache(maxsize=None)
def _column_index(n: int, w: int) -> dict[PlanarTree, int]:
    return {t: k for k, t in enumerate(enumerate_trees(n, w))}


def _to_row(e: Element, index: dict) -> dict:
    return {index[t]: c for t, c in e.terms.items()}


def ideal_span(p: QuadraticPresentation, w: int) -> list[Element]:
    """Spanning set of the weight-``w`` layer of the ideal (R)."""
    if w < 2:
        raise ValueError(f"ideal layers start at weight 2, got {w}")
    if w == 2:
        return p.relation_elements()
    g = Element.generator(p.gen, p.field)
    prev = _ideal_layer(p, w - 1)
    out = []
    for x in prev:
        for i in range(1, p.n + 1):
            out.append(compose(g, i, x))
        for i in range(1, x.arity + 1):
            out.append(compose(x, i, g))
    return out


@lru_cache(maxsize=None)
def _ideal_echelon(p: QuadraticPresentation, w: int) -> SparseEchelon:
    index = _column_index(p.n, w)
    ech = SparseEchelon(p.field)
    for e in ideal_span(p, w):
        if not e.is_zero():
            ech.add(_to_row(e, index))
    ech.reduce_fully()
    return ech


@lru_cache(maxsize=None)
def _ideal_layer(p: QuadraticPresentation, w: int) -> tuple[Element, ...]:
    """An echelon basis of the weight-``w`` ideal layer, as elements."""
    if w == 2:
        return tuple(e for e in p.relation_elements() if not e.is_zero())
    trees = enumerate_trees(p.n, w)
    ech = _ideal_echelon(p, w)
    return tuple(Element(p.gen, {trees[c]: v for c, v in row.items()}, p.field)
                 for _, row in sorted(ech.rows.items()))


@dataclass
class ComponentBasis:
    presentation: QuadraticPresentation
    weight: int
    standard: tuple[PlanarTree, ...]
    rank: int
    _echelon: SparseEchelon = field(repr=False)
    _std_pos: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self._std_pos = {t: k for k, t in enumerate(self.standard)}

    @property
    def dim(self) -> int:
        return len(self.standard)

    def standard_monomials(self) -> list[Monomial]:
        return [Monomial(self.presentation.gen, t) for t in self.standard]

    def reduction(self, tree: PlanarTree) -> list:
        """Coordinates of a single tree monomial over the standard basis."""
        e = Element.monomial(self.presentation.gen, tree, 1, self.presentation.field)
        return reduce(self, e)


@lru_cache(maxsize=None)
def component_basis(p: QuadraticPresentation, w: int) -> ComponentBasis:
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    trees = enumerate_trees(p.n, w)
    if w < 2:
        return ComponentBasis(p, w, trees, 0, SparseEchelon(p.field))
    ech = _ideal_echelon(p, w)
    standard = tuple(t for k, t in enumerate(trees) if k not in ech.rows)
    return ComponentBasis(p, w, standard, len(ech), ech)


def reduce(cb: ComponentBasis, e: Element) -> list:
    """Coordinate row of ``e`` modulo the ideal, over ``cb.standard``."""
    p = cb.presentation
    if e.gen != p.gen:
        raise ValueError(f"generator mismatch: {e.gen} vs {p.gen}")
    if e.field != p.field:
        raise ValueError(f"field mismatch: {e.field} vs {p.field}")
    row = [p.field.zero] * cb.dim
    if e.is_zero():
        return row
    if e.weight != cb.weight:
        raise ValueError(f"weight mismatch: element has weight {e.weight}, basis {cb.weight}")
    trees = enumerate_trees(p.n, cb.weight)
    index = _column_index(p.n, cb.weight)
    rem = cb._echelon.remainder(_to_row(e, index))
    for c, v in rem.items():
        row[cb._std_pos[trees[c]]] = v
    return row


def dims(p: QuadraticPresentation, w_max: int) -> list[int]:
    if w_max < 0:
        raise ValueError(f"w_max must be >= 0, got {w_max}")
    return [component_basis(p, w).dim for w in range(w_max + 1)]


def has_node_in_slot(t: PlanarTree, slot: int) -> bool:
    return any(s == slot for _, s in t.node_slots())


@dataclass
class WeightVerdict:
    weight: int
    standard: int
    first_slot_free: int
    catalan: int
    normal_forms_match: bool

    @property
    def ok(self) -> bool:
        return self.standard == self.first_slot_free == self.catalan


@dataclass
class GroebnerReport:
    verdicts: list[WeightVerdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    @property
    def counts(self) -> list[int]:
        return [v.standard for v in self.verdicts]


def groebner_check_even(p: QuadraticPresentation, w_max: int) -> GroebnerReport:
    """Dimension test for the even-arity normal forms.

    Per weight, the number of standard monomials must equal the number of
    trees with no internal node in the first slot of its parent, and both
    must equal the (n-1)-ary Catalan number.  ``normal_forms_match`` records
    whether, under our order, the standard monomials are exactly the trees
    with no internal node in the last slot (the mirror image).
    """
    n = p.n
    if n % 2:
        raise ValueError(f"odd arity {n}: the single relation is not a Groebner basis "
                         "for odd n, so the even-arity check does not apply")
    out = []
    for w in range(w_max + 1):
        cb = component_basis(p, w)
        trees = enumerate_trees(n, w)
        first_free = sum(1 for t in trees if not has_node_in_slot(t, 1))
        last_free = {t for t in trees if not has_node_in_slot(t, n)}
        out.append(WeightVerdict(w, cb.dim, first_free, catalan(n - 1, w),
                                 set(cb.standard) == last_free))
    return GroebnerReport(out)


def removable_nodes(t: PlanarTree):
    """Yield ``(rest, i)`` for every non-root node whose children are all leaves."""
    pattern = NODE + LEAF * t.arity
    pos = t.word.find(pattern, 1)
    while pos > 0:
        i = t.word.count(LEAF, 0, pos) + 1
        yield PlanarTree(t.arity, t.word[:pos] + LEAF + t.word[pos + len(pattern):]), i
        pos = t.word.find(pattern, pos + 1)


def basis_stability(p: QuadraticPresentation, w_max: int) -> dict[int, list[PlanarTree]]:
    """Standard monomials at each weight 3..w_max that are *not* of the form
    ``s o_i generator`` with ``s`` standard one weight lower.  Empty lists
    mean the right-extension decomposition works at that weight."""
    failures = {}
    for w in range(3, w_max + 1):
        lower = set(component_basis(p, w - 1).standard)
        failures[w] = [t for t in component_basis(p, w).standard
                       if not any(s in lower for s, _ in removable_nodes(t))]
    return failures

