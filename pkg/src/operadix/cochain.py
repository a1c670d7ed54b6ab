"""Decomposable cochains, n-ary cup products and partial-associativity checks.

A degree-k cochain of an n-ary totally associative algebra A is given by
1 + k(n-1) endomorphisms of A.  On a tree monomial gamma of the dual operad
it evaluates gamma in A with the i-th endomorphism applied to the i-th
argument (homological signs are dropped, A sits in degree 0).

The cup product concatenates component tuples and raises the degree by
n - 2.  For n = 3 the concatenation has exactly the right length.  For
n >= 4 it falls short by n - 1 components per cup; the missing ones come
from writing gamma = alpha o_s mu* and feeding the s-th component to every
input of the last grafted generator.  Those "deferred replications" are
applied along the last steps of gamma's composition word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import NAryAlgebra, Vector, evaluate_tree
from .components import component_basis, reduce
from .fields import QQ, Field
from .freeops import Element, GeneratorSpec, Monomial, compose
from .quadratic import koszul_dual, pa_sign, ta_presentation
from .trees import PlanarTree, composition_word, from_composition_word

Matrix = tuple  # rows of field scalars


def identity_map(A: NAryAlgebra) -> Matrix:
    return tuple(A.basis(i) for i in range(A.dim))


def scaled_map(A: NAryAlgebra, s) -> Matrix:
    return tuple(tuple(A.field(s) * x for x in row) for row in identity_map(A))


def random_map(A: NAryAlgebra, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    return tuple(tuple(A.field(rng.randint(lo, hi)) for _ in range(A.dim)) for _ in range(A.dim))


def random_vector(A: NAryAlgebra, rng: random.Random, lo: int = -3, hi: int = 3) -> Vector:
    return tuple(A.field(rng.randint(lo, hi)) for _ in range(A.dim))


def apply_map(M: Matrix, v: Vector) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v)), 0 * v[0]) for row in M)


@dataclass(frozen=True)
class DecomposableCochain:
    algebra: NAryAlgebra
    degree: int
    components: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        m = self.algebra.dim
        for M in self.components:
            if len(M) != m or any(len(row) != m for row in M):
                raise ValueError(f"components must be {m}x{m} matrices")
        self.deferred  # validates the length

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def arity(self) -> int:
        return 1 + self.degree * (self.n - 1)

    @property
    def deferred(self) -> int:
        """Replications still owed by cup products (always 0 for n = 3)."""
        gap = self.arity - len(self.components)
        if gap < 0 or gap % (self.n - 1):
            raise ValueError(f"{len(self.components)} components do not fit degree "
                             f"{self.degree} at arity {self.n}")
        return gap // (self.n - 1)

    @classmethod
    def of(cls, A: NAryAlgebra, maps: Sequence[Matrix], degree: int | None = None):
        """A plain cochain: one endomorphism per argument."""
        if degree is None:
            degree, r = divmod(len(maps) - 1, A.n - 1)
            if r:
                raise ValueError(f"{len(maps)} components is not 1 + k({A.n}-1)")
        maps = tuple(tuple(tuple(A.field(x) for x in row) for row in M) for M in maps)
        c = cls(A, degree, maps)
        if c.deferred:
            raise ValueError("plain cochains take exactly 1 + k(n-1) components")
        return c


@dataclass(frozen=True)
class Placeholder:
    """A named cochain of known degree, for symbolic bookkeeping only."""

    name: str
    degree: int


class Cup:
    """An n-ary cup product expression; children are cochains or cups."""

    def __init__(self, *children):
        if len(children) < 2:
            raise ValueError("a cup needs at least two factors")
        self.children = tuple(children)

    @property
    def n(self) -> int:
        return len(self.children)

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self.children) + self.n - 2

    def inner_slot(self) -> int:
        """Slot of the single nested cup in a two-level expression."""
        slots = [i for i, c in enumerate(self.children, 1) if isinstance(c, Cup)]
        if len(slots) != 1:
            raise ValueError(f"expected exactly one nested cup, found {len(slots)}")
        if any(isinstance(g, Cup) for g in self.children[slots[0] - 1].children):
            raise ValueError("nesting deeper than two levels")
        return slots[0]

    def flatten(self) -> DecomposableCochain:
        return cup([c.flatten() if isinstance(c, Cup) else c for c in self.children])

    def __repr__(self):
        return "<" + ", ".join(getattr(c, "name", None) or repr(c) for c in self.children) + ">"


CupExpression = Cup


def cup(factors: Sequence[DecomposableCochain]) -> DecomposableCochain:
    """Cup product of n cochains: components concatenate, degree adds n - 2."""
    if not factors:
        raise ValueError("no factors")
    A = factors[0].algebra
    n = A.n
    if len(factors) != n:
        raise ValueError(f"the cup product on an arity-{n} algebra takes {n} factors")
    if any(f.algebra != A for f in factors):
        raise ValueError("factors live on different algebras")
    comps = tuple(M for f in factors for M in f.components)
    return DecomposableCochain(A, sum(f.degree for f in factors) + n - 2, comps)


@dataclass(frozen=True)
class ContextMonomial:
    """seed m_q = mu* o_q mu*, then x -> x o_s mu* for each s in ``extension``."""

    n: int
    seed: int
    extension: tuple = ()

    def __post_init__(self):
        if not 1 <= self.seed <= self.n:
            raise ValueError(f"seed {self.seed} out of range 1..{self.n}")
        self.tree  # validates the slots

    @classmethod
    def from_tree(cls, t: PlanarTree) -> "ContextMonomial":
        if t.weight < 2:
            raise ValueError("context monomials have weight >= 2")
        word = composition_word(t)
        return cls(t.arity, word[0], tuple(word[1:]))

    @property
    def word(self) -> tuple:
        return (self.seed,) + tuple(self.extension)

    @property
    def weight(self) -> int:
        return 1 + len(self.word)

    @property
    def tree(self) -> PlanarTree:
        return from_composition_word(self.n, self.word)

    def with_seed(self, q: int) -> "ContextMonomial":
        return ContextMonomial(self.n, q, self.extension)

    def expand(self, gen: GeneratorSpec, field: Field = QQ) -> Element:
        """The signed element of the free operad this word builds."""
        g = Element.generator(gen, field)
        x = g
        for s in self.word:
            x = compose(x, s, g)
        return x

    def __str__(self):
        out = f"m{self.seed}"
        for s in self.extension:
            out = f"({out} o{s} mu*)"
        return out


Gamma = Union[ContextMonomial, PlanarTree, Monomial]


def _as_word(gamma: Gamma) -> tuple[PlanarTree, tuple]:
    if isinstance(gamma, ContextMonomial):
        return gamma.tree, gamma.word
    t = gamma.tree if isinstance(gamma, Monomial) else gamma
    return t, (composition_word(t) if t.weight >= 1 else ())


def effective_components(c: DecomposableCochain, gamma: Gamma) -> tuple:
    """Component per leaf of gamma, after the deferred replications."""
    t, word = _as_word(gamma)
    if t.weight != c.degree:
        raise ValueError(f"cochain of degree {c.degree} evaluated on weight {t.weight}")
    r = c.deferred
    comps = list(c.components)
    if r:
        for s in word[len(word) - r:]:
            comps[s - 1:s] = [comps[s - 1]] * c.n
    assert len(comps) == t.leaves
    return tuple(comps)


def evaluate_cochain(c: DecomposableCochain, gamma: Gamma, args: Sequence[Vector]) -> Vector:
    """c(gamma)(a_1, ..., a_N): apply the i-th component to a_i, then gamma in A."""
    t, _ = _as_word(gamma)
    if t.arity != c.n:
        raise ValueError(f"monomial arity {t.arity} does not match algebra arity {c.n}")
    if len(args) != t.leaves:
        raise ValueError(f"expected {t.leaves} arguments, got {len(args)}")
    comps = effective_components(c, gamma)
    return evaluate_tree(c.algebra, t, [apply_map(M, a) for M, a in zip(comps, args)])


def nested_symbolic_eval(e: Cup, beta: ContextMonomial) -> ContextMonomial:
    """Re-index beta for a two-level nesting whose inner cup sits at slot p:
    the seed becomes m_p, the extension word is kept."""
    p = e.inner_slot()
    if p > beta.n:
        raise ValueError(f"slot {p} out of range for arity {beta.n}")
    return beta.with_seed(p)


def nested(factors: Sequence, p: int) -> Cup:
    """The expression with the inner cup on factors p..p+n-1 of 2n-1."""
    n = (len(factors) + 1) // 2
    if len(factors) != 2 * n - 1:
        raise ValueError("need 2n - 1 factors")
    inner = Cup(*factors[p - 1:p - 1 + n])
    return Cup(*factors[:p - 1], inner, *factors[p - 1 + n:])


def dual_ta(n: int, field: Field = QQ):
    """The Koszul dual of the degree-0 totally associative operad."""
    return koszul_dual(ta_presentation(n, 0, field))


@dataclass
class TheoremCertificate:
    n: int
    degrees: tuple
    weight: int
    entries: list

    @property
    def ok(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "degrees": list(self.degrees), "weight": self.weight,
                "ok": self.ok, "certificates": self.entries}


def theorem_check_symbolic(n: int, degrees: Sequence[int], w_cap: int,
                           field: Field = QQ) -> TheoremCertificate:
    """Partial associativity of the cup product, checked in the dual operad.

    For every standard monomial beta of the result weight, sum the
    seed-substituted expansions with signs (-1)^((p+1)(n-1)) and reduce
    modulo the relations; every reduction must be the zero row.
    """
    if n not in (3, 4):
        raise ValueError(f"the cup product is defined here for n = 3, 4; got {n}")
    degrees = tuple(degrees)
    if len(degrees) != 2 * n - 1 or any(d < 0 for d in degrees):
        raise ValueError(f"need {2 * n - 1} nonnegative degrees")
    weight = sum(degrees) + 2 * (n - 2)
    if weight > w_cap:
        raise ValueError(f"result weight {weight} exceeds the cap {w_cap}")
    dual = dual_ta(n, field)
    cb = component_basis(dual, weight)
    factors = [Placeholder(f"c{i}", d) for i, d in enumerate(degrees, 1)]
    entries = []
    for t in cb.standard:
        beta = ContextMonomial.from_tree(t)
        total = Element(dual.gen, {}, field)
        for p in range(1, n + 1):
            term = nested_symbolic_eval(nested(factors, p), beta).expand(dual.gen, field)
            total = total + term * pa_sign(n, p)
        row = reduce(cb, total)
        entries.append({"beta": str(beta), "tree": t.sexpr(),
                        "reduced_row": [field.fmt(x) for x in row],
                        "ok": not any(row)})
    return TheoremCertificate(n, degrees, weight, entries)


def pa_defect_numeric(n: int, cochains: Sequence[DecomposableCochain], beta: ContextMonomial,
                      args: Sequence[Vector]) -> Vector:
    """A-valued residual sum_p (-1)^((p+1)(n-1)) <... nested at slot p ...>(beta)."""
    if len(cochains) != 2 * n - 1:
        raise ValueError(f"need {2 * n - 1} cochains")
    if beta.n != n:
        raise ValueError("monomial arity mismatch")
    A = cochains[0].algebra
    total = A.zero()
    for p in range(1, n + 1):
        expr = nested(cochains, p)
        value = evaluate_cochain(expr.flatten(), nested_symbolic_eval(expr, beta), args)
        total = tuple(a + pa_sign(n, p) * b for a, b in zip(total, value))
    return total


def common_value(cochains: Sequence[DecomposableCochain], beta: ContextMonomial,
                 args: Sequence[Vector]) -> Vector:
    """The value every nesting takes in a totally associative algebra."""
    return evaluate_cochain(nested(cochains, 1).flatten(), beta, args)


def defect_multiplier(n: int) -> int:
    """sum_p (-1)^((p+1)(n-1)): the residual is this multiple of the common value."""
    return sum(pa_sign(n, p) for p in range(1, n + 1))
