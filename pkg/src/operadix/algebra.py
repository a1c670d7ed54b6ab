"""Finite-dimensional n-ary algebras given by structure constants."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import lru_cache
from typing import Mapping, Sequence

from .fields import QQ, Field, field_from_tag
from .trees import LEAF, PlanarTree, two_node

Vector = tuple


@dataclass(frozen=True)
class NAryAlgebra:
    """``c[(i1, ..., in)]`` is the coordinate row of mu(b_i1, ..., b_in).

    Missing keys are zero products.  Basis indices are 0-based.
    """

    n: int
    dim: int
    c: Mapping[tuple, Vector]
    field: Field = QQ
    labels: tuple = dc_field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"arity must be >= 2, got {self.n}")
        clean = {}
        for idx, row in self.c.items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.n or not all(0 <= i < self.dim for i in idx):
                raise ValueError(f"bad structure-constant index {idx}")
            if len(row) != self.dim:
                raise ValueError(f"row for {idx} has length {len(row)}, expected {self.dim}")
            row = tuple(self.field(x) for x in row)
            if any(row):
                clean[idx] = row
        object.__setattr__(self, "c", clean)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"b{i}" for i in range(self.dim)))

    def vector(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field(x) for x in coords)

    def basis(self, i: int) -> Vector:
        return tuple(self.field.one if j == i else self.field.zero for j in range(self.dim))

    def zero(self) -> Vector:
        return (self.field.zero,) * self.dim

    def mult(self, args: Sequence[Vector]) -> Vector:
        if len(args) != self.n:
            raise ValueError(f"mu takes {self.n} arguments, got {len(args)}")
        out = [self.field.zero] * self.dim
        for idx, row in self.c.items():
            coef = self.field.one
            for a, i in zip(args, idx):
                coef = coef * a[i]
                if not coef:
                    break
            if coef:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] + coef * x
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "field": self.field.tag,
            "labels": list(self.labels),
            "c": {"(" + ",".join(map(str, idx)) + ")": [self.field.fmt(x) for x in row]
                  for idx, row in sorted(self.c.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NAryAlgebra":
        fld = field_from_tag(data.get("field", "q"))
        c = {}
        for key, row in data["c"].items():
            idx = tuple(int(s) for s in key.strip().strip("()").split(",") if s.strip())
            c[idx] = tuple(fld.parse(x) if isinstance(x, str) else fld(x) for x in row)
        return cls(int(data["n"]), int(data["dim"]), c, fld, tuple(data.get("labels", ())))

    @classmethod
    def load(cls, path) -> "NAryAlgebra":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def evaluate_tree(A: NAryAlgebra, t: PlanarTree, args: Sequence[Vector]) -> Vector:
    """Evaluate a tree monomial in ``A``, internal nodes acting as mu."""
    if t.arity != A.n:
        raise ValueError(f"tree arity {t.arity} does not match algebra arity {A.n}")
    if len(args) != t.leaves:
        raise ValueError(f"tree has {t.leaves} leaves, got {len(args)} arguments")
    feed = iter(args)
    word = iter(t.word)

    def walk():
        if next(word) == LEAF:
            return next(feed)
        return A.mult([walk() for _ in range(A.n)])

    return walk()


@dataclass
class AssociativityVerdict:
    ok: bool
    inputs: tuple | None = None
    types: tuple | None = None
    values: tuple | None = None

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "inputs": list(self.inputs), "types": list(self.types),
                "values": [[str(x) for x in v] for v in self.values]}


def check_total_associativity(A: NAryAlgebra) -> AssociativityVerdict:
    """Compare all n nestings of two products on every basis (2n-1)-tuple."""
    n = A.n
    shapes = [two_node(n, i) for i in range(1, n + 1)]
    basis = [A.basis(i) for i in range(A.dim)]
    for idx in itertools.product(range(A.dim), repeat=2 * n - 1):
        args = [basis[i] for i in idx]
        first = evaluate_tree(A, shapes[0], args)
        for i in range(1, n):
            other = evaluate_tree(A, shapes[i], args)
            if other != first:
                return AssociativityVerdict(False, idx, (1, i + 1), (first, other))
    return AssociativityVerdict(True)


def _validated(A: NAryAlgebra) -> NAryAlgebra:
    verdict = check_total_associativity(A)
    if not verdict.ok:
        raise ValueError(f"constructed algebra is not totally associative: {verdict}")
    return A


def scalar_algebra(n: int = 3, field: Field = QQ) -> NAryAlgebra:
    return _validated(NAryAlgebra(n, 1, {(0,) * n: (1,)}, field, ("1",)))


def poly_algebra(truncation: int, n: int = 3, field: Field = QQ) -> NAryAlgebra:
    """Span of x^e with e = 1 mod (n-1) inside F[x]/(x^T), mu = product.

    For n = 3 these are the odd powers.
    """
    exps = [e for e in range(1, truncation) if (e - 1) % (n - 1) == 0]
    if not exps:
        raise ValueError(f"truncation {truncation} leaves no basis monomials")
    pos = {e: k for k, e in enumerate(exps)}
    c = {}
    for idx in itertools.product(range(len(exps)), repeat=n):
        e = sum(exps[i] for i in idx)
        if e < truncation:
            row = [0] * len(exps)
            row[pos[e]] = 1
            c[idx] = row
    return _validated(NAryAlgebra(n, len(exps), c, field, tuple(f"x^{e}" for e in exps)))


def _matmul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))]
            for i in range(len(x))]


def rect_matrices(p: int, q: int, field: Field = QQ) -> NAryAlgebra:
    """p x q matrices with mu(a, b, c) = a K b K c.

    K is the q x p matrix with ones on its main diagonal, so for p = q this is
    the ordinary triple product abc.
    """
    if p < 1 or q < 1:
        raise ValueError("matrix sizes must be positive")
    units = [(r, s) for r in range(p) for s in range(q)]
    K = [[1 if i == j else 0 for j in range(p)] for i in range(q)]

    def unit(r, s):
        return [[1 if (i, j) == (r, s) else 0 for j in range(q)] for i in range(p)]

    c = {}
    for (x, y, z) in itertools.product(range(len(units)), repeat=3):
        prod = unit(*units[x])
        for u in (units[y], units[z]):
            prod = _matmul(_matmul(prod, K), unit(*u))
        row = [prod[r][s] for r, s in units]
        if any(row):
            c[(x, y, z)] = row
    labels = tuple(f"E{r}{s}" for r, s in units)
    return _validated(NAryAlgebra(3, len(units), c, field, labels))


def diagonal_algebra(n: int = 4, dim: int = 2, field: Field = QQ) -> NAryAlgebra:
    """F^dim with the componentwise n-fold product."""
    c = {(j,) * n: [1 if k == j else 0 for k in range(dim)] for j in range(dim)}
    return _validated(NAryAlgebra(n, dim, c, field))


@lru_cache(maxsize=None)
def sample_algebra(kind: str, field: Field = QQ, **params) -> NAryAlgebra:
    """``scalar``, ``odd_poly`` (truncation=T, n=3), ``rect_matrices`` (p, q)
    or ``diagonal`` (n=4, dim=2).  Every result is checked for total
    associativity before it is returned."""
    if kind == "scalar":
        return scalar_algebra(params.get("n", 3), field)
    if kind == "odd_poly":
        return poly_algebra(params.get("truncation", 5), params.get("n", 3), field)
    if kind == "rect_matrices":
        return rect_matrices(params.get("p", 2), params.get("q", 2), field)
    if kind == "diagonal":
        return diagonal_algebra(params.get("n", 4), params.get("dim", 2), field)
    raise ValueError(f"unknown algebra kind {kind!r}")
