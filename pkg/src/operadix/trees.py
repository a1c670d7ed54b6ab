"""Complete planar rooted n-ary trees.

A tree is stored as its preorder word over ``m`` (internal node) and ``_``
(leaf), so ``m___`` is the ternary corolla and ``_`` is the identity.  Word
equality is tree equality, which makes trees cheap to hash and compare.
Leaves and grafting slots are numbered from 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

NODE = "m"
LEAF = "_"


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class PlanarTree:
    arity: int
    word: str
    _key: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        need = 1
        for pos, ch in enumerate(self.word):
            if need == 0:
                raise ValueError(f"trailing symbols in tree word {self.word!r}")
            if ch == NODE:
                need += self.arity - 1
            elif ch == LEAF:
                need -= 1
            else:
                raise ValueError(f"bad symbol {ch!r} in tree word")
        if need != 0:
            raise ValueError(f"incomplete tree word {self.word!r}")

    @property
    def weight(self) -> int:
        return self.word.count(NODE)

    @property
    def leaves(self) -> int:
        return len(self.word) - self.weight

    def depths(self) -> tuple[int, ...]:
        """Depth of every leaf, left to right (the root's children sit at depth 1)."""
        out = []
        stack = []  # remaining children per open node
        for ch in self.word:
            depth = len(stack)
            if ch == NODE:
                stack.append(self.arity)
                continue
            out.append(depth)
            while stack:
                stack[-1] -= 1
                if stack[-1]:
                    break
                stack.pop()
        return tuple(out)

    @property
    def glex_key(self) -> tuple:
        # depth word read from the last leaf, so the right comb leads
        if self._key is None:
            object.__setattr__(self, "_key", (self.weight, self.depths()[::-1]))
        return self._key

    def __lt__(self, other: "PlanarTree") -> bool:
        return self.glex_key < other.glex_key

    def __le__(self, other: "PlanarTree") -> bool:
        return self.glex_key <= other.glex_key

    def __gt__(self, other: "PlanarTree") -> bool:
        return self.glex_key > other.glex_key

    def __ge__(self, other: "PlanarTree") -> bool:
        return self.glex_key >= other.glex_key

    def sexpr(self) -> str:
        return to_sexpr(self)

    def __str__(self) -> str:
        return self.sexpr()

    def leaf_position(self, i: int) -> int:
        """Index in ``word`` of leaf ``i`` (1-based)."""
        if not 1 <= i <= self.leaves:
            raise IndexError(f"leaf {i} out of range 1..{self.leaves}")
        seen = 0
        for pos, ch in enumerate(self.word):
            if ch == LEAF:
                seen += 1
                if seen == i:
                    return pos
        raise AssertionError("unreachable")

    def nodes_after_leaf(self, i: int) -> int:
        """Internal nodes that follow leaf ``i`` in preorder."""
        return self.word.count(NODE, self.leaf_position(i) + 1)

    def children(self) -> list["PlanarTree"]:
        """Immediate subtrees of the root (empty for the identity)."""
        if self.word == LEAF:
            return []
        out, pos = [], 1
        for _ in range(self.arity):
            end = _subtree_end(self.word, pos, self.arity)
            out.append(PlanarTree(self.arity, self.word[pos:end]))
            pos = end
        return out

    def node_slots(self) -> Iterator[tuple[int, int]]:
        """Yield ``(parent_position, slot)`` for every non-root internal node."""
        stack = []  # [position, next slot]
        for pos, ch in enumerate(self.word):
            if stack:
                parent = stack[-1]
                slot = parent[1]
                if ch == NODE:
                    yield parent[0], slot
                parent[1] += 1
            if ch == NODE:
                stack.append([pos, 1])
            while stack and stack[-1][1] > self.arity:
                stack.pop()


def _subtree_end(word: str, start: int, n: int) -> int:
    need = 1
    pos = start
    while need:
        need += n - 1 if word[pos] == NODE else -1
        pos += 1
    return pos


def identity(n: int) -> PlanarTree:
    return PlanarTree(n, LEAF)


def corolla(n: int) -> PlanarTree:
    return PlanarTree(n, NODE + LEAF * n)


def two_node(n: int, i: int) -> PlanarTree:
    """The weight-2 tree of mu o_i mu."""
    return graft(corolla(n), i, corolla(n))


def catalan(n: int, w: int) -> int:
    """Number of complete planar n-ary trees with ``w`` internal nodes."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    q, r = divmod(comb(n * w, w), 1 + (n - 1) * w)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _words(n: int, w: int) -> tuple[str, ...]:
    if w == 0:
        return (LEAF,)
    out = []
    for split in _compositions(w - 1, n):
        parts = [_words(n, k) for k in split]
        out.extend(NODE + "".join(combo) for combo in _product(parts))
    return tuple(out)


def _compositions(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _product(parts):
    if not parts:
        yield ()
        return
    for head in parts[0]:
        for tail in _product(parts[1:]):
            yield (head,) + tail


@lru_cache(maxsize=None)
def enumerate_trees(n: int, w: int) -> tuple[PlanarTree, ...]:
    """All trees of weight ``w`` in ascending path-glex order."""
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    return tuple(sorted(PlanarTree(n, word) for word in _words(n, w)))


def graft(outer: PlanarTree, i: int, inner: PlanarTree) -> PlanarTree:
    """Replace leaf ``i`` of ``outer`` by ``inner``."""
    if outer.arity != inner.arity:
        raise ValueError(f"arity mismatch: {outer.arity} vs {inner.arity}")
    pos = outer.leaf_position(i)
    return PlanarTree(outer.arity, outer.word[:pos] + inner.word + outer.word[pos + 1:])


def path_glex_compare(a: PlanarTree, b: PlanarTree) -> Ordering:
    """Weight first, then the leaf-depth word read from the right, larger wins."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    ka, kb = a.glex_key, b.glex_key
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def peel(t: PlanarTree) -> tuple[PlanarTree, int]:
    """Undo the last grafting of a corolla.

    Removes the rightmost non-root node whose children are all leaves and
    returns ``(rest, i)`` with ``graft(rest, i, corolla) == t``.
    """
    if t.weight < 2:
        raise ValueError("need weight >= 2 to peel")
    pattern = NODE + LEAF * t.arity
    pos = t.word.rfind(pattern)
    assert pos > 0  # the root is never a leaf-parent once weight >= 2
    i = t.word.count(LEAF, 0, pos) + 1
    return PlanarTree(t.arity, t.word[:pos] + LEAF + t.word[pos + len(pattern):]), i


def composition_word(t: PlanarTree) -> tuple[int, ...]:
    """Slots ``(s1, s2, ...)`` with t = (((corolla o_s1 corolla) o_s2 corolla) ...).

    Canonical: obtained by repeatedly peeling the rightmost removable node.
    """
    if t.weight == 0:
        raise ValueError("the identity is not built from the generator")
    steps = []
    while t.weight > 1:
        t, i = peel(t)
        steps.append(i)
    return tuple(reversed(steps))


def from_composition_word(n: int, steps) -> PlanarTree:
    t = corolla(n)
    for s in steps:
        t = graft(t, s, corolla(n))
    return t


def to_sexpr(t: PlanarTree) -> str:
    out = []
    stack = []
    for ch in t.word:
        if out and out[-1] != "(":
            out.append(" ")
        if ch == NODE:
            out.append("(")
            out.append("m")
            stack.append(t.arity)
            continue
        out.append("_")
        while stack:
            stack[-1] -= 1
            if stack[-1]:
                break
            stack.pop()
            out.append(")")
    return "".join(out)


def from_sexpr(text: str, n: int | None = None) -> PlanarTree:
    """Parse ``(m (m _ _ _) _ _)``; the arity is inferred unless given."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    word = []
    arities = []
    stack = []
    for i, tok in enumerate(tokens):
        if tok == "(":
            if i + 1 >= len(tokens) or tokens[i + 1] != "m":
                raise ValueError(f"expected 'm' after '(' in {text!r}")
            stack.append(0)
        elif tok == "m":
            if i == 0 or tokens[i - 1] != "(":
                raise ValueError(f"stray 'm' in {text!r}")
            word.append(NODE)
        elif tok == "_":
            if stack:
                stack[-1] += 1
            word.append(LEAF)
        elif tok == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' in {text!r}")
            arities.append(stack.pop())
            if stack:
                stack[-1] += 1
        else:
            raise ValueError(f"bad token {tok!r} in {text!r}")
    if stack:
        raise ValueError(f"unbalanced '(' in {text!r}")
    if len(set(arities)) > 1:
        raise ValueError(f"mixed arities {sorted(set(arities))} in {text!r}")
    if arities:
        if n is not None and arities[0] != n:
            raise ValueError(f"tree has arity {arities[0]}, expected {n}")
        n = arities[0]
    if n is None:
        raise ValueError("arity of the identity tree must be given")
    return PlanarTree(n, "".join(word))
