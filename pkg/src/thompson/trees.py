"""
Trees Module
============

Planar rooted trees and tree diagrams for the Thompson group F (binary trees)
and the Brown-Thompson group F3 (ternary trees).

A tree diagram is a pair (top, bottom) of trees with the same number of
leaves. Leaves are numbered 1..k from left to right; when the pair is closed
up into a link, leaf i of the top tree is glued to leaf i of the bottom tree
at axis point i.

This module covers:
1. Construction: leaves, carets, right vines and grafting.
2. The group structure: multiplication through the common refinement,
   reduction of opposing carets, inverses and the generators x_i / y_i.
3. The embedding iota: F -> F3 and positive normal forms x_0^a0 ... x_n^an.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import ArityMismatchError, LeafIndexError, NegativeIndexError

logger = logging.getLogger(__name__)


class Arity(int, Enum):
    BINARY = 2
    TERNARY = 3


@dataclass(frozen=True)
class PlanarTree:
    children: Tuple["PlanarTree", ...] = ()
    leaves: int = field(init=False, compare=False, repr=False)
    carets: int = field(init=False, compare=False, repr=False)
    arity: Optional[Arity] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.children:
            leaves, carets, arity = 1, 0, None
        else:
            if len(self.children) not in (2, 3):
                raise ArityMismatchError(f"A caret has 2 or 3 children, got {len(self.children)}.")
            arity = Arity(len(self.children))
            for child in self.children:
                if child.arity is not None and child.arity is not arity:
                    raise ArityMismatchError("All carets of a tree must have the same arity.")
            leaves = sum(child.leaves for child in self.children)
            carets = 1 + sum(child.carets for child in self.children)
        object.__setattr__(self, "leaves", leaves)
        object.__setattr__(self, "carets", carets)
        object.__setattr__(self, "arity", arity)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def to_text(self) -> str:
        if self.is_leaf:
            return "."
        return "(" + "".join(child.to_text() for child in self.children) + ")"

    def __str__(self):
        return self.to_text()


LEAF = PlanarTree()


def caret(*children: PlanarTree) -> PlanarTree:
    """A caret over the given subtrees; bare leaves may be passed as LEAF."""
    return PlanarTree(tuple(children))


def _check_arity(tree: PlanarTree, arity: Arity):
    if tree.arity is not None and tree.arity is not arity:
        raise ArityMismatchError(f"Expected a {arity.name.lower()} tree, got {tree.arity.name.lower()}.")


@dataclass(frozen=True)
class TreePair:
    top: PlanarTree
    bottom: PlanarTree
    arity: Arity = Arity.TERNARY

    def __post_init__(self):
        if self.top.leaves != self.bottom.leaves:
            raise ValueError(
                f"Top and bottom trees must have the same number of leaves "
                f"({self.top.leaves} != {self.bottom.leaves})."
            )
        _check_arity(self.top, self.arity)
        _check_arity(self.bottom, self.arity)

    @property
    def leaves(self) -> int:
        return self.top.leaves

    @property
    def carets(self) -> int:
        return self.top.carets + self.bottom.carets

    def to_text(self) -> str:
        return f"{self.top.to_text()}|{self.bottom.to_text()}"

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class PositiveWord:
    """Exponents (a_0, ..., a_{w-1}) of x_0^a_0 ... x_{w-1}^a_{w-1} in F3."""

    exponents: Tuple[int, ...] = ()

    def __post_init__(self):
        exponents = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exponents):
            raise NegativeIndexError(f"Exponents must be non-negative: {exponents}")
        object.__setattr__(self, "exponents", exponents)

    def canonical(self) -> "PositiveWord":
        exponents = list(self.exponents)
        while exponents and exponents[-1] == 0:
            exponents.pop()
        return PositiveWord(tuple(exponents))

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    @property
    def width(self) -> int:
        # the identity has width 0
        return max(len(self.canonical().exponents) - 1, 0)

    @property
    def height(self) -> int:
        return max(self.exponents, default=0)

    @property
    def letter_count(self) -> int:
        return sum(self.exponents)

    def letters(self) -> List[int]:
        """Generator indices of the word, left to right."""
        return [index for index, a in enumerate(self.exponents) for _ in range(a)]

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.exponents)

    def __str__(self):
        return self.to_text()


# Construction

def make_vine(carets: int, arity: Arity = Arity.TERNARY) -> PlanarTree:
    """The right vine: every caret hangs from the rightmost child of the previous one."""
    if carets < 0:
        raise NegativeIndexError(f"Caret count must be non-negative, got {carets}.")
    tree = LEAF
    for _ in range(carets):
        tree = PlanarTree((LEAF,) * (arity - 1) + (tree,))
    return tree


def is_right_vine(tree: PlanarTree) -> bool:
    while not tree.is_leaf:
        if any(not child.is_leaf for child in tree.children[:-1]):
            return False
        tree = tree.children[-1]
    return True


def graft(host: PlanarTree, leaf_index: int, scion: PlanarTree) -> PlanarTree:
    """Replace the leaf at 1-based position ``leaf_index`` of ``host`` by ``scion``."""
    if not 1 <= leaf_index <= host.leaves:
        raise LeafIndexError(f"Leaf index {leaf_index} out of range 1..{host.leaves}.")
    if host.arity is not None and scion.arity is not None and host.arity is not scion.arity:
        raise ArityMismatchError("Cannot graft trees of different arity.")
    return _replace_leaf(host, leaf_index - 1, scion)


def _replace_leaf(tree: PlanarTree, index: int, scion: PlanarTree) -> PlanarTree:
    if tree.is_leaf:
        return scion
    children = list(tree.children)
    for position, child in enumerate(children):
        if index < child.leaves:
            children[position] = _replace_leaf(child, index, scion)
            return PlanarTree(tuple(children))
        index -= child.leaves
    raise LeafIndexError("Leaf index past the last leaf.")


def identity(arity: Arity = Arity.TERNARY, tree: PlanarTree = LEAF) -> TreePair:
    return TreePair(tree, tree, arity)


@lru_cache(maxsize=None)
def generator(index: int, arity: Arity = Arity.TERNARY) -> TreePair:
    """x_index in F3 (ternary) or y_index in F (binary)."""
    if index < 0:
        raise NegativeIndexError(f"Generator index must be non-negative, got {index}.")
    arity = Arity(arity)
    carets = index // 2 + 1 if arity is Arity.TERNARY else index + 1
    top = graft(make_vine(carets, arity), index + 1, make_vine(1, arity))
    return TreePair(top, make_vine(carets + 1, arity), arity)


# Group structure

def _common_refinement(a: PlanarTree, b: PlanarTree) -> PlanarTree:
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return PlanarTree(tuple(_common_refinement(x, y) for x, y in zip(a.children, b.children)))


def _leaf_expansions(tree: PlanarTree, refined: PlanarTree, out: List[PlanarTree]) -> List[PlanarTree]:
    # the subtree of ``refined`` that sits under each leaf of ``tree``
    if tree.is_leaf:
        out.append(refined)
        return out
    for child, refined_child in zip(tree.children, refined.children):
        _leaf_expansions(child, refined_child, out)
    return out


def _graft_forest(tree: PlanarTree, forest: Iterator[PlanarTree]) -> PlanarTree:
    if tree.is_leaf:
        return next(forest)
    return PlanarTree(tuple(_graft_forest(child, forest) for child in tree.children))


def multiply_unreduced(p: TreePair, q: TreePair) -> TreePair:
    """(T+, T) . (T, T-) = (T+, T-), after refining p.bottom and q.top to a common tree."""
    if p.arity is not q.arity:
        raise ArityMismatchError("Cannot multiply elements of F and F3.")
    refined = _common_refinement(p.bottom, q.top)
    top = _graft_forest(p.top, iter(_leaf_expansions(p.bottom, refined, [])))
    bottom = _graft_forest(q.bottom, iter(_leaf_expansions(q.top, refined, [])))
    return TreePair(top, bottom, p.arity)


def multiply(p: TreePair, q: TreePair) -> TreePair:
    return reduce(multiply_unreduced(p, q))


def invert(p: TreePair) -> TreePair:
    return TreePair(p.bottom, p.top, p.arity)


def _exposed_carets(tree: PlanarTree, offset: int = 0, found: Optional[set] = None) -> set:
    # 0-based start positions of carets whose children are all leaves
    if found is None:
        found = set()
    if tree.is_leaf:
        return found
    if all(child.is_leaf for child in tree.children):
        found.add(offset)
        return found
    for child in tree.children:
        _exposed_carets(child, offset, found)
        offset += child.leaves
    return found


def _collapse(tree: PlanarTree, starts: FrozenSet[int], offset: int = 0) -> PlanarTree:
    if tree.is_leaf:
        return tree
    if offset in starts and all(child.is_leaf for child in tree.children):
        return LEAF
    children = []
    for child in tree.children:
        children.append(_collapse(child, starts, offset))
        offset += child.leaves
    return PlanarTree(tuple(children))


def opposing_carets(p: TreePair) -> List[int]:
    """1-based first leaves of the opposing caret pairs of ``p``, left to right."""
    common = _exposed_carets(p.top) & _exposed_carets(p.bottom)
    return sorted(start + 1 for start in common)


def is_reduced(p: TreePair) -> bool:
    return not opposing_carets(p)


def reduce(p: TreePair) -> TreePair:
    """Remove opposing carets until none remain; the result is the reduced representative."""
    top, bottom = p.top, p.bottom
    passes = 0
    while True:
        common = frozenset(_exposed_carets(top) & _exposed_carets(bottom))
        if not common:
            break
        top = _collapse(top, common)
        bottom = _collapse(bottom, common)
        passes += 1
    if passes:
        logger.debug("Reduced %s in %d passes to %d leaves", p, passes, top.leaves)
    return TreePair(top, bottom, p.arity)


def unreduce(p: TreePair, leaf_index: Optional[int] = None) -> TreePair:
    """Graft one opposing caret pair at the same leaf of both trees (default: the rightmost)."""
    if leaf_index is None:
        leaf_index = p.leaves
    single = make_vine(1, p.arity)
    return TreePair(graft(p.top, leaf_index, single), graft(p.bottom, leaf_index, single), p.arity)


# The embedding F -> F3

def _iota_tree(tree: PlanarTree) -> PlanarTree:
    if tree.is_leaf:
        return LEAF
    left, right = tree.children
    return PlanarTree((_iota_tree(left), LEAF, _iota_tree(right)))


def iota(value: Union[TreePair, PlanarTree]) -> Union[TreePair, PlanarTree]:
    """Turn every binary caret (L, R) into the ternary caret (L, leaf, R)."""
    if isinstance(value, TreePair):
        if value.arity is not Arity.BINARY:
            raise ArityMismatchError("iota is defined on binary tree diagrams only.")
        return TreePair(_iota_tree(value.top), _iota_tree(value.bottom), Arity.TERNARY)
    if value.arity is Arity.TERNARY:
        raise ArityMismatchError("iota is defined on binary trees only.")
    return _iota_tree(value)


def as_ternary(p: TreePair) -> TreePair:
    return iota(p) if p.arity is Arity.BINARY else p


# Positive normal forms

def word_to_pair(word: Union[PositiveWord, Sequence[int]]) -> TreePair:
    """Left-to-right product of the generators of a positive word, reduced."""
    if not isinstance(word, PositiveWord):
        word = PositiveWord(tuple(word))
    pair = identity(Arity.TERNARY)
    for index in word.letters():
        pair = multiply(pair, generator(index, Arity.TERNARY))
    return pair


def positive_pair(word: Union[PositiveWord, Sequence[int]]) -> TreePair:
    """Same element as word_to_pair, built by grafting instead of multiplying.

    Right multiplication of (T, vine(c)) by x_i grafts a caret on leaf i of T
    and lengthens the vine by one caret, once the vine has enough carets for
    leaf i to exist; both trees are first extended by a vine on their
    rightmost leaf when it does not.
    """
    if not isinstance(word, PositiveWord):
        word = PositiveWord(tuple(word))
    single = make_vine(1, Arity.TERNARY)
    top, carets = LEAF, 0
    for index in word.letters():
        needed = index // 2 + 1
        if carets < needed:
            top = graft(top, top.leaves, make_vine(needed - carets, Arity.TERNARY))
            carets = needed
        top = graft(top, index + 1, single)
        carets += 1
    return reduce(TreePair(top, make_vine(carets, Arity.TERNARY), Arity.TERNARY))
