"""
Permutations Module
===================

Tangled permutations of ternary trees and Thompson permutations of tree
diagrams.

The tangled permutation pi(T) of a ternary tree with k leaves is a
fixed-point-free involution of {0, ..., k}: each leaf is walked along the
tree with the path rules below until another leaf or the root (point 0) is
met, and the two endpoints are paired.

    up from a left child     -> down into the right child
    up from a right child    -> down into the left child
    up from a middle child   -> up to the parent
    down from the parent     -> down into the middle child

The Thompson permutation of (T+, T-) alternates pi(T+) and pi(T-) from the
smallest point not yet used; its orbits are the components of the closure
link.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import (
    ArityMismatchError,
    LeafIndexError,
    NotAnInvolutionError,
    WalkBoundExceededError,
)
from .trees import (
    Arity,
    PlanarTree,
    PositiveWord,
    TreePair,
    as_ternary,
    generator,
    graft,
    is_right_vine,
    positive_pair,
)

logger = logging.getLogger(__name__)

LEFT, MIDDLE, RIGHT = 0, 1, 2


@dataclass(frozen=True)
class Matching:
    """A fixed-point-free involution of {0, ..., k}, stored as partner[i]."""

    partner: Tuple[int, ...]

    def __post_init__(self):
        size = len(self.partner)
        if size == 0 or size % 2:
            raise NotAnInvolutionError(f"A matching needs an even, non-zero number of points, got {size}.")
        for point, other in enumerate(self.partner):
            if not 0 <= other < size:
                raise NotAnInvolutionError(f"Partner {other} of {point} is out of range.")
            if other == point:
                raise NotAnInvolutionError(f"Point {point} is fixed.")
            if self.partner[other] != point:
                raise NotAnInvolutionError(f"{point} -> {other} but {other} -> {self.partner[other]}.")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Matching":
        pairs = [tuple(pair) for pair in pairs]
        partner = [-1] * (2 * len(pairs))
        for a, b in pairs:
            for point in (a, b):
                if not 0 <= point < len(partner) or partner[point] != -1:
                    raise NotAnInvolutionError(f"Pairs {pairs} do not partition 0..{len(partner) - 1}.")
            partner[a], partner[b] = b, a
        return cls(tuple(partner))

    @property
    def size(self) -> int:
        return len(self.partner)

    def __call__(self, point: int) -> int:
        return self.partner[point]

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted((point, other) for point, other in enumerate(self.partner) if point < other)

    def to_text(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.pairs())


@dataclass(frozen=True)
class ThompsonPermutation:
    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.cycles)

    @property
    def size(self) -> int:
        return sum(len(cycle) for cycle in self.cycles)

    def mapping(self) -> Dict[int, int]:
        image = {}
        for cycle in self.cycles:
            for position, point in enumerate(cycle):
                image[point] = cycle[(position + 1) % len(cycle)]
        return image

    def cycle_of(self, point: int) -> Tuple[int, ...]:
        for cycle in self.cycles:
            if point in cycle:
                return cycle
        raise LeafIndexError(f"Point {point} is not moved by this permutation.")

    def to_text(self) -> str:
        return "".join("(" + ",".join(str(p) for p in cycle) + ")" for cycle in self.cycles)

    def __str__(self):
        return self.to_text()


class _FlatTree:
    """Parent/slot tables of a ternary tree, leaves numbered 1..k."""

    def __init__(self, tree: PlanarTree):
        self.parent: List[int] = []
        self.slot: List[int] = []
        self.children: List[Tuple[int, ...]] = []
        self.leaf_number: List[int] = []
        self.leaf_node: Dict[int, int] = {}
        self._add(tree, -1, -1)

    def _add(self, tree: PlanarTree, parent: int, slot: int) -> int:
        node = len(self.parent)
        self.parent.append(parent)
        self.slot.append(slot)
        self.children.append(())
        if tree.is_leaf:
            number = len(self.leaf_node) + 1
            self.leaf_number.append(number)
            self.leaf_node[number] = node
            return node
        self.leaf_number.append(0)
        self.children[node] = tuple(self._add(child, node, position) for position, child in enumerate(tree.children))
        return node

    @property
    def edge_count(self) -> int:
        # includes the root edge
        return len(self.parent)


def _walk(flat: _FlatTree, leaf: int) -> int:
    node, ascending = flat.leaf_node[leaf], True
    bound = 2 * flat.edge_count
    for _ in range(bound):
        if ascending:
            parent = flat.parent[node]
            if parent < 0:
                return 0
            slot = flat.slot[node]
            if slot == MIDDLE:
                node = parent
            else:
                node, ascending = flat.children[parent][RIGHT if slot == LEFT else LEFT], False
        else:
            if flat.leaf_number[node]:
                return flat.leaf_number[node]
            node = flat.children[node][MIDDLE]
    raise WalkBoundExceededError(f"Walk from leaf {leaf} did not end within {bound} steps.")


def tree_matching(tree: PlanarTree) -> Matching:
    """The tangled permutation pi(T) of a ternary tree."""
    if tree.arity is Arity.BINARY:
        raise ArityMismatchError("Tangled permutations are defined on ternary trees; lift through iota first.")
    flat = _FlatTree(tree)
    return Matching(tuple(_walk(flat, leaf) if leaf else _root_end(flat) for leaf in range(tree.leaves + 1)))


def _root_end(flat: _FlatTree) -> int:
    node = 0
    while not flat.leaf_number[node]:
        node = flat.children[node][MIDDLE]
    return flat.leaf_number[node]


def vine_matching(carets: int) -> Matching:
    """Closed form of tree_matching(make_vine(carets, TERNARY))."""
    if carets < 0:
        raise ValueError(f"Caret count must be non-negative, got {carets}.")
    if carets == 0:
        return Matching((1, 0))
    pairs = [(0, 2)]
    pairs.extend((2 * i - 1, 2 * i + 2) for i in range(1, carets))
    pairs.append((2 * carets - 1, 2 * carets + 1))
    return Matching.from_pairs(pairs)


def bottom_matching(leaf_count: int) -> Matching:
    """pi of the bottom tree of a positive element, which only depends on its (odd) leaf count."""
    if leaf_count < 1 or leaf_count % 2 == 0:
        raise ValueError(f"The leaf count of a ternary tree is odd, got {leaf_count}.")
    return vine_matching((leaf_count - 1) // 2)


def thompson_permutation(plus: Matching, minus: Matching) -> ThompsonPermutation:
    """Alternate plus and minus from each smallest unused point."""
    if plus.size != minus.size:
        raise ValueError(f"Matchings act on different sets ({plus.size} != {minus.size} points).")
    seen = [False] * plus.size
    cycles = []
    for start in range(plus.size):
        if seen[start]:
            continue
        cycle = []
        point, use_plus = start, True
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = plus(point) if use_plus else minus(point)
            use_plus = not use_plus
        cycles.append(tuple(cycle))
    return ThompsonPermutation(tuple(cycles))


def pair_permutation(pair: TreePair) -> ThompsonPermutation:
    """Thompson permutation of the given representative, without reducing it."""
    pair = as_ternary(pair)
    return thompson_permutation(tree_matching(pair.top), tree_matching(pair.bottom))


def top_matching(word: Union[PositiveWord, Sequence[int]]) -> Matching:
    return tree_matching(positive_pair(word).top)


def permutation_of_element(word: Union[PositiveWord, Sequence[int]]) -> ThompsonPermutation:
    pair = positive_pair(word)
    if is_right_vine(pair.bottom):
        minus = bottom_matching(pair.leaves)
    else:
        logger.warning("Reduced pair of %s has a bottom tree that is not a right vine: %s", word, pair)
        minus = tree_matching(pair.bottom)
    return thompson_permutation(tree_matching(pair.top), minus)


def orbit_count(word: Union[PositiveWord, Sequence[int]]) -> int:
    return permutation_of_element(word).orbit_count


def reverse_component(pair: TreePair, point: int) -> TreePair:
    """Reverse the orientation of the component through axis point ``point``.

    A copy of x_0 is grafted on the glued leaf pair at the smallest axis point
    of that component, where the orientation convention is read off. Binary
    diagrams are lifted through iota first, so the result is always ternary.
    """
    pair = as_ternary(pair)
    if point == 0:
        raise LeafIndexError("Axis point 0 lies on the closure arc, not on a glued leaf pair.")
    if not 1 <= point <= pair.leaves:
        raise LeafIndexError(f"Axis point {point} out of range 1..{pair.leaves}.")
    anchor = min(pair_permutation(pair).cycle_of(point))
    if anchor == 0:
        logger.warning(
            "The component through %d also passes the closure arc; its orientation is fixed there.", point
        )
        anchor = point
    x0 = generator(0, Arity.TERNARY)
    return TreePair(graft(pair.top, anchor, x0.top), graft(pair.bottom, anchor, x0.bottom), Arity.TERNARY)
