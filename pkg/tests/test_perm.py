import logging

import pytest

from src.thompson.errors import ArityMismatchError, LeafIndexError, NotAnInvolutionError
from src.thompson.perm import (
    Matching,
    bottom_matching,
    orbit_count,
    pair_permutation,
    permutation_of_element,
    reverse_component,
    thompson_permutation,
    top_matching,
    tree_matching,
    vine_matching,
)
from src.thompson.trees import LEAF, Arity, caret, generator, identity, make_vine, positive_pair, unreduce


def _normalized(cycle):
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def test_single_caret_matching():
    assert tree_matching(caret(LEAF, LEAF, LEAF)).pairs() == [(0, 2), (1, 3)]


def test_leaf_matching():
    assert tree_matching(LEAF).pairs() == [(0, 1)]


def test_worked_example_matchings(x2):
    assert tree_matching(x2.top).pairs() == [(0, 2), (1, 6), (3, 5), (4, 7)]
    assert tree_matching(make_vine(3)).pairs() == [(0, 2), (1, 4), (3, 6), (5, 7)]


def test_x0_top_matching(x0):
    assert tree_matching(x0.top).pairs() == [(0, 4), (1, 3), (2, 5)]
    assert top_matching((1,)) == tree_matching(x0.top)


def test_tree_matching_rejects_binary_trees():
    with pytest.raises(ArityMismatchError):
        tree_matching(make_vine(2, Arity.BINARY))


def test_tree_matching_is_an_involution_on_small_trees(small_ternary_trees):
    assert len(small_ternary_trees) == 1 + 1 + 3 + 12 + 55
    for tree in small_ternary_trees:
        matching = tree_matching(tree)
        assert matching.size == tree.leaves + 1
        for point in range(matching.size):
            assert matching(point) != point
            assert matching(matching(point)) == point
        assert sum(1 for a, b in matching.pairs() if a == 0) == 1


def test_vine_matching_closed_form():
    assert vine_matching(0).pairs() == [(0, 1)]
    assert vine_matching(1).pairs() == [(0, 2), (1, 3)]
    assert vine_matching(2).pairs() == [(0, 2), (1, 4), (3, 5)]
    for carets in range(51):
        assert vine_matching(carets) == tree_matching(make_vine(carets)), carets


def test_bottom_matching_takes_leaf_count():
    assert bottom_matching(7) == vine_matching(3)
    with pytest.raises(ValueError):
        bottom_matching(6)


def test_matching_validation():
    with pytest.raises(NotAnInvolutionError):
        Matching((1, 2, 0))
    with pytest.raises(NotAnInvolutionError):
        Matching((0, 1))
    with pytest.raises(NotAnInvolutionError):
        Matching((1, 2, 3, 0))
    with pytest.raises(NotAnInvolutionError):
        Matching.from_pairs([(0, 1), (1, 2)])
    assert Matching.from_pairs([(2, 0), (1, 3)]).pairs() == [(0, 2), (1, 3)]


def test_thompson_permutation_identity():
    permutation = thompson_permutation(Matching((1, 0)), Matching((1, 0)))
    assert permutation.cycles == ((0, 1),)
    assert permutation.orbit_count == 1


def test_thompson_permutation_worked_example():
    plus = Matching.from_pairs([(1, 6), (0, 2), (3, 5), (4, 7)])
    minus = Matching.from_pairs([(0, 2), (1, 4), (3, 6), (5, 7)])
    permutation = thompson_permutation(plus, minus)
    assert permutation.to_text() == "(0,2)(1,6,3,5,7,4)"
    assert permutation.orbit_count == 2
    assert permutation.mapping()[4] == 1


def test_thompson_permutation_size_mismatch():
    with pytest.raises(ValueError):
        thompson_permutation(vine_matching(1), vine_matching(2))


def test_permutation_of_element_examples():
    assert permutation_of_element(()).to_text() == "(0,1)"
    assert permutation_of_element((0, 0, 1)).to_text() == "(0,2)(1,6,3,5,7,4)"
    assert permutation_of_element((1,)).to_text() == "(0,4,1,3,5,2)"
    assert orbit_count(()) == 1
    assert orbit_count((0, 0, 1)) == 2
    assert orbit_count((1,)) == 1
    assert orbit_count((0, 1)) == 1


def test_cycle_structure(random_words):
    for word in random_words:
        permutation = permutation_of_element(word)
        points = sorted(p for cycle in permutation.cycles for p in cycle)
        assert points == list(range(permutation.size))
        heads = [cycle[0] for cycle in permutation.cycles]
        assert heads == sorted(heads)
        for cycle in permutation.cycles:
            assert cycle[0] == min(cycle)
            assert len(cycle) % 2 == 0


def test_pair_permutation_lifts_binary_pairs(x2):
    assert pair_permutation(generator(1, Arity.BINARY)) == pair_permutation(x2)


def test_unreduction_adds_one_orbit(random_words):
    assert len(random_words) >= 100
    for word in random_words:
        pair = positive_pair(word)
        assert pair_permutation(unreduce(pair)).orbit_count == orbit_count(word) + 1, word


def _project(cycle, anchor):
    # collapse the five leaves of the grafted x0 back onto the anchor point
    image = []
    for point in cycle:
        if point < anchor:
            image.append(point)
        elif point <= anchor + 4:
            image.append(anchor)
        else:
            image.append(point - 4)
    collapsed = [p for i, p in enumerate(image) if p != image[i - 1]]
    return _normalized(collapsed or image[:1])


def test_reverse_component_on_x2(x2):
    before = pair_permutation(x2)
    for point in (1, 6, 3):
        after = pair_permutation(reverse_component(x2, point))
        assert after.orbit_count == before.orbit_count
        reversed_cycle = _normalized(list(reversed(before.cycle_of(1))))
        projected = [_project(list(cycle), 1) for cycle in after.cycles]
        assert reversed_cycle in projected


def test_reverse_component_on_the_closure_arc_orbit(caplog):
    with caplog.at_level(logging.WARNING):
        result = reverse_component(identity(), 1)
    assert pair_permutation(result).orbit_count == 1
    assert "closure arc" in caplog.text


def test_reverse_component_lifts_binary_pairs():
    result = reverse_component(generator(1, Arity.BINARY), 1)
    assert result.arity is Arity.TERNARY
    assert pair_permutation(result).orbit_count == 2


def test_reverse_component_rejects_bad_points(x2):
    with pytest.raises(LeafIndexError):
        reverse_component(x2, 0)
    with pytest.raises(LeafIndexError):
        reverse_component(x2, 8)
