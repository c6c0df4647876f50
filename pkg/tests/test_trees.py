import itertools

import pytest

from src.thompson.errors import ArityMismatchError, LeafIndexError, NegativeIndexError
from src.thompson.trees import (
    LEAF,
    Arity,
    PositiveWord,
    TreePair,
    caret,
    generator,
    graft,
    identity,
    invert,
    iota,
    is_reduced,
    is_right_vine,
    make_vine,
    multiply,
    multiply_unreduced,
    opposing_carets,
    positive_pair,
    reduce,
    unreduce,
    word_to_pair,
)

from .conftest import ternary_trees


def test_make_vine_shapes():
    assert make_vine(0) == LEAF
    assert make_vine(2).to_text() == "(..(...))"
    assert make_vine(2).leaves == 5
    binary = make_vine(3, Arity.BINARY)
    assert binary.to_text() == "(.(.(..)))"
    assert binary.leaves == 4


def test_make_vine_rejects_negative_count():
    with pytest.raises(NegativeIndexError):
        make_vine(-1)


def test_leaf_and_caret_counts_follow_arity():
    for carets in range(5):
        for tree in ternary_trees(carets):
            assert tree.carets == carets
            assert tree.leaves == 2 * carets + 1
    for carets in range(6):
        assert make_vine(carets, Arity.BINARY).leaves == carets + 1


def test_caret_rejects_mixed_arity():
    binary = caret(LEAF, LEAF)
    with pytest.raises(ArityMismatchError):
        caret(binary, LEAF, LEAF)
    with pytest.raises(ArityMismatchError):
        caret(LEAF, LEAF, LEAF, LEAF)


def test_ternary_generators():
    x0, x1, x2 = (generator(i) for i in range(3))
    assert x0.top.to_text() == "((...)..)"
    assert x1.top.to_text() == "(.(...).)"
    assert x0.bottom == x1.bottom == make_vine(2)
    assert x0.leaves == x1.leaves == 5
    assert x2.top.to_text() == "(..((...)..))"
    assert x2.bottom == make_vine(3)
    assert x2.leaves == 7


def test_binary_generators():
    y0 = generator(0, Arity.BINARY)
    y1 = generator(1, Arity.BINARY)
    assert y0.top.to_text() == "((..).)"
    assert y0.bottom.to_text() == "(.(..))"
    assert y1.top.to_text() == "(.((..).))"
    assert y1.bottom == make_vine(3, Arity.BINARY)


def test_generator_rejects_negative_index():
    with pytest.raises(NegativeIndexError):
        generator(-1)


def test_graft():
    vine = make_vine(1)
    assert graft(LEAF, 1, vine) == vine
    assert graft(vine, 1, vine) == generator(0).top
    assert graft(vine, 3, vine) == make_vine(2)
    assert graft(vine, 2, vine).leaves == 5


def test_graft_errors():
    with pytest.raises(LeafIndexError):
        graft(make_vine(1), 4, LEAF)
    with pytest.raises(LeafIndexError):
        graft(make_vine(1), 0, LEAF)
    with pytest.raises(ArityMismatchError):
        graft(make_vine(1), 1, make_vine(1, Arity.BINARY))


def test_tree_pair_needs_equal_leaves():
    with pytest.raises(ValueError):
        TreePair(make_vine(1), make_vine(2))


def test_reduce_single_opposing_pair():
    single = make_vine(1)
    assert reduce(TreePair(single, single)) == identity()


def test_generators_are_reduced(x0, x2):
    assert is_reduced(x0)
    assert reduce(x0) == x0
    assert reduce(x2) == x2


def test_unreduce_then_reduce(x0):
    bigger = unreduce(x0)
    assert bigger.leaves == x0.leaves + 2
    assert not is_reduced(bigger)
    assert opposing_carets(bigger) == [x0.leaves]
    assert reduce(bigger) == x0


def test_reduce_is_idempotent(random_words):
    for word in random_words[:20]:
        pair = unreduce(unreduce(positive_pair(word), 1))
        once = reduce(pair)
        assert reduce(once) == once


def test_multiply_unit_and_inverse(x0, x2):
    assert multiply(x0, identity()) == x0
    assert multiply(identity(), x2) == x2
    assert multiply(x2, invert(x2)) == identity()
    assert multiply(invert(x0), x0) == identity()


def test_multiply_unreduced_keeps_opposing_carets(x0):
    product = multiply_unreduced(x0, invert(x0))
    assert product.leaves == 5
    assert reduce(product) == identity()


def test_multiply_rejects_mixed_arity(x0):
    with pytest.raises(ArityMismatchError):
        multiply(x0, generator(0, Arity.BINARY))


def test_ternary_presentation_relations():
    for l, n in itertools.combinations(range(7), 2):
        left = multiply(generator(n), generator(l))
        right = multiply(generator(l), generator(n + 2))
        assert left == right, (l, n)


def test_binary_presentation_relations():
    y = lambda i: generator(i, Arity.BINARY)  # noqa: E731
    for l, n in itertools.combinations(range(7), 2):
        assert multiply(y(n), y(l)) == multiply(y(l), y(n + 1)), (l, n)


def test_binary_relation_example():
    y = lambda i: generator(i, Arity.BINARY)  # noqa: E731
    product = multiply(y(1), y(0))
    assert product.to_text() == "((..)((..).))|(.(.(.(..))))"
    assert product == multiply(y(0), y(2))


def test_iota_maps_binary_generators():
    assert iota(identity(Arity.BINARY)) == identity(Arity.TERNARY)
    for i in range(5):
        assert iota(generator(i, Arity.BINARY)) == generator(2 * i)


def test_iota_rejects_ternary_input(x0):
    with pytest.raises(ArityMismatchError):
        iota(x0)
    with pytest.raises(ArityMismatchError):
        iota(make_vine(1))


def test_iota_is_a_morphism():
    y = lambda i: generator(i, Arity.BINARY)  # noqa: E731
    for length in range(1, 5):
        for letters in itertools.product((0, 1), repeat=length):
            binary = identity(Arity.BINARY)
            ternary = identity(Arity.TERNARY)
            for letter in letters:
                binary = multiply(binary, y(letter))
                ternary = multiply(ternary, iota(y(letter)))
            assert iota(binary) == ternary, letters


def test_associativity(rng):
    for _ in range(30):
        p, q, r = (generator(rng.randint(0, 5)) for _ in range(3))
        assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))


def test_word_to_pair_examples(x0, x2):
    assert word_to_pair(()) == identity()
    assert word_to_pair((1,)) == x0
    assert word_to_pair((0, 0, 1)) == x2


def test_word_to_pair_has_vine_bottom(random_words):
    for word in random_words:
        pair = word_to_pair(word)
        assert is_reduced(pair)
        assert is_right_vine(pair.bottom)
        assert pair.leaves % 2 == 1


def test_positive_pair_agrees_with_products(random_words):
    for word in random_words:
        assert positive_pair(word) == word_to_pair(word), word


def test_x0_x1_product():
    pair = positive_pair((1, 1))
    assert pair.top.to_text() == "((.(...).)..)"
    assert pair.bottom == make_vine(3)


def test_positive_word_shape():
    word = PositiveWord((1, 0, 2, 0))
    assert word.canonical() == PositiveWord((1, 0, 2))
    assert word.width == 2
    assert word.height == 2
    assert word.letter_count == 3
    assert word.letters() == [0, 2, 2]
    assert word.to_text() == "1,0,2,0"
    assert PositiveWord(()).is_identity
    assert PositiveWord((0, 0)).width == 0


def test_positive_word_rejects_negative_exponent():
    with pytest.raises(NegativeIndexError):
        PositiveWord((1, -1))
