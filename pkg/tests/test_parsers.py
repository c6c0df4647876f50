import pytest

from src.thompson.errors import ArityMismatchError, ParseError
from src.thompson.parsers import NotationParser
from src.thompson.trees import Arity, PositiveWord, generator


@pytest.fixture
def parser():
    return NotationParser()


def test_parse_word(parser):
    assert parser.parse_word("1,0,2") == PositiveWord((1, 0, 2))
    assert parser.parse_word(" 3 , 4 ") == PositiveWord((3, 4))
    assert parser.parse_word("") == PositiveWord(())


def test_parse_word_names_the_bad_token(parser):
    with pytest.raises(ParseError) as error:
        parser.parse_word("1,x,2")
    assert error.value.token == "x"
    with pytest.raises(ParseError):
        parser.parse_word("1,-2")


def test_parse_heights(parser):
    assert parser.parse_heights("3") == [3]
    assert parser.parse_heights("0..8") == list(range(9))
    with pytest.raises(ParseError):
        parser.parse_heights("5..2")
    with pytest.raises(ParseError):
        parser.parse_heights("a..b")


def test_parse_tree_and_pair(parser, x2):
    assert parser.parse_tree("(..((...)..))") == x2.top
    assert parser.parse_pair(x2.to_text()) == x2
    y1 = generator(1, Arity.BINARY)
    assert parser.parse_pair(y1.to_text()) == y1


def test_parse_tree_errors(parser):
    for text in ("(..", "(.)", "(....)", "..", "x"):
        with pytest.raises(ParseError):
            parser.parse_tree(text)
    with pytest.raises(ParseError):
        parser.parse_pair("(...)")
    with pytest.raises(ArityMismatchError):
        parser.parse_tree("((..)..)")
