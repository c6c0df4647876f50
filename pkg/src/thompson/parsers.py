import re
from typing import List

from .errors import ParseError
from .trees import LEAF, Arity, PlanarTree, PositiveWord, TreePair

WORD_TOKEN = re.compile(r"^\d+$")
HEIGHT_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")


class NotationParser:
    """Text notations: words `1,0,2`, trees `(.(...).)`, pairs `top|bottom` and heights `0..8`."""

    def parse_word(self, text: str) -> PositiveWord:
        text = text.strip()
        if not text:
            return PositiveWord(())
        exponents = []
        for token in text.split(","):
            token = token.strip()
            if not WORD_TOKEN.match(token):
                raise ParseError(f"Invalid exponent {token!r} in word {text!r}.", token=token)
            exponents.append(int(token))
        return PositiveWord(tuple(exponents))

    def parse_heights(self, text: str) -> List[int]:
        match = HEIGHT_RANGE.match(text)
        if not match:
            raise ParseError(f"Invalid height or height range {text!r}; expected H or LOW..HIGH.", token=text)
        low = int(match.group(1))
        high = int(match.group(2)) if match.group(2) is not None else low
        if high < low:
            raise ParseError(f"Empty height range {text!r}.", token=text)
        return list(range(low, high + 1))

    def parse_tree(self, text: str) -> PlanarTree:
        text = re.sub(r"\s+", "", text)
        tree, position = self._parse_node(text, 0)
        if position != len(text):
            raise ParseError(f"Trailing characters after tree: {text[position:]!r}.", token=text[position:])
        return tree

    def _parse_node(self, text: str, position: int):
        if position >= len(text):
            raise ParseError("Unexpected end of tree.", token=text)
        char = text[position]
        if char == ".":
            return LEAF, position + 1
        if char != "(":
            raise ParseError(f"Unexpected {char!r} at position {position}.", token=char)
        children = []
        position += 1
        while position < len(text) and text[position] != ")":
            child, position = self._parse_node(text, position)
            children.append(child)
        if position >= len(text):
            raise ParseError("Unclosed caret.", token=text)
        if len(children) not in (2, 3):
            raise ParseError(f"A caret has 2 or 3 children, got {len(children)}.", token=text)
        return PlanarTree(tuple(children)), position + 1

    def parse_pair(self, text: str) -> TreePair:
        parts = text.split("|")
        if len(parts) != 2:
            raise ParseError(f"A tree pair is written top|bottom, got {text!r}.", token=text)
        top, bottom = self.parse_tree(parts[0]), self.parse_tree(parts[1])
        arity = top.arity or bottom.arity or Arity.TERNARY
        return TreePair(top, bottom, arity)
