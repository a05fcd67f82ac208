"""
Brace-notation set literals.

    literal := "{" (element ("," element)*)? "}" | "#" digits
    element := literal

'#n' stands for the set with Ackermann code n, so '{#0, #1}' and
'{{},{{}}}' denote the same set. Duplicates collapse.
"""

from src.domain.models.exceptions import SetLiteralSyntaxException
from src.domain.models.hf_set import AckCode, HfSet
from src.domain.services.hf_core import decode, encode


class _LiteralParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.index = 0

    def _skip_space(self) -> None:
        while self.index < len(self.text) and self.text[self.index].isspace():
            self.index += 1

    def _peek(self) -> str:
        self._skip_space()
        return self.text[self.index] if self.index < len(self.text) else ""

    def _error(self, message: str) -> SetLiteralSyntaxException:
        return SetLiteralSyntaxException(message, self.index)

    def parse(self) -> HfSet:
        value = self._literal()
        if self._peek():
            raise self._error(f"Unexpected {self._peek()!r} after the literal")
        return value

    def _literal(self) -> HfSet:
        token = self._peek()
        if token == "#":
            return decode(self._code())
        if token != "{":
            raise self._error(f"Expected '{{' or '#', found {token or 'end of input'!r}")
        self.index += 1
        children: list[HfSet] = []
        if self._peek() == "}":
            self.index += 1
            return HfSet()
        while True:
            children.append(self._literal())
            token = self._peek()
            self.index += 1
            if token == "}":
                return HfSet(children)
            if token != ",":
                self.index -= 1
                raise self._error(f"Expected ',' or '}}', found {token or 'end of input'!r}")

    def _code(self) -> AckCode:
        self.index += 1
        start = self.index
        while self.index < len(self.text) and self.text[self.index].isdigit():
            self.index += 1
        if start == self.index:
            raise self._error("Expected digits after '#'")
        return int(self.text[start:self.index])


def parse_set_literal(text: str) -> HfSet:
    """
    Parse a brace literal into its canonical HfSet.

    Raises:
        SetLiteralSyntaxException: On malformed input
        CapExceededException: If a '#' code does not fit the bit cap
    """
    return _LiteralParser(text).parse()


def parse_code(text: str) -> AckCode:
    """
    Read a value given as a natural number, '#code' or a brace literal.

    Raises:
        SetLiteralSyntaxException: On malformed input
    """
    stripped = text.strip()
    if stripped.isdigit():
        return int(stripped)
    if stripped.startswith("#") and stripped[1:].isdigit():
        return int(stripped[1:])
    return encode(parse_set_literal(stripped))
