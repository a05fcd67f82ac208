"""
Recursive-descent parser for formula text.

Grammar (whitespace-insensitive):

    formula := impl
    impl    := disj (("->" | "<->") impl)?
    disj    := conj ("\\/" conj)*
    conj    := neg ("/\\" neg)*
    neg     := "~" neg | atom
    atom    := "false" | quant | "(" formula ")"
             | term ("=" | "!=" | "in" | "notin" | "subset") term
    quant   := ("forall" | "exists") var (("<" | "in") term)? "." formula
    term    := prod ("+" prod)*
    prod    := primary ("*" primary)*
    primary := var | "0" | "S(" term ")" | "exp(" term "," term ")" | "(" term ")"

'!=', 'notin', 'subset' and '<->' are expanded while parsing.
"""

import logging
import re
from dataclasses import dataclass

from src.domain.models.exceptions import (
    DomainException,
    FormulaSyntaxException,
    MalformedFormulaException,
)
from src.domain.models.formula import (
    App,
    And,
    Atom,
    BExists,
    BForall,
    Bound,
    Eq,
    Exists,
    Falsum,
    Forall,
    Formula,
    Implies,
    Or,
    Term,
    Var,
    neg,
)
from src.domain.models.signature import Signature
from src.domain.services.formula_syntax import fresh_variable, term_vars

logger = logging.getLogger(__name__)

KEYWORDS = frozenset(
    {"forall", "exists", "in", "notin", "subset", "false", "exp", "S"}
)

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|\\/|/\\|!=|[~().,=<+*])|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+))"
)
_VARIABLE = re.compile(r"[a-z][a-zA-Z0-9_]*")


@dataclass(frozen=True)
class Token:
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    Split formula text into tokens.

    Raises:
        FormulaSyntaxException: On a character that starts no token
    """
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            start = len(text) - len(text[position:].lstrip())
            raise FormulaSyntaxException(
                f"Unexpected character {text[start]!r}", start, text
            )
        start = match.start(match.lastgroup)
        tokens.append(Token(match.group(match.lastgroup), start))
        position = match.end()
    return tokens


class FormulaParser:
    """
    Parser for one formula over one signature.

    Backtracking is used only for '(' at atom level, where a parenthesised
    term and a parenthesised formula share their first token.
    """

    def __init__(self, text: str, signature: Signature) -> None:
        self.text = text
        self.signature = signature
        self.tokens = tokenize(text)
        self.index = 0

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------

    def _peek(self) -> str | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index].text
        return None

    def _position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index].position
        return len(self.text)

    def _error(self, message: str) -> FormulaSyntaxException:
        return FormulaSyntaxException(message, self._position(), self.text)

    def _accept(self, text: str) -> bool:
        if self._peek() == text:
            self.index += 1
            return True
        return False

    def _expect(self, text: str) -> None:
        if not self._accept(text):
            found = self._peek()
            raise self._error(
                f"Expected '{text}', found {'end of input' if found is None else repr(found)}"
            )

    def _variable(self) -> str:
        name = self._peek()
        if name is None or name in KEYWORDS or not _VARIABLE.fullmatch(name):
            raise self._error(f"Expected a variable, found {name!r}")
        self.index += 1
        return name

    # ------------------------------------------------------------------
    # Formulas
    # ------------------------------------------------------------------

    def parse(self) -> Formula:
        formula = self._implication()
        if self._peek() is not None:
            raise self._error(f"Unexpected token {self._peek()!r}")
        return formula

    def _implication(self) -> Formula:
        left = self._disjunction()
        if self._accept("->"):
            return Implies(left, self._implication())
        if self._accept("<->"):
            right = self._implication()
            return And(Implies(left, right), Implies(right, left))
        return left

    def _disjunction(self) -> Formula:
        formula = self._conjunction()
        while self._accept("\\/"):
            formula = Or(formula, self._conjunction())
        return formula

    def _conjunction(self) -> Formula:
        formula = self._negation()
        while self._accept("/\\"):
            formula = And(formula, self._negation())
        return formula

    def _negation(self) -> Formula:
        if self._accept("~"):
            return neg(self._negation())
        return self._atom()

    def _atom(self) -> Formula:
        token = self._peek()
        if token is None:
            raise self._error("Unexpected end of input")
        if self._accept("false"):
            return Falsum()
        if token in ("forall", "exists"):
            return self._quantifier()
        if token == "(":
            start = self.index
            try:
                return self._relation()
            except DomainException:
                self.index = start
            self._expect("(")
            formula = self._implication()
            self._expect(")")
            return formula
        return self._relation()

    def _relation(self) -> Formula:
        left = self._term()
        operator = self._peek()
        if operator not in ("=", "!=", "in", "notin", "subset"):
            raise self._error(f"Expected a relation, found {operator!r}")
        self.index += 1
        right = self._term()
        if operator == "=":
            return Eq(left, right)
        if operator == "!=":
            return neg(Eq(left, right))
        self.signature.check_predicate("in", 2)
        if operator == "in":
            return Atom("in", (left, right))
        if operator == "notin":
            return neg(Atom("in", (left, right)))
        avoid = term_vars(left) | term_vars(right)
        z = fresh_variable("z", avoid)
        return BForall(z, Bound("in", left), Atom("in", (Var(z), right)))

    def _quantifier(self) -> Formula:
        universal = self._peek() == "forall"
        self.index += 1
        var = self._variable()
        relation = self._peek()
        if relation in ("<", "in"):
            position = self._position()
            if relation != self.signature.bound_relation:
                raise FormulaSyntaxException(
                    f"Bound '{relation}' is not available in signature "
                    f"'{self.signature.name}'",
                    position,
                    self.text,
                )
            self.index += 1
            term = self._term()
            if var in term_vars(term):
                raise MalformedFormulaException(
                    f"Bound of '{var}' mentions the bound variable"
                )
            self._expect(".")
            body = self._implication()
            bound = Bound(relation, term)
            return BForall(var, bound, body) if universal else BExists(var, bound, body)
        self._expect(".")
        body = self._implication()
        return Forall(var, body) if universal else Exists(var, body)

    # ------------------------------------------------------------------
    # Terms
    # ------------------------------------------------------------------

    def _term(self) -> Term:
        term = self._product()
        while self._accept("+"):
            term = self._application("+", (term, self._product()))
        return term

    def _product(self) -> Term:
        term = self._primary()
        while self._accept("*"):
            term = self._application("*", (term, self._primary()))
        return term

    def _primary(self) -> Term:
        token = self._peek()
        if token is None:
            raise self._error("Expected a term, found end of input")
        if self._accept("("):
            term = self._term()
            self._expect(")")
            return term
        if token.isdigit():
            if token != "0":
                raise self._error(f"Only the numeral 0 is a term, found {token!r}")
            self.index += 1
            return self._application("0", ())
        if self._accept("S"):
            self._expect("(")
            argument = self._term()
            self._expect(")")
            return self._application("S", (argument,))
        if self._accept("exp"):
            self._expect("(")
            base = self._term()
            self._expect(",")
            exponent = self._term()
            self._expect(")")
            return self._application("exp", (base, exponent))
        return Var(self._variable())

    def _application(self, symbol: str, args: tuple[Term, ...]) -> Term:
        self.signature.check_function(symbol, len(args))
        return App(symbol, args)


def parse(text: str, signature: Signature) -> Formula:
    """
    Parse formula text over a signature.

    Args:
        text: Formula text
        signature: Signature the formula must be over

    Returns:
        The formula AST

    Raises:
        FormulaSyntaxException: With the offending position
        UnknownSymbolException: For function symbols outside the signature
        ArityMismatchException: For wrong arities
    """
    formula = FormulaParser(text, signature).parse()
    logger.debug(f"Parsed formula over {signature.name}: {text!r}")
    return formula
