"""Pratt parser for polynomial and rational-function expressions in ``z``.

Grammar, loosely::

    expr   := expr ('+' | '-') expr | expr ('*' | '/' | <juxtaposition>) expr
            | '-' expr | '+' expr | atom '^' uint | atom
    atom   := uint | 'z' | 'i' | '(' expr ')'

Juxtaposition ("3z", "2iz^2", "z(z+1)^2") multiplies. '^' binds tighter
than unary minus, so "-z^2" is "-(z^2)". Exponents must be unsigned
integer literals. Division by a nonconstant gives a rational function.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError
from ..poly import Polynomial, RationalFunction
from ..scalars import I

__all__ = ["ParsedExpression", "parse_expr", "parse_poly", "parse_rational", "tokenize"]

MAX_EXPONENT = 4096

_SINGLE = {"+": "plus", "-": "minus", "*": "star", "/": "slash", "^": "caret", "(": "lparen", ")": "rparen"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], i))
            i = j
        elif ch in "zi":
            tokens.append(Token(ch, ch, i))
            i += 1
        elif ch == "−":
            tokens.append(Token("minus", ch, i))
            i += 1
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", source, i, ("integer", "'z'", "'i'", "operator", "'('"))
    tokens.append(Token("eof", "", n))
    return tokens


_ATOM_START = ("int", "z", "i", "lparen")
_IMPLICIT_START = ("z", "i", "lparen")

# binding powers
_ADD, _MUL, _PREFIX, _POW = 10, 20, 25, 30


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: Token, expected) -> ParseError:
        return ParseError(message, self.source, tok.pos, expected)

    def parse(self):
        if self.peek().kind == "eof":
            raise self.fail("empty expression", self.peek(), ("expression",))
        value = self.expr(0)
        tok = self.peek()
        if tok.kind != "eof":
            raise self.fail(f"unexpected {tok.text!r}", tok, ("operator", "end of input"))
        return value

    def expr(self, min_bp: int):
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind in ("plus", "minus"):
                bp = _ADD
            elif tok.kind in ("star", "slash") or tok.kind in _IMPLICIT_START:
                bp = _MUL
            elif tok.kind == "caret":
                raise self.fail("'^' must follow 'z', 'i', an integer or a parenthesized group", tok, ("operator",))
            else:
                return left
            if bp <= min_bp:
                return left
            if tok.kind in _IMPLICIT_START:
                right = self.expr(bp)
                left = left * right
                continue
            self.advance()
            right = self.expr(bp)
            if tok.kind == "plus":
                left = left + right
            elif tok.kind == "minus":
                left = left - right
            elif tok.kind == "star":
                left = left * right
            else:
                left = self.divide(left, right, tok)

    def divide(self, left, right, tok):
        if isinstance(right, Polynomial) and right.is_zero() or isinstance(right, RationalFunction) and right.num.is_zero():
            raise self.fail("division by zero", tok, ())
        if isinstance(right, Polynomial) and right.is_constant():
            if isinstance(left, Polynomial):
                return left.scale(1 / right.lc)
        return RationalFunction.of(left) / right

    def prefix(self):
        tok = self.peek()
        if tok.kind == "minus":
            self.advance()
            return -self.expr(_PREFIX)
        if tok.kind == "plus":
            self.advance()
            return self.expr(_PREFIX)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "caret":
            self.advance()
            tok = self.peek()
            if tok.kind != "int":
                raise self.fail("exponent must be an unsigned integer literal", tok, ("unsigned integer",))
            self.advance()
            n = int(tok.text)
            if n > MAX_EXPONENT:
                raise self.fail(f"exponent {n} exceeds {MAX_EXPONENT}", tok, ())
            if self.peek().kind == "caret":
                raise self.fail("chained exponents need parentheses", self.peek(), ("operator",))
            base = base**n
        return base

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            return Polynomial.constant(int(tok.text))
        if tok.kind == "z":
            return Polynomial.z()
        if tok.kind == "i":
            return Polynomial.constant(I)
        if tok.kind == "lparen":
            inner = self.expr(0)
            close = self.advance()
            if close.kind != "rparen":
                raise self.fail(f"unexpected {close.text or 'end of input'!r}", close, ("')'",))
            return inner
        raise self.fail(f"unexpected {tok.text or 'end of input'!r}", tok, ("integer", "'z'", "'i'", "'('"))


@dataclass(frozen=True)
class ParsedExpression:
    source: str
    value: Polynomial | RationalFunction

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.value, Polynomial)


def parse_expr(text: str) -> ParsedExpression:
    """Parse ``text``; polynomial results come back as ``Polynomial``."""
    value = _Parser(text).parse()
    if isinstance(value, RationalFunction) and value.is_polynomial():
        value = value.as_polynomial()
    return ParsedExpression(text, value)


def parse_poly(text: str) -> Polynomial:
    parsed = parse_expr(text)
    if not parsed.is_polynomial:
        raise ParseError("expected a polynomial, got a rational function", text, 0, ("polynomial",))
    return parsed.value


def parse_rational(text: str) -> RationalFunction:
    return RationalFunction.of(parse_expr(text).value)
