"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insensitive, no implicit multiplication):

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := base ("^" nonneg-int)?
    base   := ident | integer | integer "/" integer | "(" expr ")" | "-" base
    ident  := "X" | "Y" | "Z" | "T" | "r" | "m"
"""

from __future__ import annotations

from fractions import Fraction

from .nf import NFElem, NF_R
from .mpoly import MPoly, VAR_INDEX


class ParseError(ValueError):
    """Syntax error with position and the expected token set."""

    def __init__(self, offset: int, expected, found: str, message: str | None = None):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.found = found
        msg = message or f"at offset {offset}: expected one of {', '.join(self.expected)}; found {found!r}"
        super().__init__(msg)


class UnknownIdentifierError(ParseError):
    def __init__(self, offset: int, name: str):
        self.name = name
        super().__init__(offset, ("X", "Y", "Z", "T", "r", "m"), name,
                         f"at offset {offset}: unknown identifier {name!r}")


_PUNCT = ("+", "-", "*", "^", "/", "(", ")")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in _PUNCT:
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("ident", text[i:j], i))
                i = j
                continue
            raise ParseError(i, ("expression",), ch)
        self.tokens.append(("end", "", n))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _Tokenizer(text).tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], (kind,), tok[1] or "end of input")
        return self.advance()

    def parse(self) -> MPoly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], ("+", "-", "*", "^", "end of input"), tok[1])
        return value

    def expr(self) -> MPoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MPoly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> MPoly:
        # unary minus binds looser than "^" so that -X^2 means -(X^2),
        # matching standard precedence and keeping printing round-trippable
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        value = self.base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            value = value ** int(tok[1])
        return value

    def base(self) -> MPoly:
        tok = self.peek()
        kind, text, off = tok
        if kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if kind == "int":
            self.advance()
            num = int(text)
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError(den_tok[2], ("nonzero integer",), den_tok[1])
                return MPoly.constant(Fraction(num, den))
            return MPoly.constant(num)
        if kind == "ident":
            self.advance()
            if text == "r":
                return MPoly.constant(NF_R)
            if text in VAR_INDEX:
                return MPoly.var(text)
            raise UnknownIdentifierError(off, text)
        raise ParseError(off, ("identifier", "integer", "(", "-"), text or "end of input")


def parse_poly(text: str) -> MPoly:
    return _Parser(text).parse()


def parse_scalar(text: str) -> NFElem:
    """Parse an expression that must evaluate to an element of Q(r)."""
    p = parse_poly(text)
    return p.as_nfelem()
