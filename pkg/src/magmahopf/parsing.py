"""Text form of polynomials.

Grammar::

    expr    := ["+"|"-"] term (("+"|"-") term)*
    term    := rat ["*" product] | product
    product := factor ["*" factor]
    factor  := ident ["^" int] | "(" expr ")" | "(" expr factor ")"
    rat     := int ["/" int]

``*`` is the non-associative product, so ``x*y*z`` is rejected.  Inside
parentheses two juxtaposed factors also multiply, which makes the printed
S-expression form ``(x (x y))`` valid input.  ``x^j`` means ``x(x(...x))``.
Identifiers: ``x`` (x_1), ``y`` (x_2) and ``x<n>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, mul
from .magma import ONE, format_monomial, power

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", *_linecol(text, bad))
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


def _linecol(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def variable_index(name: str) -> int:
    if name == "x":
        return 1
    if name == "y":
        return 2
    m = re.fullmatch(r"x(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1))
    raise KeyError(name)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, *_linecol(self.text, tok.pos))

    def expect(self, text: str, what: str | None = None) -> Token:
        tok = self.tok
        if tok.text != text or tok.kind == "eof":
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(f"expected {what or repr(text)}, found {found}")
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def starts_factor(self) -> bool:
        return self.tok.kind == "ident" or self.at("(")

    def parse(self) -> Poly:
        p = self.expr()
        if self.tok.kind != "eof":
            if self.at("*"):
                raise self.error("non-associative product requires explicit parentheses")
            raise self.error(f"expected '+', '-' or end of input, found {self.tok.text!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        simple = not (self.at("-") or self.at("+"))
        if self.at("-") or self.at("+"):
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
        total = self.term().scale(sign)
        while self.at("+") or self.at("-"):
            simple = False
            sign = -1 if self.tok.text == "-" else 1
            self.i += 1
            total = total + self.term().scale(sign)
        self.simple = simple
        return total

    def rat(self) -> Fraction:
        num = int(self.tok.text)
        self.i += 1
        if self.at("/"):
            self.i += 1
            if self.tok.kind != "int":
                raise self.error("malformed rational: expected an integer denominator")
            den = int(self.tok.text)
            if den == 0:
                raise self.error("malformed rational: zero denominator")
            self.i += 1
            return Fraction(num, den)
        return Fraction(num)

    def term(self) -> Poly:
        if self.tok.kind == "int":
            c = self.rat()
            if self.at("*"):
                self.i += 1
                return self.product().scale(c)
            return Poly.one().scale(c)
        return self.product()

    def product(self) -> Poly:
        left = self.factor()
        if self.at("*"):
            self.i += 1
            right = self.factor()
            if self.at("*"):
                raise self.error("non-associative product requires explicit parentheses")
            return mul(left, right)
        return left

    def factor(self) -> Poly:
        tok = self.tok
        if tok.kind == "ident":
            try:
                v = variable_index(tok.text)
            except KeyError:
                raise self.error(f"unknown variable {tok.text!r}") from None
            self.i += 1
            if self.at("^"):
                self.i += 1
                if self.tok.kind != "int":
                    raise self.error("expected an integer exponent")
                j = int(self.tok.text)
                self.i += 1
                return Poly.monomial(power(j, v))
            return Poly.monomial(power(1, v))
        if self.at("("):
            self.i += 1
            inner = self.expr()
            if self.starts_factor() and self.simple:
                inner = mul(inner, self.factor())
                if self.starts_factor():
                    raise self.error("non-associative product requires explicit parentheses")
            self.expect(")")
            return inner
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise self.error(f"expected a variable, number or '(', found {found}")


def parse(text: str) -> Poly:
    """Parse text into an exact :class:`Poly`; raises :class:`ParseError`."""
    return _Parser(text).parse()


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    """Inverse of :func:`parse`: terms in monomial order, S-expression monomials."""
    if not f:
        return "0"
    parts = []
    for m, c in f.items():
        mag = abs(c)
        if m is ONE:
            body = format_coeff(mag)
        elif mag == 1:
            body = format_monomial(m)
        else:
            body = f"{format_coeff(mag)}*{format_monomial(m)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_tensor(F) -> str:
    if not F:
        return "0"
    parts = []
    for (a, b), c in F.items():
        body = f"{format_monomial(a)} (x) {format_monomial(b)}"
        if abs(c) != 1:
            body = f"{format_coeff(abs(c))}*{body}"
        parts.append(("-" if c < 0 else "+") + " " + body if parts else ("-" if c < 0 else "") + body)
    return " ".join(parts)
