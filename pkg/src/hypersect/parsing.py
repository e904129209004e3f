"""Recursive-descent parser for polynomial text.

Grammar (whitespace insignificant):

    expression := ('+'|'-')? term (('+'|'-') term)*
    term       := coefficient ('*' factor)* | factor ('*' factor)*
    factor     := variable ('^' integer)?
    variable   := 'x' integer
    coefficient:= integer | integer '/' integer

Variables are x0..x{nvars-1}.  The optional leading sign is accepted so
that every canonical printout (which may open with a negative term over Q)
parses back to the same polynomial.  Coefficients are reduced into the
field, so '5' over F_3 means 2 and '1/2' over F_7 means 4.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError, UnknownVariable
from .fields import FieldSpec
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(x[0-9]+)|([0-9]+)|([+\-*/^])|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        var, num, op, bad = m.groups()
        start = m.end() - len(m.group().lstrip())
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r}", start)
        if var is not None:
            tokens.append(("var", var, start))
        elif num is not None:
            tokens.append(("int", num, start))
        else:
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int, field: FieldSpec):
        self.tokens = _tokenize(text)
        self.index = 0
        self.nvars = nvars
        self.field = field

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_int(self) -> tuple[int, int]:
        kind, text, pos = self.advance()
        if kind != "int":
            raise ParseError(f"expected an integer, found {text or 'end of input'!r}", pos)
        return int(text), pos

    def parse(self) -> Polynomial:
        total = Polynomial.zero(self.field, self.nvars)
        negate = False
        kind, text, pos = self.peek()
        if kind == "op" and text in "+-":
            self.advance()
            negate = text == "-"
        while True:
            term = self.term()
            total = total - term if negate else total + term
            kind, text, pos = self.peek()
            if kind == "end":
                return total
            if kind == "op" and text in "+-":
                self.advance()
                negate = text == "-"
                continue
            raise ParseError(f"expected '+' or '-', found {text!r}", pos)

    def term(self) -> Polynomial:
        kind, text, pos = self.peek()
        exponents = [0] * self.nvars
        if kind == "int":
            coeff = self.coefficient()
        elif kind == "var":
            coeff = self.field.one()
            self.factor(exponents)
        else:
            raise ParseError(f"expected a term, found {text or 'end of input'!r}", pos)
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                self.factor(exponents)
            else:
                return Polynomial.from_terms(self.field, self.nvars, {tuple(exponents): coeff})

    def coefficient(self):
        num, pos = self.expect_int()
        kind, text, _ = self.peek()
        if kind == "op" and text == "/":
            self.advance()
            den, dpos = self.expect_int()
            if den == 0:
                raise ParseError("zero denominator", dpos)
            try:
                return self.field.scalar(Fraction(num, den))
            except DivisionByZero:
                raise ParseError(
                    f"denominator {den} is not invertible in {self.field}", dpos
                ) from None
        return self.field.scalar(num)

    def factor(self, exponents: list[int]) -> None:
        kind, text, pos = self.advance()
        if kind != "var":
            raise ParseError(f"expected a variable, found {text or 'end of input'!r}", pos)
        index = int(text[1:])
        if index >= self.nvars:
            raise UnknownVariable(
                f"variable {text} outside x0..x{self.nvars - 1}", pos
            )
        exp = 1
        kind, op, _ = self.peek()
        if kind == "op" and op == "^":
            self.advance()
            exp, _ = self.expect_int()
        exponents[index] += exp


def parse_poly(text: str, nvars: int, field: FieldSpec) -> Polynomial:
    """Parse polynomial text into canonical form; ParseError has a position."""
    if nvars < 1:
        raise ParseError("need at least one variable", None)
    return _Parser(text, nvars, field).parse()
