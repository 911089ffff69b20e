"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('-'|'+') factor | base ('^' nat)?
    base   := nat ('/' nat)? | ident | '(' expr ')'

Whitespace is ignored; ``**`` is accepted as a synonym for ``^``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly
from .ring import RingSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("ident", m.group(2), start))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: RingSpec):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "num":
            self.error(f"expected {value!r}", tok)

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            neg = self.take()[1] == "-"
            f = self.factor()
            return -f if neg else f
        b = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[:2] == ("op", "-"):
                self.error("negative exponent")
            if tok[0] != "num":
                self.error("expected a natural-number exponent")
            self.take()
            b = b ** int(tok[1])
        return b

    def base(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            num = int(val)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                dtok = self.take()
                if dtok[0] != "num":
                    self.error("expected a denominator", dtok)
                if int(dtok[1]) == 0:
                    self.error("division by zero", dtok)
                return Poly.constant(self.ring, Fraction(num, int(dtok[1])))
            return Poly.constant(self.ring, num)
        if kind == "ident":
            if val not in self.ring.variables:
                self.error(f"unknown variable {val!r}", tok)
            return Poly.var(self.ring, val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_poly(text: str, ring: RingSpec) -> Poly:
    p = _Parser(text, ring)
    if p.peek()[0] == "end":
        p.error("empty expression")
    out = p.expr()
    if p.peek()[0] != "end":
        p.error(f"unexpected token {p.peek()[1]!r}")
    return out
