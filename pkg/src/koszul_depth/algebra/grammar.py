"""Parser for the textual polynomial grammar.

Integer literals, identifiers ``[A-Za-z][A-Za-z0-9_]*``, the binary operators
``+ - * ^`` with ``^`` binding tightest, unary minus, parentheses, and
insignificant whitespace.  A literal of the form ``INT/INT`` denotes a
rational constant, which keeps printed rational coefficients parseable.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))
        self.position = position


class UnknownVariableError(PolySyntaxError):
    pass


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, ring, params):
        self.text = text
        self.ring = ring
        self.params = params or {}
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        ring = self.ring
        if kind == "int":
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "int":
                    self.error("expected integer denominator", den)
                return ring.constant(ring.field.from_ratio(int(val), int(den[1])))
            return ring.constant(int(val))
        if kind == "id":
            if val in self.params:
                return ring.constant(self.params[val])
            try:
                return ring.gen(ring.index(val))
            except KeyError:
                raise UnknownVariableError(f"unknown variable {val!r}", pos, self.text) from None
        if (kind, val) == ("op", "("):
            value = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return value
        self.error(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_poly(text: str, ring, params: dict | None = None):
    """Parse ``text`` into a normalised polynomial of ``ring``.

    ``ring`` may be a ``PolynomialRing`` or a quotient ``Ring`` (the result is
    then a representative in the ambient polynomial ring, not reduced).
    ``params`` binds extra identifiers to integer constants, which is how
    parametric presentation templates are instantiated.
    """
    poly_ring = getattr(ring, "poly_ring", ring)
    return _Parser(text, poly_ring, params).parse()
