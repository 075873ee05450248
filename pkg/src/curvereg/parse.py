"""Text syntax for polynomials.

Accepted grammar (all inputs share it): integer coefficients, variables
x, y, z (projective) or u, v (local charts), `^` for powers, `*` optional
between factors, parentheses allowed, e.g. ``y^2*z - x^3 - x^2*z`` or
``3x^2y - (x - y)^2``.
"""

from __future__ import annotations

import re

from .field import QQ
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z])|(\^)|(\*)|(\+)|(-)|(\()|(\)))")

_VAR_INDEX = {
    3: {"x": 0, "y": 1, "z": 2},
    2: {"u": 0, "v": 1},
}


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str, nvars: int, field):
        self.text = text
        self.nvars = nvars
        self.field = field
        self.vars = _VAR_INDEX[nvars]
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.index = 0

    def _tokenize(self) -> None:
        pos = 0
        while pos < len(self.text):
            m = _TOKEN.match(self.text, pos)
            if not m or m.end() == pos:
                if self.text[pos:].strip():
                    raise ParseError(f"unexpected character {self.text[pos]!r}", pos)
                break
            pos = m.end()
            kinds = ("int", "var", "pow", "mul", "plus", "minus", "lpar", "rpar")
            for kind, val in zip(kinds, m.groups()):
                if val is not None:
                    self.tokens.append((kind, val, m.start()))
                    break

    def _peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else (None, None, len(self.text))

    def _next(self):
        tok = self._peek()
        self.index += 1
        return tok

    def parse(self) -> Polynomial:
        p = self._expr()
        kind, val, pos = self._peek()
        if kind is not None:
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def _expr(self) -> Polynomial:
        kind, _, _ = self._peek()
        negate = False
        if kind in ("plus", "minus"):
            negate = kind == "minus"
            self._next()
        p = self._term()
        if negate:
            p = -p
        while True:
            kind, _, _ = self._peek()
            if kind == "plus":
                self._next()
                p = p + self._term()
            elif kind == "minus":
                self._next()
                p = p - self._term()
            else:
                return p

    def _term(self) -> Polynomial:
        p = self._factor()
        while True:
            kind, _, _ = self._peek()
            if kind == "mul":
                self._next()
                p = p * self._factor()
            elif kind in ("int", "var", "lpar"):
                # implicit multiplication: 2x, x^2y, 3(x+y)
                p = p * self._factor()
            else:
                return p

    def _factor(self) -> Polynomial:
        kind, val, pos = self._next()
        if kind == "int":
            base = Polynomial.constant(int(val), self.nvars, self.field)
        elif kind == "var":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", pos)
            base = Polynomial.variable(self.vars[val], self.nvars, self.field)
        elif kind == "lpar":
            base = self._expr()
            kind2, _, pos2 = self._next()
            if kind2 != "rpar":
                raise ParseError("missing closing parenthesis", pos2)
        elif kind == "minus":
            return -self._factor()
        else:
            raise ParseError(f"expected a factor, got {val!r}", pos)
        kind, _, _ = self._peek()
        if kind == "pow":
            self._next()
            kind2, val2, pos2 = self._next()
            if kind2 != "int":
                raise ParseError("exponent must be a non-negative integer", pos2)
            base = base ** int(val2)
        return base


def parse_poly(text: str, nvars: int = 3, field=QQ) -> Polynomial:
    """Parse a polynomial in x,y,z (nvars=3) or u,v (nvars=2)."""
    if nvars not in _VAR_INDEX:
        raise ValueError("only 2- and 3-variable rings have a text syntax")
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    return _Parser(text, nvars, field).parse()
