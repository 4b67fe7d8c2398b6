"""Parser for the plain-text scalar grammar used by ``--assign`` and config files.

See ``docs/grammar.md`` for the EBNF.  Expressions evaluate in a domain:
``parse_scalar("(q - q^-1)/(u*q - 1/(u*q))")`` returns a symbolic
:class:`~qreflect.field.Scalar`; ``parse_constant`` additionally requires the
result to be a Gaussian rational constant.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import GaussianRational, SymbolicDomain

__all__ = ["tokenize", "parse_scalar", "parse_constant", "parse_assignment"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", int(num), m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        elif op in "+-*/^()":
            out.append(("op", op, m.start(3)))
        else:
            raise ParseError(f"unexpected character {op!r} at {m.start(3)}")
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, domain):
        self.toks = tokenize(text)
        self.k = 0
        self.d = domain

    def peek(self):
        return self.toks[self.k]

    def take(self, value=None):
        tok = self.toks[self.k]
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r} at {tok[2]}, found {tok[1]!r}")
        self.k += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero")
                acc = acc / rhs
        return acc

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            sign = 1
            if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
                sign = -1 if self.take()[1] == "-" else 1
            tok = self.take()
            if tok[0] != "int":
                raise ParseError(f"exponent must be an integer at {tok[2]}")
            n = sign * tok[1]
            if n < 0 and not base:
                raise ParseError("zero raised to a negative power")
            return base**n
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.d.const(val)
        if kind == "name":
            return self.d.i if val == "i" else self.d.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {val if val is not None else 'end of input'!r} at {pos}")


def parse_scalar(text: str, domain=None):
    if not text or not text.strip():
        raise ParseError("empty expression")
    p = _Parser(text, domain or SymbolicDomain())
    val = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r} at {tok[2]}")
    return val


def parse_constant(text: str) -> GaussianRational:
    val = parse_scalar(text)
    if not val.is_constant():
        raise ParseError(f"{text!r} is not a constant (variables {sorted(val.variables())})")
    return val.constant_value()


def parse_assignment(text: str):
    """``name=expr`` with a constant right-hand side."""
    if "=" not in text:
        raise ParseError(f"expected name=value, got {text!r}")
    name, rhs = (t.strip() for t in text.split("=", 1))
    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name) or name == "i":
        raise ParseError(f"bad variable name {name!r}")
    return name, parse_constant(rhs)
