"""Constant expressions for closed-form right-hand sides.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ['-'] atom ['^' integer]
    atom   := number | 'pi' | func '(' expr ')' | '(' expr ')'
    func   := 'log' | 'sqrt' | 'atan' | 'acot'
    number := integer | decimal

A rational such as ``3/4`` is read as a division of two integer literals.
Unary minus binds tighter than ``^``, so ``-2^2`` is 4.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, LehmerError

FUNCTIONS = ("log", "sqrt", "atan", "acot")
CONSTANTS = ("pi",)


class ExprSyntaxError(LehmerError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifierError(ExprSyntaxError):
    pass


@dataclass(frozen=True)
class Number:
    text: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.text)


@dataclass(frozen=True)
class Constant:
    name: str


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            found = "end of input" if kind == "end" else repr(text)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos)

    def parse(self):
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {text!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        negate = False
        if self.peek()[:2] == ("op", "-"):
            self.take()
            negate = True
        node = self.atom()
        if negate:
            node = Neg(node)
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            kind, text, pos = self.take()
            if kind != "num" or not text.isdigit():
                raise ExprSyntaxError("exponent must be an integer", pos)
            node = Power(node, sign * int(text))
        return node

    def atom(self):
        kind, text, pos = self.take()
        if kind == "num":
            return Number(text)
        if kind == "name":
            if text in CONSTANTS:
                return Constant(text)
            if text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(text, arg)
            raise UnknownIdentifierError(f"unknown identifier {text!r}", pos)
        if text == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise ExprSyntaxError(f"expected a number, constant, function or '(', found {found}", pos)


def parse_const_expr(text: str):
    """Parse ``text`` into an expression tree."""
    return _Parser(text).parse()


def _acot(x: float) -> float:
    if x <= 0:
        raise DomainError(f"acot is restricted to positive arguments, got {x}")
    return math.atan(1.0 / x)


def _log(x: float) -> float:
    if x <= 0:
        raise DomainError(f"log of non-positive value {x}")
    return math.log(x)


def _sqrt(x: float) -> float:
    if x < 0:
        raise DomainError(f"sqrt of negative value {x}")
    return math.sqrt(x)


_EVAL_FUNCS = {"log": _log, "sqrt": _sqrt, "atan": math.atan, "acot": _acot}


def evaluate(node) -> float:
    """Evaluate an expression tree in double precision."""
    if isinstance(node, Number):
        return float(node.value)
    if isinstance(node, Constant):
        return math.pi
    if isinstance(node, Call):
        return _EVAL_FUNCS[node.func](evaluate(node.arg))
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Power):
        return evaluate(node.base) ** node.exponent
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise ZeroDivisionError("division by zero in constant expression")
        return a / b
    raise TypeError(f"not an expression node: {node!r}")


def serialize(node) -> str:
    """Fully parenthesized text that parses back to the same tree."""
    if isinstance(node, Number):
        return node.text
    if isinstance(node, Constant):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({serialize(node.arg)})"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand)}"
    if isinstance(node, Power):
        return f"{_wrap(node.base)}^{node.exponent}"
    if isinstance(node, BinOp):
        return f"({serialize(node.left)} {node.op} {serialize(node.right)})"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node) -> str:
    # Neg and Power need an atom underneath; parenthesize anything else
    text = serialize(node)
    if isinstance(node, (Number, Constant, Call, BinOp)):
        return text
    return f"({text})"


def const_value(text: str) -> float:
    return evaluate(parse_const_expr(text))
