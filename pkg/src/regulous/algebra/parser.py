"""
Expression grammar shared by polynomials, rational functions, arcs and certificate files.

Top-down operator precedence (Pratt) parser producing a small AST. Binding powers:

    + -      10   (left associative)
    * /      20   (left associative)
    unary -  25
    ^        30   (exponent must be an integer literal)

The EBNF and the canonical serialization rules are documented in GRAMMAR.md.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, Union

from regulous.algebra.poly import Poly
from regulous.algebra.ratfun import RatFun
from regulous.config import EXPONENT_CAP
from regulous.errors import ExponentOverflowError, ParseError, UnknownVariableError, ZeroDenominatorError

# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    index: int
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    position: int = field(default=0, compare=False)


Expr = Union[Num, Var, Neg, BinOp, Pow]

# --- tokens ---------------------------------------------------------------

_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))", re.DOTALL)

_BINDING_POWER = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_UNARY_BINDING = 25


@dataclass(frozen=True)
class _Token:
    kind: str  # num | name | op | end
    text: str
    position: int


def _tokenize(text: str) -> Iterator[_Token]:
    for match in _TOKEN_PATTERN.finditer(text):
        number, name, symbol = match.groups()
        if number is not None:
            yield _Token("num", number, match.start(1))
        elif name is not None:
            yield _Token("name", name, match.start(2))
        elif symbol is not None:
            if symbol not in "+-*/^()":
                raise ParseError(f"unexpected character '{symbol}'", match.start(3))
            yield _Token("op", symbol, match.start(3))
    yield _Token("end", "", len(text))


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = list(_tokenize(text))
        self.index = 0
        self.variables = {name: i for i, name in enumerate(names)}

    @property
    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def parse(self) -> Expr:
        expr = self.expression(0)
        token = self.peek
        if token.kind != "end":
            raise ParseError(f"unexpected '{token.text}'", token.position)
        return expr

    def expression(self, rbp: int) -> Expr:
        left = self.nud(self.advance())
        while rbp < self.left_binding(self.peek):
            left = self.led(self.advance(), left)
        return left

    @staticmethod
    def left_binding(token: _Token) -> int:
        if token.kind != "op":
            return 0
        return _BINDING_POWER.get(token.text, 0)

    def nud(self, token: _Token) -> Expr:
        if token.kind == "num":
            return Num(Fraction(int(token.text)), token.position)
        if token.kind == "name":
            if token.text not in self.variables:
                raise UnknownVariableError(token.text, token.position)
            return Var(token.text, self.variables[token.text], token.position)
        if token.kind == "op":
            if token.text == "(":
                inner = self.expression(0)
                closing = self.advance()
                if closing.text != ")" or closing.kind != "op":
                    raise ParseError("expected ')'", closing.position)
                return inner
            if token.text == "-":
                return Neg(self.expression(_UNARY_BINDING), token.position)
            if token.text == "+":
                return self.expression(_UNARY_BINDING)
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.position)
        raise ParseError(f"unexpected '{token.text}'", token.position)

    def led(self, token: _Token, left: Expr) -> Expr:
        if token.text == "^":
            exponent = self.advance()
            if exponent.kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal", exponent.position)
            value = int(exponent.text)
            if value > EXPONENT_CAP:
                raise ExponentOverflowError(value, EXPONENT_CAP, exponent.position)
            if self.peek.kind == "op" and self.peek.text == "^":
                raise ParseError("chained exponents need parentheses", self.peek.position)
            return Pow(left, value, token.position)
        right = self.expression(_BINDING_POWER[token.text])
        return BinOp(token.text, left, right, token.position)


# --- public entry points ----------------------------------------------------


def parse_expr(text: str, names: Sequence[str]) -> Expr:
    """Parses text over the ordered variable names into an expression tree."""
    return _Parser(text, names).parse()


def to_poly(expr: Expr, names: Sequence[str]) -> Poly:
    """Evaluates an expression tree in Q[names]; division only by nonzero constants."""
    match expr:
        case Num(value=value):
            return Poly.const(names, value)
        case Var(index=index):
            return Poly.var(names, index)
        case Neg(operand=operand):
            return -to_poly(operand, names)
        case Pow(base=base, exponent=exponent):
            return to_poly(base, names) ** exponent
        case BinOp(op="/", left=left, right=right, position=position):
            divisor = to_poly(right, names)
            if not divisor.is_constant:
                raise ParseError("division by a non-constant is not a polynomial", position)
            if divisor.is_zero:
                raise ZeroDenominatorError(f"division by zero at position {position}")
            return to_poly(left, names).scale(1 / divisor.constant_value())
        case BinOp(op=op, left=left, right=right):
            a, b = to_poly(left, names), to_poly(right, names)
            return a + b if op == "+" else a - b if op == "-" else a * b
    raise TypeError(f"not an expression node: {expr!r}")


def to_ratfun(expr: Expr, names: Sequence[str]) -> RatFun:
    """Evaluates an expression tree in the field Q(names)."""
    match expr:
        case Num() | Var():
            return RatFun(to_poly(expr, names))
        case Neg(operand=operand):
            return -to_ratfun(operand, names)
        case Pow(base=base, exponent=exponent):
            return to_ratfun(base, names) ** exponent
        case BinOp(op=op, left=left, right=right, position=position):
            a, b = to_ratfun(left, names), to_ratfun(right, names)
            match op:
                case "+":
                    return a + b
                case "-":
                    return a - b
                case "*":
                    return a * b
                case _:
                    if b.is_zero:
                        raise ZeroDenominatorError(f"division by the zero function at position {position}")
                    return a / b
    raise TypeError(f"not an expression node: {expr!r}")


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    return to_poly(parse_expr(text, names), names)


def parse_ratfun(text: str, names: Sequence[str]) -> RatFun:
    return to_ratfun(parse_expr(text, names), names)


def parse_vars(text: str) -> tuple[str, ...]:
    """Splits a comma separated variable list ("x,y,z")."""
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    if not names:
        raise ParseError("empty variable list", 0)
    for i, name in enumerate(names):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise ParseError(f"invalid variable name '{name}'", text.find(name))
        if name in names[:i]:
            raise ParseError(f"duplicate variable '{name}'", text.find(name))
    return names
