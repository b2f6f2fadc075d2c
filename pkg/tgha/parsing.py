"""Literal, group-word and algebra-expression grammar.

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | power
    power := atom ("^" ["-"] INT)?
    atom  := INT ["/" INT] | "z" | "v" INT | "g" INT | "t" | "e" | "(" expr ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .algebra import AlgebraElement, NormalFormAlgebra
from .const import IDENTITY_FORM_WORD, IDENTITY_WORD
from .cyclo import ONE, Cyclotomic, root_of_unity
from .exceptions import ParseError
from .matgroup import FiniteMatrixGroup

_TOKEN = re.compile(r"\s*(?:(\d+)|([vg])(\d+)|([zte])|([-+*/^()]))")


@dataclass(frozen=True, slots=True)
class Token:
    """One lexical token; kind is num, var, gen, sym or op."""

    kind: str
    text: str
    number: int = 0


def tokenize(text: str, source: str = "<input>", line: int = 0) -> list[Token]:
    """Split an expression into tokens."""
    tokens: list[Token] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            raise ParseError(f"unexpected character {stripped[position:].lstrip()[:1]!r}", source, line)
        number, letter, index, symbol, op = match.groups()
        if number is not None:
            tokens.append(Token("num", number, int(number)))
        elif letter is not None:
            tokens.append(Token("var" if letter == "v" else "gen", letter + index, int(index)))
        elif symbol is not None:
            tokens.append(Token("sym", symbol))
        else:
            tokens.append(Token("op", op))
        position = match.end()
    return tokens


Node = tuple


class _Parser:
    def __init__(self, text: str, source: str, line: int) -> None:
        self.tokens = tokenize(text, source, line)
        self.position = 0
        self.source = source
        self.line = line

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.source, self.line)

    def peek(self) -> Token | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def accept(self, op: str) -> bool:
        token = self.peek()
        if token is not None and token.kind == "op" and token.text == op:
            self.position += 1
            return True
        return False

    def expect_number(self) -> int:
        token = self.peek()
        if token is None or token.kind != "num":
            raise self.error("expected an integer")
        self.position += 1
        return token.number

    def parse(self) -> Node:
        if not self.tokens:
            raise self.error("empty expression")
        node = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.accept("+"):
                node = ("add", node, self.term())
            elif self.accept("-"):
                node = ("add", node, ("neg", self.term()))
            else:
                return node

    def term(self) -> Node:
        node = self.unary()
        while self.accept("*"):
            node = ("mul", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.accept("-"):
            return ("neg", self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.accept("^"):
            sign = -1 if self.accept("-") else 1
            node = ("pow", node, sign * self.expect_number())
        return node

    def atom(self) -> Node:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of expression")
        self.position += 1
        match token.kind:
            case "num":
                if self.accept("/"):
                    denominator = self.expect_number()
                    if not denominator:
                        raise self.error("zero denominator")
                    return ("num", Fraction(token.number, denominator))
                return ("num", Fraction(token.number))
            case "var":
                return ("var", token.number)
            case "gen":
                return ("gen", token.number)
            case "sym":
                return (token.text,)
        if token.text == "(":
            node = self.expr()
            if not self.accept(")"):
                raise self.error("missing ')'")
            return node
        raise self.error(f"unexpected {token.text!r}")


def parse_expression(text: str, source: str = "<input>", line: int = 0) -> Node:
    """Parse an expression into a syntax tree."""
    return _Parser(text, source, line).parse()


def _scalar(node: Node, conductor: int, source: str, line: int) -> Cyclotomic:
    match node:
        case ("num", value):
            return Cyclotomic.rational(value, conductor)
        case ("z",):
            return root_of_unity(conductor, 1)
        case ("e",):
            return ONE
        case ("neg", inner):
            return -_scalar(inner, conductor, source, line)
        case ("add", left, right):
            return _scalar(left, conductor, source, line) + _scalar(right, conductor, source, line)
        case ("mul", left, right):
            return _scalar(left, conductor, source, line) * _scalar(right, conductor, source, line)
        case ("pow", base, exponent):
            value = _scalar(base, conductor, source, line)
            if not value and exponent < 0:
                raise ParseError("negative power of zero", source, line)
            return value**exponent
    raise ParseError(f"'{node[0]}' is not allowed in a scalar literal", source, line)


def parse_literal(text: str, conductor: int, source: str = "<input>", line: int = 0) -> Cyclotomic:
    """Parse a cyclotomic literal such as 1/2, -z^2 or 1 + 2*z^-1 over zeta_conductor."""
    return _scalar(parse_expression(text, source, line), conductor, source, line)


def _invert(algebra: NormalFormAlgebra, element: AlgebraElement) -> AlgebraElement | None:
    if len(element.terms) != 1:
        return None
    ((mono, coeff),) = element.terms.items()
    if any(mono.exps) or mono.tpow:
        return None
    g_inv = algebra.group.inv(mono.group)
    factor = (coeff * algebra.cocycle(mono.group, g_inv)).inverse()
    return algebra.group_element(g_inv, factor)


def evaluate(algebra: NormalFormAlgebra, node: Node, source: str = "<input>", line: int = 0) -> AlgebraElement:
    """Evaluate a syntax tree to a normal form in the algebra."""
    conductor = algebra.group.conductor
    match node:
        case ("num", _) | ("z",) | ("e",):
            return algebra.group_element(0, _scalar(node, conductor, source, line))
        case ("var", index):
            if not 1 <= index <= algebra.dim:
                raise ParseError(f"no variable v{index} in dimension {algebra.dim}", source, line)
            return algebra.variable(index - 1)
        case ("gen", index):
            generators = algebra.group.generators
            if not 1 <= index <= len(generators):
                raise ParseError(f"no generator g{index}", source, line)
            return algebra.group_element(generators[index - 1])
        case ("t",):
            return algebra.t()
        case ("neg", inner):
            return -evaluate(algebra, inner, source, line)
        case ("add", left, right):
            return evaluate(algebra, left, source, line) + evaluate(algebra, right, source, line)
        case ("mul", left, right):
            return algebra.multiply(
                evaluate(algebra, left, source, line), evaluate(algebra, right, source, line)
            )
        case ("pow", base, exponent):
            element = evaluate(algebra, base, source, line)
            if exponent < 0:
                inverse = _invert(algebra, element)
                if inverse is None:
                    raise ParseError("only scalars and group elements have negative powers", source, line)
                element, exponent = inverse, -exponent
            result = algebra.one()
            for _ in range(exponent):
                result = algebra.multiply(result, element)
            return result
    raise ParseError(f"cannot evaluate {node!r}", source, line)


def parse_element(algebra: NormalFormAlgebra, text: str, source: str = "<input>", line: int = 0) -> AlgebraElement:
    """Parse and evaluate an algebra expression such as v2*v1 or g1*g2."""
    return evaluate(algebra, parse_expression(text, source, line), source, line)


def resolve_word(group: FiniteMatrixGroup, text: str, source: str = "<input>", line: int = 0) -> int:
    """Return the element named by a word like g1*g2^2, by e or identity, or by a raw index."""
    word = text.strip()
    if word in (IDENTITY_WORD, IDENTITY_FORM_WORD):
        return 0
    if word.isdigit():
        index = int(word)
        if index >= group.order:
            raise ParseError(f"element index {index} out of range", source, line)
        return index

    def walk(node: Node) -> int:
        match node:
            case ("gen", index):
                if not 1 <= index <= len(group.generators):
                    raise ParseError(f"no generator g{index}", source, line)
                return group.generators[index - 1]
            case ("e",):
                return 0
            case ("mul", left, right):
                return group.mul(walk(left), walk(right))
            case ("pow", base, exponent):
                element = walk(base)
                if exponent < 0:
                    element, exponent = group.inv(element), -exponent
                result = 0
                for _ in range(exponent):
                    result = group.mul(result, element)
                return result
        raise ParseError(f"'{word}' is not a group word", source, line)

    return walk(parse_expression(word, source, line))
