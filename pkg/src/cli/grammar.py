"""Expression grammar for `dua eval` and scalar arguments.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' uint)*
    atom   := int | 'lambda' | 'mu' | 'u' | 'w' | 'd' | 'sqrt' '(' ['-'] int ')' | '(' expr ')'

Parsing is a Pratt loop over the binding powers below. The tree is then
evaluated either as a Scalar (classify arguments) or as an NcPoly in a
presentation (eval); `/` only ever divides by a scalar.
"""

import re
from dataclasses import dataclass

from loguru import logger

from src.errors import ParseError, UnsupportedField
from src.pbw.ncpoly import NcPoly
from src.pbw.presentation import Presentation
from src.scalars.fields import (
    QuadExt,
    RatFunc,
    Rational,
    Scalar,
    common_context,
    lift,
    squarefree_decomposition,
)

TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)
SCALAR_NAMES = {"lambda", "mu"}
GENERATOR_NAMES = {"u", "w", "d"}
ATOM_START = {"int", "lambda", "mu", "sqrt", "u", "w", "d", "(", "-"}

# left binding power of each infix operator
BINDING = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
PREFIX_MINUS = 30


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


@dataclass(frozen=True)
class Num:
    value: int
    offset: int


@dataclass(frozen=True)
class Name:
    name: str
    offset: int


@dataclass(frozen=True)
class Sqrt:
    radicand: int
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    offset: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    offset: int


Node = Num | Name | Sqrt | Neg | BinOp | Pow


def tokenize(source: str) -> list[Token]:
    """Split source into tokens, ending with an 'end' token.

    Raises:
        ParseError: at the first character no token starts with.
    """
    tokens: list[Token] = []
    position = 0
    while True:
        while position < len(source) and source[position].isspace():
            position += 1
        if position == len(source):
            tokens.append(Token("end", "", position))
            return tokens
        match = TOKEN_RE.match(source, position)
        if match is None:
            raise ParseError(source, position, f"unexpected character {source[position]!r}")
        kind = match.lastgroup
        start = match.start(kind)
        text = match.group(kind)
        if kind == "op":
            kind = text
        tokens.append(Token(kind, text, start))
        position = match.end()


class Parser:
    """Pratt parser over the token list of one expression."""

    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def error(self, message: str, expected: set[str] | None = None) -> ParseError:
        return ParseError(self.source, self.current.offset, message, expected)

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self.error(f"unexpected {self._describe(self.current)}", {kind})
        return self.advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)

    def parse(self) -> Node:
        node = self.expression(0)
        if self.current.kind != "end":
            raise self.error(
                f"unexpected {self._describe(self.current)}", set(BINDING) | {"end of input"}
            )
        return node

    def expression(self, min_binding: int) -> Node:
        left = self.prefix()
        while self.current.kind in BINDING and BINDING[self.current.kind] > min_binding:
            token = self.advance()
            if token.kind == "^":
                exponent = self.expect("int")
                left = Pow(left, int(exponent.text), token.offset)
                continue
            right = self.expression(BINDING[token.kind])
            left = BinOp(token.kind, left, right, token.offset)
        return left

    def prefix(self) -> Node:
        token = self.current
        match token.kind:
            case "int":
                self.advance()
                return Num(int(token.text), token.offset)
            case "-":
                self.advance()
                return Neg(self.expression(PREFIX_MINUS), token.offset)
            case "(":
                self.advance()
                node = self.expression(0)
                self.expect(")")
                return node
            case "name" if token.text == "sqrt":
                self.advance()
                self.expect("(")
                sign = -1 if self.current.kind == "-" else 1
                if sign < 0:
                    self.advance()
                radicand = self.expect("int")
                self.expect(")")
                return Sqrt(sign * int(radicand.text), token.offset)
            case "name" if token.text in SCALAR_NAMES | GENERATOR_NAMES:
                self.advance()
                return Name(token.text, token.offset)
            case "name":
                raise self.error(f"unknown name {token.text!r}", ATOM_START - {"-"})
        raise self.error(f"unexpected {self._describe(token)}", ATOM_START)


def parse(source: str) -> Node:
    """Parse source into an expression tree.

    Raises:
        ParseError: with line, column and the expected token set.
    """
    node = Parser(source).parse()
    logger.debug(f"parsed {source!r}")
    return node


def _sqrt(n: int) -> Scalar:
    if n == 0:
        return Rational(0)
    k, d = squarefree_decomposition(n)
    return Rational(k) if d == 1 else QuadExt(0, k, d)


def _combine(op: str, left: Scalar, right: Scalar) -> Scalar:
    context = common_context(left, right)
    left, right = lift(left, context), lift(right, context)
    match op:
        case "+":
            return left + right
        case "-":
            return left - right
        case "*":
            return left * right
    return left / right


def evaluate_scalar(node: Node, source: str = "") -> Scalar:
    """Evaluate a tree without generators.

    Raises:
        ParseError: if the tree mentions u, w or d.
        DivisionByZero: on division by zero.
        FieldMismatch: if two different quadratic fields meet.
    """
    match node:
        case Num(value=value):
            return Rational(value)
        case Name(name="lambda"):
            return RatFunc.lam()
        case Name(name="mu"):
            return RatFunc.mu()
        case Name(name=name, offset=offset):
            raise ParseError(source, offset, f"generator {name!r} in a scalar", {"scalar"})
        case Sqrt(radicand=radicand):
            return _sqrt(radicand)
        case Neg(operand=operand):
            return -evaluate_scalar(operand, source)
        case Pow(base=base, exponent=exponent):
            return evaluate_scalar(base, source) ** exponent
        case BinOp(op=op, left=left, right=right):
            return _combine(op, evaluate_scalar(left, source), evaluate_scalar(right, source))
    raise TypeError(f"unknown node {node!r}")


def evaluate(node: Node, presentation: Presentation, source: str = "") -> NcPoly:
    """Evaluate a tree to its normal form in presentation.

    Raises:
        PresentationMismatch: for a generator the presentation lacks.
        UnsupportedField: for sqrt, which QQ(lambda, mu) does not contain.
        ParseError: when dividing by a non-constant.
    """
    match node:
        case Num(value=value):
            return presentation.scalar(value)
        case Name(name="lambda"):
            return presentation.scalar(RatFunc.lam())
        case Name(name="mu"):
            return presentation.scalar(RatFunc.mu())
        case Name(name=name):
            return presentation.generator(name)
        case Sqrt(radicand=radicand):
            root = _sqrt(radicand)
            if isinstance(root, QuadExt):
                raise UnsupportedField(f"sqrt({radicand}) is not in {presentation.context}")
            return presentation.scalar(root)
        case Neg(operand=operand):
            return -evaluate(operand, presentation, source)
        case Pow(base=base, exponent=exponent):
            return evaluate(base, presentation, source) ** exponent
        case BinOp(op="/", left=left, right=right, offset=offset):
            divisor = evaluate(right, presentation, source)
            if divisor.degree() > 0:
                raise ParseError(source, offset, "division by a non-scalar", {"scalar"})
            constant = divisor.coefficient((0,) * presentation.ngens)
            return evaluate(left, presentation, source) / constant
        case BinOp(op=op, left=left, right=right):
            a, b = evaluate(left, presentation, source), evaluate(right, presentation, source)
            match op:
                case "+":
                    return a + b
                case "-":
                    return a - b
            return a * b
    raise TypeError(f"unknown node {node!r}")


def parse_scalar(text: str) -> Scalar:
    """A Scalar from text such as '5/2', '-1 + sqrt(-3)' or '1/mu'."""
    return evaluate_scalar(parse(text), text)


def eval_expression(text: str, presentation: Presentation) -> NcPoly:
    """Normal form of the expression in presentation."""
    return evaluate(parse(text), presentation, text)
