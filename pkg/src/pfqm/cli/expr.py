"""Expression front end: tokenizer, recursive-descent parser and printer.

Grammar (``^`` and ``**`` are synonyms, exponents are integers)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") ("+" | "-")? INT)?
    atom   := INT | IDENT | "sqrt" "(" ("-")? INT ")" | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import QQ, FunctionField, QuadExt, QuadraticField, RationalFunction, squarefree_part
from ..algebra.printing import format_ratfunc
from ..errors import AlgebraError, ParseError

ALIASES = {"l": "λ", "lambda": "λ", "z": "ζ", "zeta": "ζ", "eta": "η"}


def canonical_name(name: str) -> str:
    return ALIASES.get(name, name)


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Sqrt:
    d: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([^\W\d]\w*))", re.UNICODE)


def tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            op = "^" if m.group(2) == "**" else m.group(2)
            tokens.append(("op", op, start))
        else:
            tokens.append(("ident", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            arg = self.unary()
            return Neg(arg) if val == "-" else arg
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            paren = False
            if self.peek()[:2] == ("op", "("):
                self.take()
                paren = True
                kind, val, pos = self.peek()
                if kind == "op" and val in "+-":
                    self.take()
                    sign *= -1 if val == "-" else 1
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer", pos)
            if paren:
                self.expect(")")
            node = Pow(node, sign * val)
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(val)
        if kind == "ident":
            if val == "sqrt":
                self.expect("(")
                sign = 1
                if self.peek()[:2] == ("op", "-"):
                    self.take()
                    sign = -1
                k, v, p = self.take()
                if k != "int":
                    raise ParseError("sqrt() takes an integer", p)
                self.expect(")")
                return Sqrt(sign * v)
            return Var(canonical_name(val))
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_ast(text: str):
    return _Parser(text).parse()


def _identifiers(node, out):
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, Sqrt):
        out.add(("sqrt", node.d))
    elif isinstance(node, Neg):
        _identifiers(node.arg, out)
    elif isinstance(node, BinOp):
        _identifiers(node.left, out)
        _identifiers(node.right, out)
    elif isinstance(node, Pow):
        _identifiers(node.base, out)
    return out


def _ext_of(node) -> int | None:
    ds = {squarefree_part(i[1])[1] for i in _identifiers(node, set()) if isinstance(i, tuple)}
    ds.discard(1)
    if len(ds) > 1:
        raise ParseError(f"more than one quadratic extension: {sorted(ds)}")
    return ds.pop() if ds else None


def evaluate(node, env: dict, field):
    """Evaluate an AST in ``field`` with identifiers bound by ``env``."""
    if isinstance(node, Num):
        return field.coerce(node.value)
    if isinstance(node, Var):
        if node.name not in env:
            raise ParseError(f"unknown identifier {node.name!r}")
        return env[node.name]
    if isinstance(node, Sqrt):
        k, d = squarefree_part(node.d)
        if d == 1:
            return field.coerce(k)
        return field.coerce(QuadExt(0, k, d))
    if isinstance(node, Neg):
        return -evaluate(node.arg, env, field)
    if isinstance(node, Pow):
        base = evaluate(node.base, env, field)
        try:
            return base ** node.exp
        except ZeroDivisionError:
            raise ParseError("division by zero") from None
    left = evaluate(node.left, env, field)
    right = evaluate(node.right, env, field)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    try:
        return left / right
    except ZeroDivisionError:
        raise ParseError("division by zero") from None


def build_tower(var: str, params=(), ext: int | None = None):
    """Field ``K(params...)(var)`` with ``K = Q`` or ``Q(sqrt ext)``; returns (field, env)."""
    ground = QQ if ext is None else QuadraticField(ext)
    field = ground
    for name in list(params) + [var]:
        field = FunctionField(field, canonical_name(name))
    env = {}
    f = field
    while isinstance(f, FunctionField):
        env[f.var] = field.coerce(f.gen())
        f = f.base
    return field, env


def parse(text: str, var: str = "t", params=()) -> RationalFunction:
    """Parse ``text`` into a rational function of ``var`` over Q(params...).

    Any ``sqrt(d)`` atom moves the ground field to Q(sqrt d).
    """
    node = parse_ast(text)
    field, env = build_tower(var, params, _ext_of(node))
    try:
        value = evaluate(node, env, field)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None
    return field.coerce(value)


def parse_constant(text: str):
    """Parse an expression without identifiers to a ``Fraction`` or ``QuadExt``."""
    node = parse_ast(text)
    if any(isinstance(i, str) for i in _identifiers(node, set())):
        raise ParseError(f"expected a constant, got {text!r}")
    ext = _ext_of(node)
    field = QQ if ext is None else QuadraticField(ext)
    try:
        return evaluate(node, {}, field)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None


def to_text(f, style: str = "plain") -> str:
    """Render a rational function, polynomial or constant (``plain`` reparses)."""
    if isinstance(f, RationalFunction):
        return format_ratfunc(f, style)
    if isinstance(f, Fraction) and style == "latex" and f.denominator != 1:
        return rf"\frac{{{f.numerator}}}{{{f.denominator}}}"
    return str(f)

