"""Polynomial expression language for scripts and serialized values.

Grammar, with the usual precedence (power binds tightest, then unary
minus, product, sum):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | atom ('^' nat)*
    atom     := rational | ident | '(' expr ')'
    rational := int ('/' int)?

Lowering multiplies through the ring, so the odd-word normalization
makes parse order irrelevant: "theta2*theta1" and "-theta1*theta2"
lower to the same value.  The canonical renderer of SuperPoly emits
this grammar, which is what makes printing and parsing inverse to each
other.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ScriptError
from .poly import Context, SuperPoly

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()]))"
)


class Token(NamedTuple):
    kind: str  # int | ident | op | end
    text: str
    col: int  # 1-based


def tokenize(text: str, line=None):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = len(text) - len(stripped) + 1
            raise ScriptError(
                f"unexpected character {stripped[0]!r}", line=line, col=col
            )
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


# AST nodes; Var keeps its column so name-resolution errors can point at it
class Lit(NamedTuple):
    value: Fraction


class Var(NamedTuple):
    name: str
    col: int


class Neg(NamedTuple):
    arg: object


class Sum(NamedTuple):
    head: object
    tail: tuple  # (sign, node) pairs


class Prod(NamedTuple):
    factors: tuple


class Pow(NamedTuple):
    base: object
    exp: int


class _Parser:
    def __init__(self, tokens, line):
        self.tokens = tokens
        self.line = line
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.cur
        raise ScriptError(message, line=self.line, col=tok.col)

    def eat_op(self, op) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def expr(self):
        head = self.term()
        tail = []
        while self.cur.kind == "op" and self.cur.text in "+-":
            sign = 1 if self.cur.text == "+" else -1
            self.i += 1
            tail.append((sign, self.term()))
        return Sum(head, tuple(tail)) if tail else head

    def term(self):
        factors = [self.factor()]
        while self.eat_op("*"):
            factors.append(self.factor())
        return Prod(tuple(factors)) if len(factors) > 1 else factors[0]

    def factor(self):
        if self.eat_op("-"):
            return Neg(self.factor())
        node = self.atom()
        while self.eat_op("^"):
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        if self.cur.kind == "op" and self.cur.text == "-":
            self.error("exponent must be a nonnegative integer")
        if self.cur.kind != "int":
            self.error("expected an integer exponent")
        tok = self.cur
        self.i += 1
        if self.cur.kind == "op" and self.cur.text == "/":
            self.error("exponent must be an integer, not a fraction")
        return int(tok.text)

    def atom(self):
        tok = self.cur
        if tok.kind == "int":
            self.i += 1
            value = Fraction(int(tok.text))
            if self.eat_op("/"):
                den = self.cur
                if den.kind != "int":
                    self.error("expected a denominator")
                self.i += 1
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value /= int(den.text)
            return Lit(value)
        if tok.kind == "ident":
            self.i += 1
            return Var(tok.text, tok.col)
        if tok.kind == "op" and tok.text == "(":
            self.i += 1
            node = self.expr()
            if not self.eat_op(")"):
                self.error("expected ')'")
            return node
        if tok.kind == "end":
            self.error("unexpected end of expression")
        self.error(f"unexpected {tok.text!r}")


def parse(text: str, line=None):
    """Text to AST; raises ScriptError with position on bad input."""
    p = _Parser(tokenize(text, line), line)
    node = p.expr()
    if p.cur.kind != "end":
        p.error(f"unexpected {p.cur.text!r} after expression")
    return node


def lower(node, ctx: Context, line=None, env=None) -> SuperPoly:
    """AST to a polynomial over the context.

    env maps names to already-built polynomials (session bindings);
    generators shadow it, and a binding over a different context is an
    error rather than a silent miss.
    """
    if isinstance(node, Lit):
        return ctx.scalar(node.value)
    if isinstance(node, Var):
        if node.name in ctx:
            return ctx.var(node.name)
        bound = env.get(node.name) if env else None
        if bound is not None:
            if bound.ctx != ctx:
                raise ScriptError(
                    f"{node.name!r} is bound over a different context",
                    line=line, col=node.col,
                )
            return bound
        raise ScriptError(
            f"unknown generator {node.name!r}", line=line, col=node.col
        )
    if isinstance(node, Neg):
        return -lower(node.arg, ctx, line, env)
    if isinstance(node, Sum):
        out = lower(node.head, ctx, line, env)
        for sign, item in node.tail:
            part = lower(item, ctx, line, env)
            out = out + part if sign > 0 else out - part
        return out
    if isinstance(node, Prod):
        out = ctx.one()
        for f in node.factors:
            out = out * lower(f, ctx, line, env)
        return out
    if isinstance(node, Pow):
        return lower(node.base, ctx, line, env) ** node.exp
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(text: str, ctx: Context, line=None, env=None) -> SuperPoly:
    return lower(parse(text, line), ctx, line, env)
