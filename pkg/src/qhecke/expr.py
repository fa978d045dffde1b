"""
A tiny expression language for elements of ``H_n(q)``.

Symbols: rational literals (``3``, ``2/5``), ``q``, generators ``s1..s{n-1}``,
Jucys-Murphy elements ``y1..yn`` and intertwiners ``u2..un``.  Operators, from
loosest to tightest: ``+ -`` (left associative), ``*``, unary ``-``, and
``^`` with an integer exponent (possibly negative).

>>> ast = parse("s1*s2*s1 - s2*s1*s2", 3)
>>> render(ast)
's1*s2*s1 - s2*s1*s2'
>>> evaluate(ast, RunConfig(n=3)).is_zero()
True
>>> parse("s3", 3)
Traceback (most recent call last):
...
qhecke.expr.ParseError: generator index 3 out of range 1..2 at byte 0
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .hecke import (
    HeckeElement, generator, intertwiner, inverse_generator, jucys_murphy,
)
from .scalar import Q

__all__ = [
    "ParseError", "Num", "QSym", "Gen", "JM", "Inter", "BinOp", "Neg", "Pow",
    "Expr", "RunConfig", "tokenize", "parse", "render", "evaluate",
]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message, self.offset = message, offset


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("literals are nonnegative; use Neg")


@dataclass(frozen=True)
class QSym:
    pass


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class JM:
    index: int


@dataclass(frozen=True)
class Inter:
    index: int


@dataclass(frozen=True)
class BinOp:
    op: str                 # one of + - *
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, QSym, Gen, JM, Inter, BinOp, Neg, Pow]


# -- lexer ---------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>[0-9]+(?:/[0-9]+)?)
  | (?P<sym>[syu][0-9]+|q)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str               # num, sym, op, end
    text: str
    offset: int             # byte offset into the UTF-8 input


def tokenize(text: str) -> list[Token]:
    """
    >>> [t.text for t in tokenize("q^-1*s2")]
    ['q', '^', '-', '1', '*', 's2', '']
    """
    out, pos = [], 0
    byte = lambda p: len(text[:p].encode("utf-8"))
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", byte(pos))
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), byte(pos)))
        pos = m.end()
    out.append(Token("end", "", byte(len(text))))
    return out


# -- parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = tokenize(text)
        self.k = 0
        self.n = n

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def take(self, text: Optional[str] = None) -> Token:
        t = self.tok
        if text is not None and t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", t.offset)
        self.k += 1
        return t

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.text == "*":
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.tok.text == "^":
            self.take()
            node = Pow(node, self.exponent())
            if self.tok.text == "^":
                raise ParseError("chained '^' is ambiguous; add parentheses", self.tok.offset)
        return node

    def exponent(self) -> int:
        paren = self.tok.text == "("
        if paren:
            self.take()
        sign = 1
        if self.tok.text == "-":
            self.take()
            sign = -1
        t = self.tok
        if t.kind != "num" or "/" in t.text:
            raise ParseError("exponent must be an integer", t.offset)
        self.take()
        if paren:
            self.take(")")
        return sign * int(t.text)

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.take()
            value = Fraction(t.text)
            return Num(value)
        if t.kind == "sym":
            self.take()
            if t.text == "q":
                return QSym()
            kind, i = t.text[0], int(t.text[1:])
            lo, hi, name, cls = {
                "s": (1, self.n - 1, "generator", Gen),
                "y": (1, self.n, "Jucys-Murphy", JM),
                "u": (2, self.n, "intertwiner", Inter),
            }[kind]
            if not lo <= i <= hi:
                raise ParseError(f"{name} index {i} out of range {lo}..{hi}", t.offset)
            return cls(i)
        if t.text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.offset)


def parse(text: str, n: int) -> Expr:
    """Parse ``text`` as an element of ``H_n``; indices are checked against ``n``."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    p = _Parser(text, n)
    node = p.expr()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.offset)
    return node


# -- printer ---------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def render(node: Expr) -> str:
    """
    Canonical text with the fewest parentheses that reparse to the same tree.

    >>> render(parse("(s1 + (2/3)) * -(y2^-1)", 2))
    '(s1 + 2/3)*-y2^-1'
    """
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, QSym):
        return "q"
    if isinstance(node, Gen):
        return f"s{node.index}"
    if isinstance(node, JM):
        return f"y{node.index}"
    if isinstance(node, Inter):
        return f"u{node.index}"
    if isinstance(node, Neg):
        inner = render(node.operand)
        return "-" + (inner if _prec(node.operand) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        inner = render(node.base)
        return (inner if _prec(node.base) == 5 else f"({inner})") + f"^{node.exponent}"
    p = _PREC[node.op]
    left, right = render(node.left), render(node.right)
    if _prec(node.left) < p:
        left = f"({left})"
    if _prec(node.right) <= p:
        right = f"({right})"
    sep = "*" if node.op == "*" else f" {node.op} "
    return left + sep + right


# -- evaluation ------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by the command-line front end and expression evaluation.

    ``mode`` is ``symbolic`` or ``evaluated``; in evaluated mode ``q_values``
    holds the rational points used in place of the indeterminate.
    """
    n: int = 2
    d: int = 1
    mode: str = "symbolic"
    q_values: tuple = ()
    fmt: str = "json"
    order: int = 6
    t_samples: tuple = (2, 3, 5, 7, 11)
    symbolic_limit: int = 5

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if self.mode not in ("symbolic", "evaluated"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "evaluated" and not self.q_values:
            raise ValueError("evaluated mode needs at least one q value")
        if self.mode == "symbolic" and self.n > self.symbolic_limit:
            raise ValueError(
                f"rank {self.n} exceeds the symbolic limit {self.symbolic_limit}; "
                "use evaluated mode or raise the limit")

    @property
    def q(self):
        return Q if self.mode == "symbolic" else Fraction(self.q_values[0])


def _inverse(node: Expr, value: HeckeElement, n: int, q) -> HeckeElement:
    if value.is_scalar():
        return HeckeElement.scalar(1 / value.scalar_part(), n, q)
    if isinstance(node, JM):
        # y_i^-1 = s_{i-1}^-1 ... s_1^-2 ... s_{i-1}^-1
        i = node.index
        out = HeckeElement.one(n, q)
        for j in list(range(i - 1, 0, -1)) + list(range(1, i)):
            out = out * inverse_generator(j, n, q)
        return out
    if len(value.terms) == 1:
        return value.inverse()
    raise ArithmeticError(f"cannot invert {render(node)}: not a scalar, a y_i or a single basis word")


def evaluate(node: Expr, cfg: RunConfig, q=None) -> HeckeElement:
    """Interpret ``node`` in ``H_n`` at ``q`` (default ``cfg.q``)."""
    n = cfg.n
    q = cfg.q if q is None else q

    def ev(x: Expr) -> HeckeElement:
        if isinstance(x, Num):
            return HeckeElement.scalar(x.value, n, q)
        if isinstance(x, QSym):
            return HeckeElement.scalar(q, n, q)
        if isinstance(x, Gen):
            return generator(x.index, n, q)
        if isinstance(x, JM):
            return jucys_murphy(x.index, n, q)
        if isinstance(x, Inter):
            return intertwiner(x.index - 1, n, q)
        if isinstance(x, Neg):
            return -ev(x.operand)
        if isinstance(x, Pow):
            base = ev(x.base)
            if x.exponent >= 0:
                return base ** x.exponent
            return _inverse(x.base, base, n, q) ** (-x.exponent)
        a, b = ev(x.left), ev(x.right)
        if x.op == "+":
            return a + b
        if x.op == "-":
            return a - b
        return a * b

    return ev(node)
