"""Text syntax for elements of g and T(g).

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational ['·'] atom | rational | atom
    atom   := ident | '1' | '[' expr ',' expr ']' | 'd(' expr ',' expr ')' | '(' expr ')'

``*`` is the tensor product, ``[a,b]`` the Lie bracket and ``d(a,b)`` the
diamond product.  Bracket and diamond only accept arguments of tensor
length one.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .free_lie import GElement, bracket, diamond, gen
from .tensor import TElement, UNIT, as_g, concat, from_g, t_word, word_key

DEFAULT_NAMES = ("x", "y", "z", "w")


class ParseError(ValueError):
    def __init__(self, message: str, src: str, pos: int):
        self.line = src.count("\n", 0, pos) + 1
        self.column = pos - (src.rfind("\n", 0, pos) + 1) + 1
        self.pos = pos
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class ElaborationError(ValueError):
    pass


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Ident:
    name: str
    pos: int


@dataclass(frozen=True)
class Unit:
    pos: int


@dataclass(frozen=True)
class Scaled:
    coef: Fraction
    atom: "Expr | None"  # None: a bare scalar, i.e. coef * 1
    pos: int


@dataclass(frozen=True)
class BracketNode:
    left: "Expr"
    right: "Expr"
    pos: int


@dataclass(frozen=True)
class DiamondNode:
    left: "Expr"
    right: "Expr"
    pos: int


@dataclass(frozen=True)
class Tensor:
    factors: tuple
    pos: int


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, Expr)
    pos: int


Expr = Union[Ident, Unit, Scaled, BracketNode, DiamondNode, Tensor, Sum]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*·\[\](),]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            p = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[p]!r}", src, p)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        kind, val, pos = self.take()
        if val != text or kind == "end":
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {text!r}, found {found}", self.src, pos)

    def expr(self) -> Expr:
        pos = self.peek()[2]
        terms = []
        sign = 1
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            sign = -1
        terms.append((sign, self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms), pos)

    def term(self) -> Expr:
        pos = self.peek()[2]
        factors = [self.factor()]
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Tensor(tuple(factors), pos)

    def factor(self) -> Expr:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            coef = Fraction(val)
            explicit = False
            if self.peek()[1] == "·":
                self.take()
                explicit = True
            if explicit or self._atom_starts():
                return Scaled(coef, self.atom(), pos)
            if coef == 1 and "/" not in val:
                return Unit(pos)
            return Scaled(coef, None, pos)
        return self.atom()

    def _atom_starts(self) -> bool:
        kind, val = self.peek()[:2]
        return kind in ("ident", "num") or val in ("[", "(")

    def atom(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "ident":
            if val == "d" and self.peek()[1] == "(":
                self.take()
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(")")
                return DiamondNode(a, b, pos)
            return Ident(val, pos)
        if kind == "num":
            if val == "1":
                return Unit(pos)
            raise ParseError(f"unexpected number {val!r}", self.src, pos)
        if val == "[":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return BracketNode(a, b, pos)
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", self.src, pos)


def parse(src: str) -> Expr:
    p = _Parser(src)
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", src, pos)
    return e


def parse_pair(src: str) -> tuple[Expr, Expr]:
    """Parse ``"a, b"`` (used for the Lambda pair of an element of J)."""
    p = _Parser(src)
    a = p.expr()
    p.expect(",")
    b = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", src, pos)
    return a, b


# -- elaboration ------------------------------------------------------------


def _name_table(gens: Sequence[str] | Mapping[str, int] | None) -> dict[str, int]:
    if gens is None:
        gens = DEFAULT_NAMES
    if isinstance(gens, Mapping):
        return dict(gens)
    return {name: i for i, name in enumerate(gens)}


def _as_lie(e: TElement, what: str, pos: int, src: str | None) -> GElement:
    try:
        return as_g(e)
    except ValueError:
        where = f" (offset {pos})" if src is None else ""
        raise ElaborationError(f"{what} argument is not an element of g{where}") from None


def elaborate(ast: Expr, gens: Sequence[str] | Mapping[str, int] | None = None) -> TElement:
    table = _name_table(gens)
    return _elab(ast, table)


def _elab(e: Expr, table: dict[str, int]) -> TElement:
    if isinstance(e, Ident):
        if e.name not in table:
            raise ElaborationError(f"unknown identifier {e.name!r} at offset {e.pos}")
        return t_word((gen(table[e.name]),))
    if isinstance(e, Unit):
        return t_word(UNIT)
    if isinstance(e, Scaled):
        inner = t_word(UNIT) if e.atom is None else _elab(e.atom, table)
        return inner * e.coef
    if isinstance(e, (BracketNode, DiamondNode)):
        op, what = (bracket, "bracket") if isinstance(e, BracketNode) else (diamond, "diamond")
        a = _as_lie(_elab(e.left, table), what, e.pos, None)
        b = _as_lie(_elab(e.right, table), what, e.pos, None)
        return from_g(op(a, b))
    if isinstance(e, Tensor):
        out = _elab(e.factors[0], table)
        for f in e.factors[1:]:
            out = concat(out, _elab(f, table))
        return out
    if isinstance(e, Sum):
        out = TElement()
        for sign, term in e.terms:
            out = out + _elab(term, table) * sign
        return out
    raise TypeError(f"not an expression node: {e!r}")


def read_element(src: str, gens: Sequence[str] | Mapping[str, int] | None = None) -> TElement:
    return elaborate(parse(src), gens)


def read_g(src: str, gens: Sequence[str] | Mapping[str, int] | None = None) -> GElement:
    return _as_lie(read_element(src, gens), "expression", 0, src)


# -- printing ---------------------------------------------------------------


def _names_by_index(gens: Sequence[str] | Mapping[str, int] | None) -> dict[int, str] | None:
    if gens is None:
        return None
    return {i: name for name, i in _name_table(gens).items()}


def format_word(w: tuple, names: Mapping[int, str] | None = None) -> str:
    if not w:
        return "1"
    return "*".join(m.to_str(names) for m in w)


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(u: TElement | GElement, gens: Sequence[str] | Mapping[str, int] | None = None) -> str:
    if isinstance(u, GElement):
        u = from_g(u)
    names = _names_by_index(gens)
    if not u.terms:
        return "0"
    parts = []
    for w in sorted(u.terms, key=lambda w: (-len(w), word_key(w))):
        c = u.terms[w]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = format_word(w, names)
        if a != 1:
            body = _format_coef(a) if not w else f"{_format_coef(a)} {body}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
