"""Relator expression language.

Grammar (whitespace-insensitive)::

    expr     := factor ( '*'? factor )*
    factor   := primary ( '^' exponent )*
    exponent := INT | '-' INT | primary          # power, or conjugation by a word
    primary  := 'r0' | 'r1' | 'r2' | '1' | '(' expr ')' | '[' expr ',' expr ']'

``x^k`` is a power (k >= 1), ``x^(w)`` or ``x^r2`` is the conjugate
w^-1 x w and ``[x, y]`` is the commutator x^-1 y^-1 x y.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from ..errors import RelatorSyntaxError
from .words import Word, free_reduce, invert


@dataclass(frozen=True)
class GeneratorExpr:
    index: int


@dataclass(frozen=True)
class IdentityExpr:
    pass


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple[RelatorExpr, ...]


@dataclass(frozen=True)
class PowerExpr:
    base: RelatorExpr
    exponent: int


@dataclass(frozen=True)
class CommutatorExpr:
    left: RelatorExpr
    right: RelatorExpr


@dataclass(frozen=True)
class ConjugateExpr:
    base: RelatorExpr
    by: RelatorExpr


RelatorExpr = Union[GeneratorExpr, IdentityExpr, ProductExpr, PowerExpr, CommutatorExpr, ConjugateExpr]


_TOKEN_RE = re.compile(r"\s*(?:(r[0-2])|(\d+)|([\^*()\[\],\-]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "gen", "int", or the punctuation character itself
    value: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise RelatorSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        gen, num, punct = m.groups()
        if gen is not None:
            tokens.append(_Token("gen", gen, start))
        elif num is not None:
            tokens.append(_Token("int", num, start))
        else:
            tokens.append(_Token(punct, punct, start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def advance(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise RelatorSyntaxError("unexpected end of input", len(self.text), self.text)
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            where = tok.position if tok is not None else len(self.text)
            raise RelatorSyntaxError(f"expected {kind!r}", where, self.text)
        return self.advance()

    def starts_primary(self, tok: Optional[_Token]) -> bool:
        return tok is not None and (tok.kind in ("gen", "(", "[") or (tok.kind == "int" and tok.value == "1"))

    def parse(self) -> RelatorExpr:
        if not self.tokens:
            raise RelatorSyntaxError("empty relator", 0, self.text)
        expr = self.expr()
        tok = self.peek()
        if tok is not None:
            raise RelatorSyntaxError(f"unexpected {tok.value!r}", tok.position, self.text)
        return expr

    def expr(self) -> RelatorExpr:
        factors = [self.factor()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "*":
                self.advance()
                factors.append(self.factor())
            elif self.starts_primary(tok):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else ProductExpr(tuple(factors))

    def factor(self) -> RelatorExpr:
        node = self.primary()
        while (tok := self.peek()) is not None and tok.kind == "^":
            self.advance()
            nxt = self.peek()
            if nxt is not None and nxt.kind == "-":
                self.advance()
                num = self.expect("int")
                raise RelatorSyntaxError(f"power exponent -{num.value} is below 1", num.position, self.text)
            if nxt is not None and nxt.kind == "int":
                self.advance()
                k = int(nxt.value)
                if k < 1:
                    raise RelatorSyntaxError(f"power exponent {k} is below 1", nxt.position, self.text)
                node = PowerExpr(node, k)
            elif self.starts_primary(nxt):
                node = ConjugateExpr(node, self.primary())
            else:
                where = nxt.position if nxt is not None else len(self.text)
                raise RelatorSyntaxError("expected exponent or conjugating word after '^'", where, self.text)
        return node

    def primary(self) -> RelatorExpr:
        tok = self.advance()
        if tok.kind == "gen":
            return GeneratorExpr(int(tok.value[1]))
        if tok.kind == "int" and tok.value == "1":
            return IdentityExpr()
        if tok.kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "[":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return CommutatorExpr(left, right)
        raise RelatorSyntaxError(f"unexpected {tok.value!r}", tok.position, self.text)


def parse_relator(text: str) -> RelatorExpr:
    """Parse relator-language ``text`` into an expression tree."""
    return _Parser(text).parse()


def _letters(expr: RelatorExpr) -> Iterator[int]:
    if isinstance(expr, GeneratorExpr):
        yield expr.index
    elif isinstance(expr, IdentityExpr):
        return
    elif isinstance(expr, ProductExpr):
        for f in expr.factors:
            yield from _letters(f)
    elif isinstance(expr, PowerExpr):
        base = tuple(_letters(expr.base))
        for _ in range(expr.exponent):
            yield from base
    elif isinstance(expr, CommutatorExpr):
        x = tuple(_letters(expr.left))
        y = tuple(_letters(expr.right))
        yield from invert(x)
        yield from invert(y)
        yield from x
        yield from y
    elif isinstance(expr, ConjugateExpr):
        x = tuple(_letters(expr.base))
        y = tuple(_letters(expr.by))
        yield from invert(y)
        yield from x
        yield from y
    else:
        raise TypeError(f"not a relator expression: {expr!r}")


def flatten(expr: RelatorExpr, reduce: bool = False) -> Word:
    """Expand ``expr`` into a word; optionally freely reduce it."""
    word = tuple(_letters(expr))
    return free_reduce(word) if reduce else word


def parse_word(text: str) -> Word:
    """Parse and flatten to a freely reduced word."""
    return flatten(parse_relator(text), reduce=True)


def top_level_power(expr: RelatorExpr) -> Optional[tuple[Word, int]]:
    """(base word, exponent) when ``expr`` is written as X^k with k >= 2."""
    if isinstance(expr, PowerExpr) and expr.exponent >= 2:
        base = flatten(expr.base, reduce=True)
        if base:
            return base, expr.exponent
    return None
