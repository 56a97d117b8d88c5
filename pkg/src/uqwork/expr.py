"""Parser for the textual expression grammar used on the command line.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/')? factor)*
    factor := atom ('^' nat)?
    atom   := 'E' i | 'F' i | 'K' '[' int (',' int)* ']' | 'q' | int | '(' expr ')'

Indices are 1-based; in rank one ``E`` and ``F`` may drop the index.
Division is only allowed by scalars.
"""
from __future__ import annotations

import re

from .pbw import QuantumGroup, UqElement
from .qscalar import ONE, Q, qs

__all__ = ["ParseError", "parse_expr"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([EFKq])|(\^)|([-+*/()\[\],]))")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def _tokenize(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        toks.append((m.group(m.lastindex), start))
        pos = m.end()
    toks.append(("$", len(text)))
    return toks


class _Parser:
    def __init__(self, alg: QuantumGroup, text: str):
        self.alg = alg
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def pos(self) -> int:
        return self.toks[self.i][1]

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if want is not None and tok != want:
            raise ParseError(f"expected {want!r}, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def number(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if not tok.isdigit():
            raise ParseError(f"expected integer, found {tok!r}", self.pos())
        self.take()
        return sign * int(tok)

    def expr(self) -> UqElement:
        out = self.alg.zero()
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take() == "-" else 1
        while True:
            t = self.term()
            out = out + t if sign > 0 else out - t
            if self.peek() in ("+", "-"):
                sign = -1 if self.take() == "-" else 1
            else:
                return out

    def term(self) -> UqElement:
        out = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                out = out * self.factor()
            elif tok == "/":
                self.take()
                at = self.pos()
                d = self.factor()
                c = _as_scalar(d)
                if c is None or c.is_zero():
                    raise ParseError("division by a non-scalar or zero", at)
                out = out.scale(c.inverse())
            elif tok in ("E", "F", "K", "q", "(") or tok.isdigit():
                out = out * self.factor()
            else:
                return out

    def factor(self) -> UqElement:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            at = self.pos()
            k = self.number()
            if k < 0:
                c = _as_scalar(base)
                if c is None or c.is_zero():
                    raise ParseError("negative power of a non-scalar", at)
                return self.alg.scalar(_pow(c.inverse(), -k))
            return base ** k
        return base

    def atom(self) -> UqElement:
        alg = self.alg
        tok, at = self.peek(), self.pos()
        if tok in ("E", "F"):
            self.take()
            if self.peek().isdigit():
                i = int(self.take()) - 1
            elif alg.n == 1:
                i = 0
            else:
                raise ParseError(f"{tok} needs an index", self.pos())
            if not 0 <= i < alg.n:
                raise ParseError(f"index out of range for rank {alg.n}", at)
            return alg.E(i) if tok == "E" else alg.F(i)
        if tok == "K":
            self.take()
            self.take("[")
            mu = [self.number()]
            while self.peek() == ",":
                self.take()
                mu.append(self.number())
            self.take("]")
            if len(mu) != alg.n:
                raise ParseError(f"K needs {alg.n} coordinates", at)
            return alg.K(tuple(mu))
        if tok == "q":
            self.take()
            return alg.scalar(Q)
        if tok.isdigit():
            self.take()
            return alg.scalar(qs(int(tok)))
        if tok == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {tok!r}", at)


def _pow(c, k):
    out = ONE
    for _ in range(k):
        out = out * c
    return out


def _as_scalar(x: UqElement):
    if not x.terms:
        return qs(0)
    if len(x.terms) != 1:
        return None
    (m, c), = x.terms.items()
    if m.f_word or m.e_word or any(m.torus):
        return None
    return c


def parse_expr(alg: QuantumGroup, text: str) -> UqElement:
    """Parse ``text`` and return its PBW normal form."""
    p = _Parser(alg, text)
    if p.peek() == "$":
        raise ParseError("empty expression", 0)
    out = p.expr()
    if p.peek() != "$":
        raise ParseError(f"unexpected token {p.peek()!r}", p.pos())
    return out
