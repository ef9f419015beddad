"""Formula AST, parser and printer.

Grammar (ASCII):
    formula := or ;  or := and ('|' and)* ;  and := unary ('&' unary)* ;
    unary   := '!' unary | atom ;
    atom    := 'true' | 'false' | IDENT | '(' formula ')'
             | 'eta' '(' formula ',' formula ')' | 'gamma' '(' formula ',' formula ')'
             | 'diamond' '(' formula ')'
``false`` is read as ``!true`` and ``diamond(f)`` as ``gamma(f, true)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..core import RESERVED
from ..errors import ParseError


class Formula:
    __slots__ = ()

    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Eta(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Gamma(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


TRUE = Top()
FALSE = Not(TRUE)


def diamond(f: Formula) -> Formula:
    return Gamma(f, TRUE)


def conj(parts) -> Formula:
    """Left-nested conjunction; the empty conjunction is true."""
    out = None
    for p in parts:
        out = p if out is None else And(out, p)
    return TRUE if out is None else out


def disj(parts) -> Formula:
    out = None
    for p in parts:
        out = p if out is None else Or(out, p)
    return FALSE if out is None else out


def walk(f: Formula):
    """Each distinct node once (by identity), children before parents."""
    seen, order, stack = set(), [], [(f, False)]
    while stack:
        node, done = stack.pop()
        if done:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for ch in reversed(node.children()):
            if id(ch) not in seen:
                stack.append((ch, False))
    return order


def depth(f: Formula) -> int:
    """Modal depth: nesting of eta/gamma."""
    memo = {}
    for node in walk(f):
        d = max((memo[id(c)] for c in node.children()), default=0)
        memo[id(node)] = d + 1 if isinstance(node, (Eta, Gamma)) else d
    return memo[id(f)]


def letters(f: Formula) -> set[str]:
    return {n.name for n in walk(f) if isinstance(n, Atom)}


def has_node(f: Formula, kind) -> bool:
    return any(isinstance(n, kind) for n in walk(f))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s+|[A-Za-z][A-Za-z0-9_]*|[()!&|,]")


def _tokenize(text: str):
    toks = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        tok = m.group()
        if not tok.isspace():
            toks.append((tok, line, col))
        for ch in tok:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    toks.append(("", line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def fail(self, msg):
        tok, line, col = self.toks[self.i]
        found = repr(tok) if tok else "end of input"
        raise ParseError(f"{msg}, found {found}", line, col)

    def expect(self, tok):
        if self.peek() != tok:
            self.fail(f"expected {tok!r}")
        self.i += 1

    def formula(self):
        left = self.conj()
        while self.peek() == "|":
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.peek() == "&":
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.peek() == "!":
            self.i += 1
            return Not(self.unary())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok == "(":
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if tok == "true":
            self.i += 1
            return TRUE
        if tok == "false":
            self.i += 1
            return Not(TRUE)
        if tok in ("eta", "gamma"):
            self.i += 1
            self.expect("(")
            a = self.formula()
            self.expect(",")
            b = self.formula()
            self.expect(")")
            return Eta(a, b) if tok == "eta" else Gamma(a, b)
        if tok == "diamond":
            self.i += 1
            self.expect("(")
            a = self.formula()
            self.expect(")")
            return Gamma(a, TRUE)
        if tok and (tok[0].isalpha()) and tok not in RESERVED:
            self.i += 1
            return Atom(tok)
        self.fail("expected a formula")


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "":
        p.fail("trailing input")
    return f


# -- printing --------------------------------------------------------------

def to_text(f: Formula) -> str:
    """Inverse of ``parse`` up to whitespace, ``false`` and ``diamond``."""
    return _show(f, 0)


def _show(f, ctx):
    # precedence: or=1, and=2, unary/atom=3
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "!" + _show(f.arg, 3)
    if isinstance(f, (Eta, Gamma)):
        name = "eta" if isinstance(f, Eta) else "gamma"
        return f"{name}({_show(f.left, 0)}, {_show(f.right, 0)})"
    if isinstance(f, And):
        s = f"{_show(f.left, 2)} & {_show(f.right, 3)}"
        return f"({s})" if ctx > 2 else s
    if isinstance(f, Or):
        s = f"{_show(f.left, 1)} | {_show(f.right, 2)}"
        return f"({s})" if ctx > 1 else s
    raise TypeError(f"not a formula: {f!r}")
