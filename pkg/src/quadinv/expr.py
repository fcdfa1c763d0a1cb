"""Reading and writing polynomials as text.

Grammar, whitespace insignificant::

    expr      := term { "+" term }
    term      := factor { "*" factor }
    factor    := atom [ "^" nat ]
    atom      := generator | "0" | "1" | "(" expr ")"
    generator := name [ "{" nat { "," nat } "}" ]

A generator is either a variable of the ring (``w3``, ``wh2``, ``d{1,2}``,
``lambda``) or one of the optional ``labels`` passed by the caller, e.g.
``beta'_8`` standing for a named generator of the invariant ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import ExprSyntaxError, UnknownGenerator
from .poly import Polynomial, Ring, check_degree


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_']*)|(?P<nat>\d+)|(?P<op>[+*^(){},]))")


def _tokenize(src: str) -> list:
    out, i = [], 0
    while i < len(src):
        if src[i:].strip() == "":
            break
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            i += len(src[i:]) - len(src[i:].lstrip())
            raise ExprSyntaxError(f"unexpected character {src[i]!r}", i)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        i = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str, ring: Ring, labels: Mapping | None):
        self.toks = _tokenize(src)
        self.i = 0
        self.ring = ring
        self.labels = labels or {}

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None, kind=None):
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take("+")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.take("*")
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take("^")
            return Power(base, int(self.take(kind="nat")[1]))
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if val == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "nat":
            if val not in ("0", "1"):
                raise ExprSyntaxError(f"only the constants 0 and 1 are allowed, found {val}", pos)
            self.take()
            return Const(int(val))
        if kind == "name":
            self.take()
            name = val
            if self.peek()[1] == "{":
                self.take("{")
                idx = [self.take(kind="nat")[1]]
                while self.peek()[1] == ",":
                    self.take(",")
                    idx.append(self.take(kind="nat")[1])
                self.take("}")
                name += "{" + ",".join(idx) + "}"
            name = _canonical(name)
            if not self.ring.has(name) and name not in self.labels:
                raise UnknownGenerator(name, pos, self.ring)
            return Gen(name, pos)
        got = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"expected a generator, constant or '(', found {got}", pos)


def _canonical(name: str) -> str:
    """Sort the index set of ``d{...}``-style names so d{2,1} means d{1,2}."""
    m = re.fullmatch(r"(.*)\{([\d,]+)\}", name)
    if not m:
        return name
    idx = sorted({int(k) for k in m.group(2).split(",")})
    return m.group(1) + "{" + ",".join(map(str, idx)) + "}"


def parse_expr(src: str, ring: Ring, labels: Mapping | None = None):
    """Parse ``src`` into an AST whose generators all resolve in ``ring`` (or ``labels``)."""
    p = _Parser(src, ring, labels)
    ast = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
    return ast


def eval_expr(ast, ring: Ring, labels: Mapping | None = None) -> Polynomial:
    labels = labels or {}

    def ev(node) -> Polynomial:
        if isinstance(node, Const):
            return ring.one if node.value else ring.zero
        if isinstance(node, Gen):
            if ring.has(node.name):
                return ring.gen(node.name)
            return labels[node.name]
        if isinstance(node, Power):
            base = ev(node.base)
            if base and node.exp:
                check_degree(base.degree() * node.exp)
            return base ** node.exp
        if isinstance(node, Product):
            acc = ring.one
            for f in node.factors:
                val = ev(f)
                if acc and val:
                    check_degree(acc.degree() + val.degree())
                acc = acc * val
            return acc
        if isinstance(node, Sum):
            acc = ring.zero
            for t in node.terms:
                acc = acc + ev(t)
            return acc
        raise TypeError(f"not an expression node: {node!r}")

    return ev(ast)


def parse_poly(src: str, ring: Ring, labels: Mapping | None = None) -> Polynomial:
    return eval_expr(parse_expr(src, ring, labels), ring, labels)


def format_poly(p: Polynomial) -> str:
    """Graded-lex text form; ``parse_poly(format_poly(p), p.ring) == p``."""
    return str(p)
