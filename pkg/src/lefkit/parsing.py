"""Text syntax for rings and homogeneous polynomials.

Rings: ``QQ[x,y,z]`` or ``GF(7)[x1,x2,x3]``.
Polynomials: terms joined by ``+``/``-``, ``^`` for powers, ``*`` optional
between factors, parentheses, integer or ``p/q`` coefficients.  Printing a
parsed form with :func:`format_form` and parsing it again is the identity.
"""

from __future__ import annotations

import re

from .errors import NotHomogeneous, ParseError
from .fields import QQ, GF
from .polyring import Form, RingCtx

_RING_RE = re.compile(r"\s*(?:(QQ)|GF\(\s*(\d+)\s*\))\s*\[(.*)\]\s*$")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_ring(text: str) -> RingCtx:
    m = _RING_RE.match(text)
    if not m:
        raise ParseError("expected QQ[...] or GF(p)[...]", 0, text)
    field = QQ if m.group(1) else GF(int(m.group(2)))
    start = m.start(3)
    names = []
    pos = start
    for raw in m.group(3).split(","):
        name = raw.strip()
        if not _IDENT_RE.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", pos + len(raw) - len(raw.lstrip()), text)
        if name in names:
            raise ParseError(f"repeated variable {name!r}", pos, text)
        names.append(name)
        pos += len(raw) + 1
    return RingCtx(len(names), field, tuple(names))


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        num, ident, sym = m.groups()
        start = m.start(1) if num else m.start(2) if ident else m.start(3)
        if num:
            tokens.append(("num", int(num), start))
        elif ident:
            tokens.append(("var", ident, start))
        elif sym in "+-*/^()":
            tokens.append((sym, sym, start))
        else:
            raise ParseError(f"unexpected character {sym!r}", start, text)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over sparse (possibly inhomogeneous) polynomials."""

    def __init__(self, ctx: RingCtx, text: str):
        self.ctx = ctx
        self.f = ctx.field
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(ctx.var_names)}

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2], self.text)
        self.i += 1
        return tok

    def error(self, msg):
        return ParseError(msg, self.peek()[2], self.text)

    # polynomial arithmetic on dicts
    def add(self, a, b, sign=1):
        out = dict(a)
        for m, c in b.items():
            v = self.f.add(out.get(m, 0), c if sign > 0 else self.f.neg(c))
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def mul(self, a, b):
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = self.f.add(out.get(m, 0), self.f.mul(c1, c2))
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out

    def const(self, c):
        c = self.f.coerce(c)
        return {(0,) * self.ctx.num_vars: c} if c else {}

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        poly = self.expr()
        if self.peek()[0] != "end":
            raise self.error("unexpected token")
        return poly

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        poly = self.term()
        if sign < 0:
            poly = self.add({}, poly, -1)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            poly = self.add(poly, self.term(), 1 if op == "+" else -1)
        return poly

    def term(self):
        poly = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                poly = self.mul(poly, self.factor())
            elif kind == "/":
                tok = self.take()
                d = self.take("num")[1]
                if d == 0 or self.f.coerce(d) == 0:
                    raise ParseError("division by zero", tok[2], self.text)
                poly = self.mul(poly, self.const(self.f.inv(self.f.coerce(d))))
            elif kind in ("num", "var", "("):
                poly = self.mul(poly, self.factor())
            else:
                return poly

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("num")[1]
            out = self.const(1)
            for _ in range(k):
                out = self.mul(out, base)
            return out
        return base

    def base(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return self.const(tok[1])
        if tok[0] == "var":
            self.take()
            if tok[1] not in self.index:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2], self.text)
            e = [0] * self.ctx.num_vars
            e[self.index[tok[1]]] = 1
            return {tuple(e): 1}
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise self.error("expected a number, variable or '('")


def parse_poly(ctx: RingCtx, text: str) -> Form:
    terms = _Parser(ctx, text).parse()
    degrees = {sum(m) for m in terms}
    if len(degrees) > 1:
        raise NotHomogeneous(f"terms of degrees {sorted(degrees)}", 0, text)
    degree = degrees.pop() if degrees else 0
    return Form(ctx, degree, terms)


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def parse_generators(ctx: RingCtx, text: str) -> list[Form]:
    return [parse_poly(ctx, part) for part in split_top_level(text)]
