"""Parser for the textual polynomial syntax.

Variables are ``x1 .. xN``, ``t`` is the reserved parameter, rationals are
written ``p/q``; e.g. ``(3/2 + t^2)*x1^2*x2 - (1/(1+t))*x3^3``.
"""

from __future__ import annotations

import re

from .ring import DomainError, Poly, RingSpec, add_terms, mul_terms
from .scalars import TRat


class ParseError(ValueError):
    def __init__(self, msg: str, col: int | None = None, line: int | None = None):
        self.msg = msg
        self.col = col
        self.line = line
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.col is not None:
            where.append(f"col {self.col}")
        return f"{', '.join(where)}: {self.msg}" if where else self.msg

    def at_line(self, line: int, col_offset: int = 0) -> "ParseError":
        col = None if self.col is None else self.col + col_offset
        return ParseError(self.msg, col, line)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(t)\b|([-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = text[pos:].lstrip()
            col = len(text) - len(bad) + 1
            raise ParseError(f"unexpected character {bad[0]!r}", col)
        col = m.start(m.lastindex) + 1
        kind = ("int", "var", "t", "op")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), col))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = nvars
        self.zero = (0,) * nvars

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def const(self, c):
        c = TRat.from_rat(c) if not isinstance(c, TRat) else c
        return {self.zero: c} if c else {}

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            w = self.term()
            if op == "-":
                w = {e: -c for e, c in w.items()}
            v = add_terms(v, w)
        return v

    def term(self):
        v = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, col = self.take()
            w = self.unary()
            if op == "*":
                v = mul_terms(v, w)
            else:
                if any(e != self.zero for e in w):
                    raise ParseError("division by a polynomial in x is not allowed", col)
                if not w:
                    raise ParseError("division by zero", col)
                inv = w[self.zero].inverse()
                v = {e: c * inv for e, c in v.items()}
        return v

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return {e: -c for e, c in self.unary().items()}
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[1] == "^":
            _, _, col = self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", tok[2])
            k = int(tok[1])
            if neg:
                if any(e != self.zero for e in v) or not v:
                    raise ParseError("negative exponent on a non-scalar", col)
                return self.const(v[self.zero] ** (-k))
            out = self.const(1)
            for _ in range(k):
                out = mul_terms(out, v)
            return out
        return v

    def atom(self):
        kind, val, col = self.take()
        if kind == "int":
            return self.const(int(val))
        if kind == "t":
            return self.const(TRat.t_power(1))
        if kind == "var":
            i = int(val[1:])
            if not 1 <= i <= self.n:
                raise ParseError(f"undeclared variable {val} (ring has {self.n} variables)", col)
            e = [0] * self.n
            e[i - 1] = 1
            return {tuple(e): TRat.from_rat(1)}
        if val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {val or 'end of input'!r}", col)


def parse_poly(text: str, ring: RingSpec) -> Poly:
    """Parse ``text`` into a polynomial of ``ring``; domain violations raise ParseError."""
    terms = _Parser(text, ring.nvars).parse()
    try:
        return Poly(ring, terms)
    except DomainError as exc:
        raise ParseError(str(exc), 1) from None


def parse_poly_list(text: str, ring: RingSpec) -> list[Poly]:
    """Comma-separated polynomials."""
    out = []
    offset = 0
    for part in _split_top(text, ","):
        stripped = part.strip()
        if stripped:
            lead = len(part) - len(part.lstrip())
            try:
                out.append(parse_poly(stripped, ring))
            except ParseError as exc:
                raise ParseError(exc.msg, None if exc.col is None else exc.col + offset + lead) from None
        offset += len(part) + 1
    return out


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
