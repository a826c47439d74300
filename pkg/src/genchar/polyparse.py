"""Text syntax for polynomials and coefficients.

Accepted input is ordinary arithmetic over ``+ - * / ^`` and parentheses,
with rationals ``a/b``, variables ``x1, x2, ...`` (any single lowercase
prefix), roots of unity ``z(a/m)`` and finite-field constants
``fq(p,n,[c0,...])``.  Division is allowed by constants only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Sequence

from .cyclotomic import CycloNum, RootOfUnity
from .errors import ParseError
from .finite_field import FqElem
from .mpoly import MPoly

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<z>z\(\s*-?\d+\s*/\s*\d+\s*\))"
    r"|(?P<fq>fq\(\s*\d+\s*,\s*\d+\s*,\s*\[[\d\s,]*\]\s*\))"
    r"|(?P<var>[a-z]\d+)"
    r"|(?P<num>\d+)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_root(text: str) -> RootOfUnity:
    m = re.fullmatch(r"\s*z\(\s*(-?\d+)\s*/\s*(\d+)\s*\)\s*", text)
    if not m:
        raise ParseError(f"not a root of unity token: {text!r}")
    den = int(m.group(2))
    if den < 1:
        raise ParseError("root of unity needs a positive denominator")
    return RootOfUnity(int(m.group(1)), den)


def parse_fq(text: str) -> FqElem:
    m = re.fullmatch(r"\s*fq\(\s*(\d+)\s*,\s*(\d+)\s*,\s*\[([\d\s,]*)\]\s*\)\s*", text)
    if not m:
        raise ParseError(f"not a finite-field element: {text!r}")
    body = m.group(3).strip()
    coeffs = [int(t) for t in body.split(",")] if body else []
    return FqElem(int(m.group(1)), int(m.group(2)), coeffs)


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], names: Sequence[str], field_p: int | None):
        self.toks = tokens
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.n = len(names)
        self.field_p = field_p

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return t

    def const(self, c: Any) -> MPoly:
        if self.field_p is not None and not isinstance(c, FqElem):
            if isinstance(c, Fraction):
                c = FqElem.from_int(self.field_p, c.numerator) / FqElem.from_int(self.field_p, c.denominator)
            else:
                raise ParseError("only finite-field constants are allowed here")
        return MPoly.const(c, self.n)

    def expr(self) -> MPoly:
        neg = False
        t = self.peek()
        if t and t[1] in "+-" and t[0] == "op":
            self.take()
            neg = t[1] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while (t := self.peek()) and t[0] == "op" and t[1] in "+-":
            self.take()
            rhs = self.term()
            acc = acc + rhs if t[1] == "+" else acc - rhs
        return acc

    def term(self) -> MPoly:
        acc = self.power()
        while (t := self.peek()) and t[0] == "op" and t[1] in "*/":
            self.take()
            rhs = self.power()
            if t[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants")
                acc = acc * (1 / rhs.constant_coeff())
        return acc

    def power(self) -> MPoly:
        base = self.atom()
        t = self.peek()
        if t and t == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a natural number")
            base = base ** int(val)
        return base

    def atom(self) -> MPoly:
        kind, val = self.take()
        if kind == "num":
            return self.const(Fraction(int(val)))
        if kind == "z":
            if self.field_p is not None:
                raise ParseError("roots of unity are not finite-field constants")
            return self.const(CycloNum.from_root(parse_root(val)))
        if kind == "fq":
            return self.const(parse_fq(val))
        if kind == "var":
            if val not in self.index:
                raise ParseError(f"unknown variable {val}")
            one = Fraction(1) if self.field_p is None else FqElem.one(self.field_p)
            return MPoly.var(self.index[val], self.n, one)
        if val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
            return inner
        if val == "-":
            return -self.power()
        raise ParseError(f"unexpected token {val!r}")


def variable_names(texts: Sequence[str], prefix: str | None = None) -> tuple[str, int]:
    """(prefix, count) of variables used across ``texts``."""
    found: dict[str, int] = {}
    for text in texts:
        for kind, val in _tokenize(text):
            if kind == "var":
                found[val[0]] = max(found.get(val[0], 0), int(val[1:]))
    if prefix is not None:
        extra = set(found) - {prefix}
        if extra:
            raise ParseError(f"unexpected variables with prefix {sorted(extra)}")
        return prefix, found.get(prefix, 0)
    if len(found) > 1:
        raise ParseError(f"mixed variable prefixes {sorted(found)}")
    if not found:
        return "x", 0
    (p, n), = found.items()
    return p, n


def normalize_coeffs(poly: MPoly) -> MPoly:
    """Rational CycloNum coefficients become Fractions."""
    def fix(c: Any) -> Any:
        if isinstance(c, CycloNum) and c.is_rational():
            return c.as_rational()
        if isinstance(c, int):
            return Fraction(c)
        return c
    return poly.map_coeffs(fix)


def parse_poly(
    text: str,
    nvars: int | None = None,
    prefix: str | None = None,
    field_p: int | None = None,
    order: str = "grevlex",
) -> MPoly:
    """Parse one polynomial.

    ``nvars`` defaults to the largest variable index used; with ``field_p``
    every coefficient is mapped into the algebraic closure of F_p.
    """
    pre, used = variable_names([text], prefix)
    n = used if nvars is None else nvars
    if used > n:
        raise ParseError(f"variable index {used} exceeds {n}")
    parser = _Parser(_tokenize(text), [f"{pre}{i + 1}" for i in range(n)], field_p)
    if not parser.toks:
        raise ParseError("empty polynomial")
    out = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at {parser.peek()[1]!r}")
    out = out if field_p is not None else normalize_coeffs(out)
    return out.with_order(order) if order != out.order else out


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside brackets."""
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
    return [p.strip() for p in parts if p.strip()]


def parse_polys(
    text: str | Sequence[str],
    nvars: int | None = None,
    prefix: str | None = None,
    field_p: int | None = None,
) -> list[MPoly]:
    """Parse a comma-separated list (or a sequence) of polynomials in a common ring."""
    items = split_top_level(text) if isinstance(text, str) else list(text)
    pre, used = variable_names(items, prefix)
    n = max(used, nvars or 0)
    return [parse_poly(t, n, pre, field_p) for t in items]


def parse_number(text: str) -> Any:
    """A constant: rational, root of unity token, finite-field element or expression."""
    text = text.strip()
    if text.startswith("fq("):
        return parse_fq(text)
    p = parse_poly(text, 0)
    return p.constant_coeff() if not p.is_zero() else Fraction(0)
