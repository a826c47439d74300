"""Ordinals below w^2 and geometric rank/degree of symbolic descriptors.

An ``Ordinal2`` is either ``BOTTOM`` (the rank of the empty set) or
``w*k + f`` with naturals ``k, f``.  Descriptors are trees of atoms combined
by union, disjoint union and product; ``gr_eval`` and ``gd_eval`` evaluate
the rank and degree laws on them.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from functools import total_ordering
from typing import Union as TUnion

from .errors import GencharError, ParseError, PreconditionError


@total_ordering
@dataclass(frozen=True)
class Ordinal2:
    """``w*k + f``; ``k is None`` encodes BOTTOM."""

    k: int | None
    f: int = 0

    def __post_init__(self) -> None:
        if self.k is not None and (self.k < 0 or self.f < 0):
            raise ValueError("ordinal coefficients must be natural numbers")

    @classmethod
    def of(cls, k: int, f: int = 0) -> "Ordinal2":
        return cls(k, f)

    @property
    def is_bottom(self) -> bool:
        return self.k is None

    def _key(self) -> tuple:
        return (0,) if self.k is None else (1, self.k, self.f)

    def __lt__(self, other: "Ordinal2") -> bool:
        return self._key() < other._key()

    def __add__(self, other: "Ordinal2") -> "Ordinal2":
        """Componentwise sum (the product rule); BOTTOM absorbs."""
        if self.is_bottom or other.is_bottom:
            return BOTTOM
        return Ordinal2(self.k + other.k, self.f + other.f)

    def __str__(self) -> str:
        return "-inf" if self.k is None else f"w*{self.k}+{self.f}"


BOTTOM = Ordinal2(None)


def ord_compare(a: Ordinal2, b: Ordinal2) -> int:
    return (a > b) - (a < b)


def ord_max(*xs: Ordinal2) -> Ordinal2:
    return max(xs, default=BOTTOM)


# -- descriptors ----------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    rho_k: int
    d_k: int
    rho_f: int
    d_f: int

    def __post_init__(self) -> None:
        if self.d_k < 1 or self.d_f < 1:
            raise ValueError("atom degrees must be at least 1")
        if self.rho_k < 0 or self.rho_f < 0:
            raise ValueError("atom ranks must be natural numbers")


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Union:
    children: tuple["Descriptor", ...]
    overlap: int | None = None


@dataclass(frozen=True)
class DisjointUnion:
    children: tuple["Descriptor", ...]


@dataclass(frozen=True)
class Product:
    left: "Descriptor"
    right: "Descriptor"


Descriptor = TUnion[Atom, Empty, Union, DisjointUnion, Product]


def gr_eval(d: Descriptor) -> Ordinal2:
    if isinstance(d, Atom):
        return Ordinal2(d.rho_k, d.rho_f)
    if isinstance(d, Empty):
        return BOTTOM
    if isinstance(d, (Union, DisjointUnion)):
        return ord_max(*(gr_eval(c) for c in d.children))
    if isinstance(d, Product):
        return gr_eval(d.left) + gr_eval(d.right)
    raise TypeError(f"not a descriptor: {d!r}")


def gd_eval(d: Descriptor) -> int:
    if isinstance(d, Atom):
        return d.d_f
    if isinstance(d, Empty):
        return 0
    if isinstance(d, DisjointUnion):
        top = gr_eval(d)
        if top.is_bottom:
            return 0
        return sum(gd_eval(c) for c in d.children if gr_eval(c) == top)
    if isinstance(d, Union):
        top = gr_eval(d)
        tied = [c for c in d.children if gr_eval(c) == top]
        if top.is_bottom:
            return 0
        if len(tied) == 1:
            return gd_eval(tied[0])
        if len(tied) > 2:
            raise PreconditionError("overlaps of more than two equal-rank children must be declared by nesting")
        if d.overlap is None:
            raise PreconditionError("union of equal-rank children needs a declared overlap degree")
        return gd_eval(tied[0]) + gd_eval(tied[1]) - d.overlap
    if isinstance(d, Product):
        if gr_eval(d).is_bottom:
            return 0
        raise GencharError("degree of a product is not determined by the rank laws")
    raise TypeError(f"not a descriptor: {d!r}")


def descriptor_str(d: Descriptor) -> str:
    if isinstance(d, Atom):
        return f"atom({d.rho_k},{d.d_k},{d.rho_f},{d.d_f})"
    if isinstance(d, Empty):
        return "empty()"
    if isinstance(d, Union):
        inner = ", ".join(descriptor_str(c) for c in d.children)
        return f"union({inner}" + (f", overlap={d.overlap})" if d.overlap is not None else ")")
    if isinstance(d, DisjointUnion):
        return "dunion(" + ", ".join(descriptor_str(c) for c in d.children) + ")"
    return f"prod({descriptor_str(d.left)}, {descriptor_str(d.right)})"


def _build(node: ast.AST) -> Descriptor:
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name):
        raise ParseError("expected atom(...), empty(), union(...), dunion(...) or prod(...)")
    name = node.func.id
    kw = {k.arg: k.value for k in node.keywords}
    if name == "atom":
        vals = [_int(a) for a in node.args]
        if len(vals) != 4 or kw:
            raise ParseError("atom takes four integers")
        try:
            return Atom(*vals)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if name == "empty" and not node.args and not kw:
        return Empty()
    kids = tuple(_build(a) for a in node.args)
    if name == "prod" and len(kids) >= 2 and not kw:
        out = kids[0]
        for k in kids[1:]:
            out = Product(out, k)
        return out
    if name == "union" and kids and set(kw) <= {"overlap"}:
        return Union(kids, _int(kw["overlap"]) if "overlap" in kw else None)
    if name == "dunion" and kids and not kw:
        return DisjointUnion(kids)
    raise ParseError(f"bad descriptor node {name!r}")


def _int(node: ast.AST) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    raise ParseError("expected an integer literal")


def parse_descriptor(text: str) -> Descriptor:
    """Parse e.g. ``prod(atom(1,1,0,1), union(atom(0,1,2,3), empty()))``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse descriptor: {exc.msg}") from None
    return _build(tree.body)
